#pragma once

#include <cstddef>
#include <vector>

#include "pentagon/matrix.hpp"

namespace pentagon {

struct RrefResult {
    std::size_t rank = 0;
    /// 0-based, strictly increasing.
    std::vector<std::size_t> pivot_cols;
    Mat reduced;
    /// cols - rank vectors; vector t sets the t-th free variable to 1, the
    /// other free variables to 0, and solves for the pivots.
    std::vector<Vec> nullspace_basis;
};

/// Reduced row-echelon form by leftmost-pivot Gauss-Jordan elimination.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Solutions x of m x = 0, in the free-variable parametrization of rref.
std::vector<Vec> nullspace(const Mat& m);

/// Throws ShapeMismatch for non-square, NotInvertible when rank < n.
Mat invert(const Mat& m);

/// Coordinates c with sum c_i basis_i = v. Throws DependentBasis or NotInSpan.
Vec coords_in_span(const Vec& v, const std::vector<Vec>& basis);

/// Reusable coordinate extraction for a fixed independent family: the row
/// operations reducing the basis are computed once.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    /// Throws DependentBasis.
    SpanCoordinates(Field f, std::size_t length, std::vector<Vec> basis);

    std::size_t size() const { return basis_.size(); }
    std::size_t length() const { return length_; }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Throws NotInSpan.
    Vec coords(const Vec& v) const;
    bool contains(const Vec& v) const;

private:
    bool try_coords(const Vec& v, Vec& out) const;

    Field field_;
    std::size_t length_ = 0;
    std::vector<Vec> basis_;
    // ops_ * [basis as columns] = [I_k ; 0].
    Mat ops_;
};

struct RankFactorization {
    Mat left;   ///< rows x r, the columns of C at the pivot columns of rref(C)
    Mat right;  ///< r x cols, the nonzero rows of rref(C)
};

/// C = left * right with r = rank(C).
RankFactorization rank_factorize(const Mat& c);

/// Basis (rref row space) of the span of a family of vectors; empty for {0}.
std::vector<Vec> span_basis(Field f, std::size_t length, const std::vector<Vec>& vectors);

}  // namespace pentagon
