#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pentagon/linalg.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

/// A finite-dimensional Hopf algebra by structure constants on a basis e_0..e_{dim-1}:
///   e_i e_j = sum_k mult(i,j,k) e_k        1 = sum_i unit[i] e_i
///   D(e_i)  = sum_jk comult(i,j,k) e_j(x)e_k   eps(e_i) = counit[i]
///   S(e_j)  = sum_i antipode(i,j) e_i
struct HopfData {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Vec mult_table;
    Vec unit;
    Vec comult_table;
    Vec counit;
    Mat antipode;

    /// All-zero structure of the given dimension, named e1..e<dim>.
    static HopfData zeros(Field f, std::size_t dim);

    Scalar& mult(std::size_t i, std::size_t j, std::size_t k) { return mult_table[(i * dim + j) * dim + k]; }
    const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const { return mult_table[(i * dim + j) * dim + k]; }
    Scalar& comult(std::size_t i, std::size_t j, std::size_t k) { return comult_table[(i * dim + j) * dim + k]; }
    const Scalar& comult(std::size_t i, std::size_t j, std::size_t k) const {
        return comult_table[(i * dim + j) * dim + k];
    }

    Vec product(const Vec& x, const Vec& y) const;
    /// D(x) as a dim x dim coefficient matrix on e_j (x) e_k.
    Mat coproduct(const Vec& x) const;
    Scalar counit_of(const Vec& x) const;
    Vec antipode_of(const Vec& x) const { return antipode * x; }

    /// Same five structure tensors (names are ignored).
    bool same_structure(const HopfData& o) const;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Empty when passed; otherwise the first violating index.
    std::string witness;
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// Associativity, unit, coassociativity, counit, multiplicativity of D and eps,
/// and both antipode identities, each as an exact identity.
CheckReport check_hopf_axioms(const HopfData& l);

/// Transport along the basis change e'_j = sum_i t(i,j) e_i. Throws NotInvertible.
HopfData change_basis(const HopfData& l, const Mat& t);

/// The dual Hopf algebra on the dual basis (structure constants transposed).
HopfData dual(const HopfData& l);

/// A Hopf algebra realized inside M_n: carrier[i] is the matrix of basis element i.
struct HopfEmbedding {
    HopfData hopf;
    std::vector<Mat> carrier;
    SpanCoordinates span;

    /// Coordinates of a matrix in the carrier basis; throws NotInSpan.
    Vec coords(const Mat& x) const { return span.coords(x.entries()); }
    Mat element(const Vec& coords) const;
};

/// P(n,R) on a_basis with D(x) = R^{-1}(1(x)x)R. Throws ClosureViolation on a bug.
HopfEmbedding construct_p(const PentagonSolution& s);
/// H(n,R) on b_basis with D(y) = R(y(x)1)R^{-1}.
HopfEmbedding construct_h(const PentagonSolution& s);

/// A linear map between Hopf algebras; matrix is target.dim x source.dim.
struct LinearHopfMap {
    HopfData source;
    HopfData target;
    Mat matrix;
};

/// Bijectivity and compatibility with all structure maps, each reported separately.
CheckReport verify_candidate_hopf_iso(const LinearHopfMap& f);

/// The map f: P* -> H, f(p*) = sum <p*, R^1> R^2, built from R's coordinates
/// in a_basis (x) b_basis.
LinearHopfMap dual_iso_f(const PentagonSolution& s);
/// True iff dual_iso_f is a Hopf algebra isomorphism.
bool check_dual_iso_f(const PentagonSolution& s);

/// Basis of {t | t x = eps(x) t for all x}.
std::vector<Vec> right_integrals(const HopfData& l);

struct IntegralResult {
    Vec coords;  ///< in a_basis
    Mat element;
    bool is_right_integral = false;
};

/// pi_P(a) for a right R-invariant a: write a = sum_k c_k x_k with {c_k} the
/// rref basis of A^{R,r} and x_k in P, then return x_0. Throws NotInvariant.
IntegralResult integral_from_invariant(const PentagonSolution& s, const Mat& a);

}  // namespace pentagon
