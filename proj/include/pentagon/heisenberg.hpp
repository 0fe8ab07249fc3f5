#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pentagon/hopf.hpp"
#include "pentagon/kernels.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

/// The smash product L # L* on the basis e_i # e_j* (index i*m + j), with
/// (h # h*)(g # g*) = h_(2) g # h* (h_(1) . g*) and <h . g*, h'> = <g*, h'h>.
struct HeisenbergDouble {
    HopfData base;
    std::size_t m = 0;    ///< dim L
    std::size_t dim = 0;  ///< m^2
    kernels::SparseMult mult;
    Vec unit;
    /// Elements of D (x) D, dense, index X * dim + Y.
    Vec canon;
    Vec canon_inv;

    std::size_t index(std::size_t i, std::size_t j) const { return i * m + j; }
    Vec product(const Vec& x, const Vec& y) const;
    /// Product in D (x) D.
    Vec pair_product(const Vec& x, const Vec& y) const;
};

/// Throws AxiomsFail if L is not a Hopf algebra.
HeisenbergDouble build_double(const HopfData& l);

struct CanonicalPair {
    Vec canon;
    Vec canon_inv;
};

/// sum_i (e_i # eps) (x) (1 # e_i*) and sum_i (S(e_i) # eps) (x) (1 # e_i*);
/// throws InverseFails if their product is not 1 (x) 1.
CanonicalPair canonical_element(const HeisenbergDouble& d);

/// canon^12 canon^13 canon^23 = canon^23 canon^12 in D (x) D (x) D.
bool verify_double_pentagon(const HeisenbergDouble& d, bool parallel = true);

struct RegularRep {
    /// rep[X] is the m x m matrix with row r = coordinates of e_r . X, where
    /// x . (e_i # e_j*) = <e_j*, x_(1)> x_(2) e_i.
    std::vector<Mat> rep;
    bool multiplicative = false;
    bool bijective = false;
};

RegularRep regular_rep(const HeisenbergDouble& d);

/// (rep (x) rep)(canon) as a solution in M_m (x) M_m, analyzed. Throws RepNotBijective.
PentagonSolution matrix_solution(const HopfData& l);

struct SplitReport {
    CheckReport checks;
    std::size_t length = 0;
    bool passed() const { return checks.all_passed(); }
};

/// Compares L with P of its own matrix solution through e_i -> rep(e_i # eps).
/// With a conjugator u, the solution is first moved to (u(x)u) R (u(x)u)^{-1}
/// and the candidate to u rep(e_i # eps) u^{-1}.
SplitReport splitting_check(const HopfData& l, const std::optional<Mat>& conjugator = std::nullopt);

struct FMapResult {
    /// F(a_i # a_j*) = b_j a_i, indexed like the double.
    std::vector<Mat> images;
    bool is_algebra_map = false;
    bool recovers_r = false;
};

/// F: H(P) -> M_n for the double d of construct_p(s).hopf.
FMapResult heisenberg_map_f(const PentagonSolution& s, const HeisenbergDouble& d);

/// Linear map D' -> D induced by a basis change t of L (e'_j = sum_i t(i,j) e_i)
/// on the smash bases e'_i # e'_j*, as a dim x dim matrix.
Mat double_basis_change(const Mat& t);

}  // namespace pentagon
