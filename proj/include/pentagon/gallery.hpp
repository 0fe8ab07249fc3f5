#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "pentagon/hopf.hpp"
#include "pentagon/tensor.hpp"

namespace pentagon::gallery {

/// I_n (x) I_n.
Tensor2 trivial(Field f, std::size_t n = 1);
/// sum_i e_ii (x) A^{i-1} with A the cyclic shift e21 + e32 + ... + e1n.
Tensor2 cyclic(Field f, std::size_t n);
/// The shift matrix A used by cyclic().
Mat cyclic_shift(Field f, std::size_t n);
/// 16 x 16 solution whose H is the Sweedler algebra; char != 2.
Tensor2 sweedler4(Field f);

/// a, b in M_n with I (x) I + a (x) b a solution over F_2.
struct NilPair {
    Mat a;
    Mat b;
};
/// a = sum e_{2i-1,2i}, b = sum e_{2i,2i-1} in M_{2q}; a^2 = b^2 = 0, ab - ba = 1.
NilPair nilsol1_pair(Field f, std::size_t q);
/// a = [[I, X^{-1}], [X, I]], b = diag(I_q, 0); a^2 = 0, b^2 = b, ab - ba = a + 1.
NilPair nilsol2_pair(Field f, const Mat& x);
Tensor2 nilsol1(Field f, std::size_t q);
Tensor2 nilsol2(Field f, const Mat& x);

/// k[Z_n] on the basis 1, g, ..., g^{n-1}.
HopfData group_hopf(Field f, std::size_t n);
/// Sweedler's algebra on (1, g, x, gx), D(x) = x (x) g + 1 (x) x; char != 2.
HopfData sweedler_hopf(Field f);

/// Deterministic invertible n x n matrix: entries in [-3, 3] over Q, uniform
/// residues over F_p, redrawn until invertible.
Mat random_conjugator(std::size_t n, Field f, std::uint64_t seed);

struct GallerySpec {
    std::string name;
    Field field;
    std::optional<std::size_t> n;
    std::optional<std::size_t> q;
    std::optional<Mat> x;
    std::optional<std::uint64_t> seed;
};

using GalleryObject = std::variant<Tensor2, HopfData>;

/// Dispatch on name; throws BadParams on unknown names or violated constraints.
GalleryObject generate(const GallerySpec& spec);

}  // namespace pentagon::gallery
