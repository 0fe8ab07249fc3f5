#pragma once

// Hot loops come in pairs: a serial reference and an OpenMP version. The
// parallel kernels must produce bit-identical results; the serial ones are
// kept as test oracles and as the benchmark baseline.

#include <cstddef>
#include <vector>

#include "pentagon/matrix.hpp"

namespace pentagon::kernels {

Mat multiply_serial(const Mat& a, const Mat& b);
Mat multiply_parallel(const Mat& a, const Mat& b);

/// Structure constants of a finite-dimensional algebra in sparse form:
/// terms[i * dim + j] lists (k, c) with e_i e_j = sum c e_k.
struct SparseMult {
    struct Term {
        std::size_t index;
        Scalar coeff;
    };
    std::size_t dim = 0;
    std::vector<std::vector<Term>> terms;
};

/// An element of D (x) D (x) D for an algebra D of dimension d, stored densely
/// with index (x * d + y) * d + z.
using CubeElement = Vec;

/// Product in D (x) D (x) D: (x(x)y(x)z)(x'(x)y'(x)z') = xx' (x) yy' (x) zz'.
CubeElement cube_multiply_serial(const SparseMult& mult, const CubeElement& a, const CubeElement& b);
CubeElement cube_multiply_parallel(const SparseMult& mult, const CubeElement& a, const CubeElement& b);

/// Operands with fewer than this many multiply-adds stay serial.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

int max_threads();

}  // namespace pentagon::kernels
