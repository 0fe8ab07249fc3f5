#pragma once

#include <cstddef>
#include <vector>

#include "pentagon/linalg.hpp"
#include "pentagon/matrix.hpp"

namespace pentagon {

/// Kronecker product: result[(i,k),(j,l)] = a[i,j] * b[k,l], pair index i*rows(b)+k.
Mat kron(const Mat& a, const Mat& b);

/// Element of M_n (x) M_n, stored as its n^2 x n^2 Kronecker matrix.
class Tensor2 {
public:
    Tensor2() = default;
    /// Throws ShapeError unless kron is n^2 x n^2.
    Tensor2(std::size_t n, Mat kron);

    static Tensor2 identity(Field f, std::size_t n);
    static Tensor2 simple(const Mat& a, const Mat& b);

    std::size_t n() const { return n_; }
    const Field& field() const { return kron_.field(); }
    const Mat& kron() const { return kron_; }

    /// Product in the algebra M_n (x) M_n.
    friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);
    friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
    friend bool operator==(const Tensor2& a, const Tensor2& b) = default;

private:
    std::size_t n_ = 0;
    Mat kron_;
};

/// Element of M_n (x) M_n (x) M_n as an n^3 x n^3 matrix, triple index (i*n+k)*n+s.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t n, Mat entries);

    std::size_t n() const { return n_; }
    const Mat& entries() const { return entries_; }

    friend Tensor3 operator*(const Tensor3& a, const Tensor3& b);
    friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

private:
    std::size_t n_ = 0;
    Mat entries_;
};

enum class Leg { L12, L13, L23 };

Tensor3 leg_embed(const Tensor2& t, Leg leg);

/// Reshuffle with result[(i,j),(k,l)] = entry (k,l) of block A_ij; its rank is
/// the tensor length.
Mat coefficient_matrix(const Tensor2& t);
Tensor2 from_coefficient_matrix(std::size_t n, const Mat& c);

/// blocks[i][j] = A_ij where T = sum e_ij (x) A_ij.
using BlockArray = std::vector<std::vector<Mat>>;
BlockArray blocks(const Tensor2& t);
/// Throws ShapeMismatch (wrong counts or sizes) or FieldMismatch.
Tensor2 from_blocks(const BlockArray& b);

/// (u (x) u) T (u (x) u)^{-1}; throws NotInvertible.
Tensor2 conjugate_action(const Tensor2& t, const Mat& u);

/// Throws NotInvertible.
Tensor2 inverse(const Tensor2& t);

/// Matrix of M_n viewed as a vector of k^{n^2} (row-major) and back.
inline const Vec& vec_of(const Mat& m) { return m.entries(); }
Mat mat_of(Field f, std::size_t n, const Vec& v);

/// Coefficients G with T = sum_ij G[i,j] left_i (x) right_j, where left/right
/// are independent families in M_n given as vec() coordinates. Throws NotInSpan.
Mat tensor_coordinates(const Tensor2& t, const SpanCoordinates& left, const SpanCoordinates& right);

/// sum_ij g[i,j] left_i (x) right_j
Tensor2 tensor_from_coordinates(std::size_t n, const Mat& g, const std::vector<Mat>& left,
                                const std::vector<Mat>& right);

}  // namespace pentagon
