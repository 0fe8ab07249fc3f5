#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "pentagon/field.hpp"

namespace pentagon {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

/// Dense row-major matrix over a single Field.
class Mat {
public:
    Mat() = default;
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    /// e_{ij} with 0-based indices.
    static Mat unit(Field f, std::size_t n, std::size_t i, std::size_t j);
    /// Row-major integer literal, mainly for tests and the gallery.
    static Mat from_ints(Field f, std::size_t rows, std::size_t cols, std::initializer_list<long long> vals);
    static Mat from_rows(Field f, const std::vector<std::vector<long long>>& rows);
    /// Reshape a row-major vector.
    static Mat from_vec(Field f, std::size_t rows, std::size_t cols, Vec entries);
    static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    /// Row-major flattening (the vec() used throughout for M_n as k^{n^2}).
    const Vec& entries() const { return data_; }

    Mat transpose() const;
    bool is_zero() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
    friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
    /// Matrix product; dispatches to the parallel kernel for large operands.
    friend Mat operator*(const Mat& a, const Mat& b);
    Vec operator*(const Vec& v) const;

    friend bool operator==(const Mat& a, const Mat& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

void require_same_field(const Mat& a, const Mat& b);

}  // namespace pentagon
