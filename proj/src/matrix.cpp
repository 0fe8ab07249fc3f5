#include "pentagon/matrix.hpp"

#include <sstream>

#include "pentagon/errors.hpp"
#include "pentagon/kernels.hpp"

namespace pentagon {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::unit(Field f, std::size_t n, std::size_t i, std::size_t j) {
    Mat m(f, n, n);
    m(i, j) = Scalar::one(f);
    return m;
}

Mat Mat::from_ints(Field f, std::size_t rows, std::size_t cols, std::initializer_list<long long> vals) {
    if (vals.size() != rows * cols) throw ShapeMismatch("literal has wrong entry count");
    Mat m(f, rows, cols);
    std::size_t k = 0;
    for (long long v : vals) m.data_[k++] = Scalar(f, v);
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

Mat Mat::from_vec(Field f, std::size_t rows, std::size_t cols, Vec entries) {
    if (entries.size() != rows * cols) throw ShapeMismatch("cannot reshape vector");
    Mat m;
    m.field_ = f;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const { return pentagon::is_zero(data_); }

void require_same_field(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatch(a.field().to_string() + " vs " + b.field().to_string());
}

Mat& Mat::operator+=(const Mat& o) {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.rows() * a.cols() * b.cols() >= kernels::kParallelThreshold) return kernels::multiply_parallel(a, b);
    return kernels::multiply_serial(a, b);
}

Vec Mat::operator*(const Vec& v) const {
    if (v.size() != cols_) throw ShapeMismatch("matrix-vector product");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].add_mul((*this)(i, j), v[j]);
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace pentagon
