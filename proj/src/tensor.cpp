#include "pentagon/tensor.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

Mat kron(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Tensor2::Tensor2(std::size_t n, Mat kron) : n_(n), kron_(std::move(kron)) {
    if (kron_.rows() != n * n || kron_.cols() != n * n)
        throw ShapeError("Tensor2 over M_" + std::to_string(n) + " needs a " + std::to_string(n * n) + "x" +
                         std::to_string(n * n) + " Kronecker matrix");
}

Tensor2 Tensor2::identity(Field f, std::size_t n) { return Tensor2(n, Mat::identity(f, n * n)); }

Tensor2 Tensor2::simple(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw ShapeMismatch("simple tensor factors");
    return Tensor2(a.rows(), pentagon::kron(a, b));
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
    if (a.n_ != b.n_) throw ShapeMismatch("tensor sizes differ");
    return Tensor2(a.n_, a.kron_ * b.kron_);
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
    if (a.n_ != b.n_) throw ShapeMismatch("tensor sizes differ");
    return Tensor2(a.n_, a.kron_ + b.kron_);
}

Tensor3::Tensor3(std::size_t n, Mat entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.rows() != n * n * n || entries_.cols() != n * n * n) throw ShapeError("Tensor3 shape");
}

Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
    if (a.n_ != b.n_) throw ShapeMismatch("tensor sizes differ");
    return Tensor3(a.n_, a.entries_ * b.entries_);
}

Tensor3 leg_embed(const Tensor2& t, Leg leg) {
    const std::size_t n = t.n();
    const Field f = t.field();
    const Mat id = Mat::identity(f, n);
    switch (leg) {
        case Leg::L12:
            return Tensor3(n, kron(t.kron(), id));
        case Leg::L23:
            return Tensor3(n, kron(id, t.kron()));
        case Leg::L13: {
            Mat out(f, n * n * n, n * n * n);
            const Mat& k = t.kron();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t kk = 0; kk < n; ++kk)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t l = 0; l < n; ++l) {
                            const Scalar& v = k(i * n + kk, j * n + l);
                            if (v.is_zero()) continue;
                            for (std::size_t a = 0; a < n; ++a)
                                out((i * n + a) * n + kk, (j * n + a) * n + l) = v;
                        }
            return Tensor3(n, std::move(out));
        }
    }
    throw ShapeError("unknown leg");
}

Mat coefficient_matrix(const Tensor2& t) {
    const std::size_t n = t.n();
    Mat c(t.field(), n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) c(i * n + j, k * n + l) = t.kron()(i * n + k, j * n + l);
    return c;
}

Tensor2 from_coefficient_matrix(std::size_t n, const Mat& c) {
    if (c.rows() != n * n || c.cols() != n * n) throw ShapeMismatch("coefficient matrix shape");
    Mat k(c.field(), n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t kk = 0; kk < n; ++kk)
                for (std::size_t l = 0; l < n; ++l) k(i * n + kk, j * n + l) = c(i * n + j, kk * n + l);
    return Tensor2(n, std::move(k));
}

BlockArray blocks(const Tensor2& t) {
    const std::size_t n = t.n();
    BlockArray out(n, std::vector<Mat>(n, Mat(t.field(), n, n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) out[i][j](k, l) = t.kron()(i * n + k, j * n + l);
    return out;
}

Tensor2 from_blocks(const BlockArray& b) {
    const std::size_t n = b.size();
    if (n == 0) throw ShapeMismatch("empty block array");
    const Field f = b[0].empty() ? Field{} : b[0][0].field();
    Mat k(f, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i].size() != n) throw ShapeMismatch("block row " + std::to_string(i + 1) + " does not have n blocks");
        for (std::size_t j = 0; j < n; ++j) {
            const Mat& blk = b[i][j];
            if (blk.rows() != n || blk.cols() != n)
                throw ShapeMismatch("block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not n x n");
            if (!(blk.field() == f)) throw FieldMismatch("blocks over different fields");
            for (std::size_t kk = 0; kk < n; ++kk)
                for (std::size_t l = 0; l < n; ++l) k(i * n + kk, j * n + l) = blk(kk, l);
        }
    }
    return Tensor2(n, std::move(k));
}

Tensor2 conjugate_action(const Tensor2& t, const Mat& u) {
    if (!u.is_square() || u.rows() != t.n()) throw ShapeMismatch("conjugator must be n x n");
    const Mat uinv = invert(u);
    return Tensor2(t.n(), kron(u, u) * t.kron() * kron(uinv, uinv));
}

Tensor2 inverse(const Tensor2& t) { return Tensor2(t.n(), invert(t.kron())); }

Mat mat_of(Field f, std::size_t n, const Vec& v) { return Mat::from_vec(f, n, n, v); }

Mat tensor_coordinates(const Tensor2& t, const SpanCoordinates& left, const SpanCoordinates& right) {
    const Mat c = coefficient_matrix(t);
    const std::size_t len = c.rows();
    // c = L X with L the left family as columns; then X = G R^T row-wise.
    Mat x(t.field(), left.size(), len);
    for (std::size_t col = 0; col < len; ++col) {
        const Vec coords = left.coords(c.col(col));
        for (std::size_t i = 0; i < left.size(); ++i) x(i, col) = coords[i];
    }
    Mat g(t.field(), left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        const Vec coords = right.coords(x.row(i));
        for (std::size_t j = 0; j < right.size(); ++j) g(i, j) = coords[j];
    }
    return g;
}

Tensor2 tensor_from_coordinates(std::size_t n, const Mat& g, const std::vector<Mat>& left,
                                const std::vector<Mat>& right) {
    Mat acc(g.field(), n * n, n * n);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!g(i, j).is_zero()) acc += g(i, j) * kron(left[i], right[j]);
    return Tensor2(n, std::move(acc));
}

}  // namespace pentagon
