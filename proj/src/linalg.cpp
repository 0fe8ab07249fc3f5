#include "pentagon/linalg.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

// In-place Gauss-Jordan on the first `ncols` columns; the remaining columns
// ride along. Returns the pivot columns.
std::vector<std::size_t> gauss_jordan(Mat& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar factor = -m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j).is_zero()) continue;
                m(i, j).add_mul(factor, m(r, j));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.reduced = m;
    res.pivot_cols = gauss_jordan(res.reduced, m.cols());
    res.rank = res.pivot_cols.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : res.pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = unit_vec(m.field(), m.cols(), free);
        for (std::size_t r = 0; r < res.rank; ++r) v[res.pivot_cols[r]] = -res.reduced(r, free);
        res.nullspace_basis.push_back(std::move(v));
    }
    return res;
}

std::size_t rank(const Mat& m) {
    Mat w = m;
    return gauss_jordan(w, m.cols()).size();
}

std::vector<Vec> nullspace(const Mat& m) { return rref(m).nullspace_basis; }

Mat invert(const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("invert needs a square matrix");
    const std::size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const auto piv = gauss_jordan(aug, n);
    if (piv.size() < n)
        throw NotInvertible("rank " + std::to_string(piv.size()) + " < " + std::to_string(n));
    Mat inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

SpanCoordinates::SpanCoordinates(Field f, std::size_t length, std::vector<Vec> basis)
    : field_(f), length_(length), basis_(std::move(basis)) {
    const std::size_t k = basis_.size();
    Mat aug(f, length, k + length);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis_[j].size() != length) throw ShapeMismatch("basis vector length");
        for (std::size_t i = 0; i < length; ++i) aug(i, j) = basis_[j][i];
    }
    for (std::size_t i = 0; i < length; ++i) aug(i, k + i) = Scalar::one(f);
    const auto piv = gauss_jordan(aug, k);
    if (piv.size() < k) throw DependentBasis("family of " + std::to_string(k) + " vectors has rank " +
                                             std::to_string(piv.size()));
    ops_ = Mat(f, length, length);
    for (std::size_t i = 0; i < length; ++i)
        for (std::size_t j = 0; j < length; ++j) ops_(i, j) = aug(i, k + j);
}

bool SpanCoordinates::try_coords(const Vec& v, Vec& out) const {
    if (v.size() != length_) throw ShapeMismatch("vector length differs from span ambient dimension");
    const Vec w = ops_ * v;
    for (std::size_t i = basis_.size(); i < length_; ++i)
        if (!w[i].is_zero()) return false;
    out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(basis_.size()));
    return true;
}

Vec SpanCoordinates::coords(const Vec& v) const {
    Vec out;
    if (!try_coords(v, out)) throw NotInSpan("vector lies outside the span of the given basis");
    return out;
}

bool SpanCoordinates::contains(const Vec& v) const {
    Vec out;
    return try_coords(v, out);
}

Vec coords_in_span(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) {
        if (is_zero(v)) return {};
        throw NotInSpan("nonzero vector and empty basis");
    }
    const Field f = basis[0].empty() ? Field{} : basis[0][0].field();
    return SpanCoordinates(f, v.size(), basis).coords(v);
}

RankFactorization rank_factorize(const Mat& c) {
    const RrefResult rr = rref(c);
    RankFactorization out{Mat(c.field(), c.rows(), rr.rank), Mat(c.field(), rr.rank, c.cols())};
    for (std::size_t t = 0; t < rr.rank; ++t) {
        for (std::size_t i = 0; i < c.rows(); ++i) out.left(i, t) = c(i, rr.pivot_cols[t]);
        for (std::size_t j = 0; j < c.cols(); ++j) out.right(t, j) = rr.reduced(t, j);
    }
    return out;
}

std::vector<Vec> span_basis(Field f, std::size_t length, const std::vector<Vec>& vectors) {
    Mat m(f, vectors.size(), length);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
    const RrefResult rr = rref(m);
    std::vector<Vec> out;
    for (std::size_t r = 0; r < rr.rank; ++r) out.push_back(rr.reduced.row(r));
    return out;
}

}  // namespace pentagon
