#include "pentagon/kernels.hpp"

#include <omp.h>

#include "pentagon/errors.hpp"

namespace pentagon::kernels {

namespace {

void check_product(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions differ in matrix product");
}

// Operands are lowered once per product: over Q to integer matrices with a
// common denominator (one canonicalization per output entry instead of one per
// multiply-add), over F_p to raw residues.
struct Lowered {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> num;  // Q: entry = num / scale
    mpz_class scale = 1;
    std::vector<std::uint64_t> res;  // F_p
};

Lowered lower(const Mat& m) {
    Lowered l{m.rows(), m.cols(), {}, 1, {}};
    const auto& e = m.entries();
    if (m.field().is_rational()) {
        for (const auto& x : e) mpz_lcm(l.scale.get_mpz_t(), l.scale.get_mpz_t(), x.rational().get_den_mpz_t());
        l.num.resize(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            const mpq_class& q = e[k].rational();
            if (sgn(q) == 0) continue;
            mpz_divexact(l.num[k].get_mpz_t(), l.scale.get_mpz_t(), q.get_den_mpz_t());
            l.num[k] *= q.get_num();
        }
    } else {
        l.res.resize(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) l.res[k] = e[k].residue();
    }
    return l;
}

// i-k-j order with a zero skip: gallery matrices are mostly 0/1 and sparse.
void multiply_row(const Lowered& a, const Lowered& b, const mpz_class& scale, Field f, Mat& c, std::size_t row) {
    const std::size_t n = b.cols;
    if (f.is_rational()) {
        std::vector<mpz_class> acc(n);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const mpz_class& aik = a.num[row * a.cols + k];
            if (sgn(aik) == 0) continue;
            const mpz_class* brow = &b.num[k * n];
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(brow[j]) != 0) mpz_addmul(acc[j].get_mpz_t(), aik.get_mpz_t(), brow[j].get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(acc[j]) != 0) c(row, j) = Scalar(f, mpq_class(acc[j], scale));
        return;
    }
    const std::uint64_t p = f.characteristic();
    std::vector<unsigned __int128> acc(n, 0);
    for (std::size_t k = 0; k < a.cols; ++k) {
        const std::uint64_t aik = a.res[row * a.cols + k];
        if (aik == 0) continue;
        const std::uint64_t* brow = &b.res[k * n];
        for (std::size_t j = 0; j < n; ++j)
            if (brow[j] != 0) acc[j] = (acc[j] + static_cast<unsigned __int128>(aik) * brow[j]) % p;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (acc[j] != 0) c(row, j) = Scalar(f, static_cast<long long>(acc[j]));
}

struct NonZero {
    std::size_t x, y, z;
    const Scalar* coeff;
};

std::vector<NonZero> nonzeros(const CubeElement& v, std::size_t d) {
    std::vector<NonZero> out;
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        out.push_back({idx / (d * d), (idx / d) % d, idx % d, &v[idx]});
    }
    return out;
}

void accumulate(const SparseMult& mult, const NonZero& l, const std::vector<NonZero>& right, CubeElement& out,
                Scalar& c12, Scalar& c123) {
    const std::size_t d = mult.dim;
    for (const auto& r : right) {
        const auto& tx = mult.terms[l.x * d + r.x];
        const auto& ty = mult.terms[l.y * d + r.y];
        const auto& tz = mult.terms[l.z * d + r.z];
        if (tx.empty() || ty.empty() || tz.empty()) continue;
        Scalar lr = *l.coeff * *r.coeff;
        for (const auto& a : tx) {
            for (const auto& b : ty) {
                c12 = lr * a.coeff;
                c12 *= b.coeff;
                for (const auto& c : tz) {
                    c123 = c12;
                    c123 *= c.coeff;
                    out[(a.index * d + b.index) * d + c.index] += c123;
                }
            }
        }
    }
}

void check_cube(const SparseMult& mult, const CubeElement& a, const CubeElement& b) {
    const std::size_t d = mult.dim;
    if (a.size() != d * d * d || b.size() != d * d * d) throw ShapeMismatch("cube element size");
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

Mat multiply_serial(const Mat& a, const Mat& b) {
    check_product(a, b);
    Mat c(a.field(), a.rows(), b.cols());
    const Lowered la = lower(a), lb = lower(b);
    const mpz_class scale = la.scale * lb.scale;
    for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(la, lb, scale, a.field(), c, i);
    return c;
}

Mat multiply_parallel(const Mat& a, const Mat& b) {
    check_product(a, b);
    Mat c(a.field(), a.rows(), b.cols());
    const Lowered la = lower(a), lb = lower(b);
    const mpz_class scale = la.scale * lb.scale;
    const Field f = a.field();
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(la, lb, scale, f, c, static_cast<std::size_t>(i));
    return c;
}

CubeElement cube_multiply_serial(const SparseMult& mult, const CubeElement& a, const CubeElement& b) {
    check_cube(mult, a, b);
    const Field f = a.empty() ? Field{} : a[0].field();
    CubeElement out = zero_vec(f, a.size());
    const auto left = nonzeros(a, mult.dim);
    const auto right = nonzeros(b, mult.dim);
    Scalar c12(f), c123(f);
    for (const auto& l : left) accumulate(mult, l, right, out, c12, c123);
    return out;
}

CubeElement cube_multiply_parallel(const SparseMult& mult, const CubeElement& a, const CubeElement& b) {
    check_cube(mult, a, b);
    const Field f = a.empty() ? Field{} : a[0].field();
    const auto left = nonzeros(a, mult.dim);
    const auto right = nonzeros(b, mult.dim);
    const int nthreads = omp_get_max_threads();
    std::vector<CubeElement> partial(static_cast<std::size_t>(nthreads));
    const auto nleft = static_cast<std::ptrdiff_t>(left.size());
#pragma omp parallel num_threads(nthreads)
    {
        const auto tid = static_cast<std::size_t>(omp_get_thread_num());
        CubeElement local = zero_vec(f, a.size());
        Scalar c12(f), c123(f);
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < nleft; ++i)
            accumulate(mult, left[static_cast<std::size_t>(i)], right, local, c12, c123);
        partial[tid] = std::move(local);
    }
    // Fixed reduction order; exact arithmetic makes the result order-free anyway.
    CubeElement out = zero_vec(f, a.size());
    for (const auto& p : partial) {
        if (p.empty()) continue;
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!p[k].is_zero()) out[k] += p[k];
    }
    return out;
}

}  // namespace pentagon::kernels
