#include "pentagon/gallery.hpp"

#include <random>

#include "pentagon/errors.hpp"

namespace pentagon::gallery {

namespace {

void require_not_char2(Field f, const char* what) {
    if (f.characteristic() == 2) throw BadParams(std::string(what) + " needs characteristic != 2");
}

void require_char2(Field f, const char* what) {
    if (f.characteristic() != 2) throw BadParams(std::string(what) + " needs characteristic 2");
}

Mat block2(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br) {
    const std::size_t q = tl.rows();
    Mat out(tl.field(), 2 * q, 2 * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            out(i, j) = tl(i, j);
            out(i, q + j) = tr(i, j);
            out(q + i, j) = bl(i, j);
            out(q + i, q + j) = br(i, j);
        }
    return out;
}

Tensor2 one_plus(const NilPair& p) {
    return Tensor2::identity(p.a.field(), p.a.rows()) + Tensor2::simple(p.a, p.b);
}

std::size_t need(const std::optional<std::size_t>& v, const char* what) {
    if (!v || *v == 0) throw BadParams(std::string(what) + " must be a positive integer");
    return *v;
}

}  // namespace

Tensor2 trivial(Field f, std::size_t n) {
    if (n == 0) throw BadParams("n must be positive");
    return Tensor2::identity(f, n);
}

Mat cyclic_shift(Field f, std::size_t n) {
    Mat a(f, n, n);
    for (std::size_t i = 0; i < n; ++i) a((i + 1) % n, i) = Scalar::one(f);
    return a;
}

Tensor2 cyclic(Field f, std::size_t n) {
    if (n == 0) throw BadParams("n must be positive");
    const Mat a = cyclic_shift(f, n);
    Mat power = Mat::identity(f, n);
    Tensor2 r(n, Mat(f, n * n, n * n));
    for (std::size_t i = 0; i < n; ++i) {
        r = r + Tensor2::simple(Mat::unit(f, n, i, i), power);
        power = power * a;
    }
    return r;
}

Tensor2 sweedler4(Field f) {
    require_not_char2(f, "sweedler4");
    auto e = [&](std::size_t i, std::size_t j) { return Mat::unit(f, 4, i - 1, j - 1); };
    const Mat id = Mat::identity(f, 4);
    const Mat g = e(1, 2) + e(2, 1) + e(3, 4) + e(4, 3);
    return Tensor2::simple(e(1, 1) + e(4, 4), id) + Tensor2::simple(e(2, 2) + e(3, 3), g) +
           Tensor2::simple(e(1, 3), e(3, 1) - e(4, 2)) + Tensor2::simple(e(2, 4), e(4, 1) - e(3, 2));
}

NilPair nilsol1_pair(Field f, std::size_t q) {
    require_char2(f, "nilsol1");
    if (q == 0) throw BadParams("q must be positive");
    const std::size_t n = 2 * q;
    NilPair p{Mat(f, n, n), Mat(f, n, n)};
    for (std::size_t i = 0; i < q; ++i) {
        p.a(2 * i, 2 * i + 1) = Scalar::one(f);
        p.b(2 * i + 1, 2 * i) = Scalar::one(f);
    }
    return p;
}

NilPair nilsol2_pair(Field f, const Mat& x) {
    require_char2(f, "nilsol2");
    if (!x.is_square() || x.rows() == 0) throw BadParams("X must be a nonempty square matrix");
    if (!(x.field() == f)) throw BadParams("X is over a different field");
    Mat xinv;
    try {
        xinv = invert(x);
    } catch (const NotInvertible&) {
        throw BadParams("X is not invertible");
    }
    const std::size_t q = x.rows();
    const Mat id = Mat::identity(f, q);
    const Mat zero(f, q, q);
    return NilPair{block2(id, xinv, x, id), block2(id, zero, zero, zero)};
}

Tensor2 nilsol1(Field f, std::size_t q) { return one_plus(nilsol1_pair(f, q)); }
Tensor2 nilsol2(Field f, const Mat& x) { return one_plus(nilsol2_pair(f, x)); }

HopfData group_hopf(Field f, std::size_t n) {
    if (n == 0) throw BadParams("n must be positive");
    HopfData h = HopfData::zeros(f, n);
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < n; ++i) {
        h.basis_names[i] = i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
        for (std::size_t j = 0; j < n; ++j) h.mult(i, j, (i + j) % n) = one;
        h.comult(i, i, i) = one;
        h.counit[i] = one;
        h.antipode((n - i) % n, i) = one;
    }
    h.unit[0] = one;
    return h;
}

HopfData sweedler_hopf(Field f) {
    require_not_char2(f, "sweedler_hopf");
    enum { E = 0, G = 1, X = 2, GX = 3 };
    HopfData h = HopfData::zeros(f, 4);
    h.basis_names = {"1", "g", "x", "gx"};
    const Scalar one = Scalar::one(f);
    const Scalar neg = -one;
    for (std::size_t i = 0; i < 4; ++i) {
        h.mult(E, i, i) = one;
        h.mult(i, E, i) = one;
    }
    h.mult(G, G, E) = one;
    h.mult(G, X, GX) = one;
    h.mult(G, GX, X) = one;
    h.mult(X, G, GX) = neg;
    h.mult(GX, G, X) = neg;
    h.unit[E] = one;

    h.comult(E, E, E) = one;
    h.comult(G, G, G) = one;
    h.comult(X, X, G) = one;
    h.comult(X, E, X) = one;
    h.comult(GX, GX, E) = one;
    h.comult(GX, G, GX) = one;
    h.counit[E] = one;
    h.counit[G] = one;

    h.antipode(E, E) = one;
    h.antipode(G, G) = one;
    h.antipode(GX, X) = one;
    h.antipode(X, GX) = neg;
    return h;
}

Mat random_conjugator(std::size_t n, Field f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> small(-3, 3);
    std::uniform_int_distribution<std::uint64_t> residue(0, f.is_rational() ? 0 : f.characteristic() - 1);
    for (;;) {
        Mat u(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                u(i, j) = f.is_rational() ? Scalar(f, small(rng))
                                          : Scalar(f, static_cast<long long>(residue(rng)));
        if (rank(u) == n) return u;
    }
}

GalleryObject generate(const GallerySpec& s) {
    const Field f = s.field;
    if (s.name == "trivial") return trivial(f, s.n.value_or(1));
    if (s.name == "cyclic") return cyclic(f, need(s.n, "n"));
    if (s.name == "sweedler4") return sweedler4(f);
    if (s.name == "nilsol1") {
        if (s.n && !s.q) {
            if (*s.n % 2 != 0) throw BadParams("nilsol1 needs even n");
            return nilsol1(f, *s.n / 2);
        }
        const std::size_t q = need(s.q, "q");
        if (s.n && *s.n != 2 * q) throw BadParams("nilsol1 needs n = 2q");
        return nilsol1(f, q);
    }
    if (s.name == "nilsol2") {
        if (s.x) return nilsol2(f, *s.x);
        require_char2(f, "nilsol2");
        const std::size_t q = need(s.q, "q");
        if (s.seed) return nilsol2(f, random_conjugator(q, f, *s.seed));
        return nilsol2(f, Mat::identity(f, q));
    }
    if (s.name == "group_hopf") return group_hopf(f, need(s.n, "n"));
    if (s.name == "sweedler_hopf") return sweedler_hopf(f);
    throw BadParams("unknown gallery object '" + s.name + "'");
}

}  // namespace pentagon::gallery
