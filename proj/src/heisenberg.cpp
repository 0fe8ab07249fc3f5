#include "pentagon/heisenberg.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

Vec embed_pair_into_cube(const HeisenbergDouble& d, const Vec& pair, int slot_of_unit) {
    const std::size_t n = d.dim;
    kernels::CubeElement out = zero_vec(d.base.field, n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Scalar& c = pair[x * n + y];
            if (c.is_zero()) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (d.unit[z].is_zero()) continue;
                const Scalar v = c * d.unit[z];
                switch (slot_of_unit) {
                    case 3: out[(x * n + y) * n + z] = v; break;  // 12
                    case 2: out[(x * n + z) * n + y] = v; break;  // 13
                    default: out[(z * n + x) * n + y] = v; break;  // 23
                }
            }
        }
    return out;
}

Vec element_of_l_hash_eps(const HeisenbergDouble& d, std::size_t i) {
    Vec v = zero_vec(d.base.field, d.dim);
    for (std::size_t j = 0; j < d.m; ++j) v[d.index(i, j)] = d.base.counit[j];
    return v;
}

Mat apply_rep(const RegularRep& rr, const Vec& x, Field f, std::size_t m) {
    Mat out(f, m, m);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) out += x[k] * rr.rep[k];
    return out;
}

struct PushedSolution {
    HeisenbergDouble d;
    RegularRep rr;
    Tensor2 r;
};

PushedSolution push_canonical(const HopfData& l) {
    PushedSolution ps{build_double(l), {}, {}};
    ps.rr = regular_rep(ps.d);
    if (!ps.rr.bijective) throw RepNotBijective("regular Hopf-module representation is not bijective");
    if (!ps.rr.multiplicative) throw InternalError("regular representation is not multiplicative");
    const std::size_t m = l.dim;
    const std::size_t n = ps.d.dim;
    Mat acc(l.field, m * m, m * m);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Scalar& c = ps.d.canon[x * n + y];
            if (!c.is_zero()) acc += c * kron(ps.rr.rep[x], ps.rr.rep[y]);
        }
    ps.r = Tensor2(m, std::move(acc));
    return ps;
}

}  // namespace

Vec HeisenbergDouble::product(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(base.field, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < dim; ++b) {
            if (y[b].is_zero()) continue;
            const Scalar c = x[a] * y[b];
            for (const auto& t : mult.terms[a * dim + b]) out[t.index].add_mul(c, t.coeff);
        }
    }
    return out;
}

Vec HeisenbergDouble::pair_product(const Vec& x, const Vec& y) const {
    const std::size_t n = dim;
    Vec out = zero_vec(base.field, n * n);
    for (std::size_t a = 0; a < n * n; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < n * n; ++b) {
            if (y[b].is_zero()) continue;
            const Scalar c = x[a] * y[b];
            const auto& left = mult.terms[(a / n) * n + (b / n)];
            const auto& right = mult.terms[(a % n) * n + (b % n)];
            for (const auto& s : left) {
                const Scalar cs = c * s.coeff;
                for (const auto& t : right) out[s.index * n + t.index].add_mul(cs, t.coeff);
            }
        }
    }
    return out;
}

HeisenbergDouble build_double(const HopfData& l) {
    const CheckReport axioms = check_hopf_axioms(l);
    for (const auto& c : axioms.checks)
        if (!c.passed) throw AxiomsFail(c.name + ": " + c.witness);

    const std::size_t m = l.dim;
    const Field f = l.field;
    HeisenbergDouble d;
    d.base = l;
    d.m = m;
    d.dim = m * m;
    d.mult.dim = d.dim;
    d.mult.terms.assign(d.dim * d.dim, {});

    // (e_i # e_j*)(e_k # e_l*) = sum c_i^{pq} mu_{qk}^s mu_{tp}^l c_y^{jt} e_s # e_y*
    // left[i,k][p][s] = sum_q c_i^{pq} mu_{qk}^s,  right[j,l][p][y] = sum_t mu_{tp}^l c_y^{jt}
    std::vector<Mat> left(m * m, Mat(f, m, m)), right(m * m, Mat(f, m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t s = 0; s < m; ++s) {
                    Scalar acc(f);
                    for (std::size_t q = 0; q < m; ++q) acc.add_mul(l.comult(i, p, q), l.mult(q, k, s));
                    left[i * m + k](p, s) = acc;
                }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t lj = 0; lj < m; ++lj)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t y = 0; y < m; ++y) {
                    Scalar acc(f);
                    for (std::size_t t = 0; t < m; ++t) acc.add_mul(l.mult(t, p, lj), l.comult(y, j, t));
                    right[j * m + lj](p, y) = acc;
                }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t lj = 0; lj < m; ++lj) {
                    const Mat coeff = left[i * m + k].transpose() * right[j * m + lj];  // (s, y)
                    auto& terms = d.mult.terms[d.index(i, j) * d.dim + d.index(k, lj)];
                    for (std::size_t s = 0; s < m; ++s)
                        for (std::size_t y = 0; y < m; ++y)
                            if (!coeff(s, y).is_zero()) terms.push_back({d.index(s, y), coeff(s, y)});
                }

    d.unit = zero_vec(f, d.dim);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) d.unit[d.index(i, j)] = l.unit[i] * l.counit[j];

    for (std::size_t x = 0; x < d.dim; ++x) {
        const Vec e = unit_vec(f, d.dim, x);
        if (d.product(d.unit, e) != e || d.product(e, d.unit) != e)
            throw InternalError("1 # eps is not a unit of the smash product");
    }

    CanonicalPair cp = canonical_element(d);
    d.canon = std::move(cp.canon);
    d.canon_inv = std::move(cp.canon_inv);
    return d;
}

CanonicalPair canonical_element(const HeisenbergDouble& d) {
    const std::size_t m = d.m;
    const std::size_t n = d.dim;
    const Field f = d.base.field;
    CanonicalPair cp{zero_vec(f, n * n), zero_vec(f, n * n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar w = d.base.counit[j] * d.base.unit[k];
                if (w.is_zero()) continue;
                for (std::size_t l = 0; l < m; ++l) {
                    const std::size_t x = d.index(i, j);
                    const std::size_t y = d.index(k, l);
                    if (i == l) cp.canon[x * n + y] += w;
                    cp.canon_inv[x * n + y] += d.base.antipode(i, l) * w;
                }
            }
    Vec one = zero_vec(f, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) one[x * n + y] = d.unit[x] * d.unit[y];
    if (d.pair_product(cp.canon, cp.canon_inv) != one || d.pair_product(cp.canon_inv, cp.canon) != one)
        throw InverseFails("canonical element times its antipode twist is not 1 (x) 1");
    return cp;
}

bool verify_double_pentagon(const HeisenbergDouble& d, bool parallel) {
    const auto c12 = embed_pair_into_cube(d, d.canon, 3);
    const auto c13 = embed_pair_into_cube(d, d.canon, 2);
    const auto c23 = embed_pair_into_cube(d, d.canon, 1);
    auto mul = parallel ? kernels::cube_multiply_parallel : kernels::cube_multiply_serial;
    const auto lhs = mul(d.mult, mul(d.mult, c12, c13), c23);
    const auto rhs = mul(d.mult, c23, c12);
    return lhs == rhs;
}

RegularRep regular_rep(const HeisenbergDouble& d) {
    const std::size_t m = d.m;
    const Field f = d.base.field;
    const HopfData& l = d.base;
    RegularRep rr;
    rr.rep.assign(d.dim, Mat(f, m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Mat& r = rr.rep[d.index(i, j)];
            for (std::size_t row = 0; row < m; ++row)
                for (std::size_t q = 0; q < m; ++q) {
                    const Scalar& c = l.comult(row, j, q);
                    if (c.is_zero()) continue;
                    for (std::size_t s = 0; s < m; ++s) r(row, s).add_mul(c, l.mult(q, i, s));
                }
        }

    rr.multiplicative = true;
    for (std::size_t x = 0; x < d.dim && rr.multiplicative; ++x)
        for (std::size_t y = 0; y < d.dim && rr.multiplicative; ++y) {
            Mat expect(f, m, m);
            for (const auto& t : d.mult.terms[x * d.dim + y]) expect += t.coeff * rr.rep[t.index];
            if (!(rr.rep[x] * rr.rep[y] == expect)) rr.multiplicative = false;
        }

    Mat stacked(f, d.dim, m * m);
    for (std::size_t x = 0; x < d.dim; ++x)
        for (std::size_t e = 0; e < m * m; ++e) stacked(x, e) = rr.rep[x].entries()[e];
    rr.bijective = rank(stacked) == d.dim;
    return rr;
}

PentagonSolution matrix_solution(const HopfData& l) { return analyze(push_canonical(l).r); }

SplitReport splitting_check(const HopfData& l, const std::optional<Mat>& conjugator) {
    PushedSolution ps = push_canonical(l);
    const std::size_t m = l.dim;
    const Field f = l.field;
    std::vector<Mat> images;
    for (std::size_t i = 0; i < m; ++i) images.push_back(apply_rep(ps.rr, element_of_l_hash_eps(ps.d, i), f, m));
    Tensor2 r = ps.r;
    if (conjugator) {
        const Mat& u = *conjugator;
        const Mat uinv = invert(u);
        r = conjugate_action(r, u);
        for (auto& im : images) im = u * im * uinv;
    }
    const PentagonSolution s = analyze(r);
    const HopfEmbedding p = construct_p(s);

    SplitReport rep;
    rep.length = s.m();
    auto& checks = rep.checks.checks;
    checks.push_back({"length", s.m() == m, s.m() == m ? "" : "l(R) = " + std::to_string(s.m())});
    if (s.m() != m) return rep;

    Mat cand(f, m, m);
    try {
        for (std::size_t i = 0; i < m; ++i) {
            const Vec c = p.coords(images[i]);
            for (std::size_t k = 0; k < m; ++k) cand(k, i) = c[k];
        }
    } catch (const NotInSpan&) {
        checks.push_back({"image_in_P", false, "rep(e_i # eps) is not in P"});
        return rep;
    }
    const bool bij = rank(cand) == m;
    checks.push_back({"bijective", bij, bij ? "" : "candidate map is singular"});
    if (!bij) return rep;

    // Pull P's structure back to L's basis and compare tensor by tensor.
    const HopfData pulled = change_basis(p.hopf, cand);
    auto cmp = [&](const char* name, bool ok) { checks.push_back({name, ok, ok ? "" : "structure tensors differ"}); };
    cmp("mult", pulled.mult_table == l.mult_table);
    cmp("unit", pulled.unit == l.unit);
    cmp("comult", pulled.comult_table == l.comult_table);
    cmp("counit", pulled.counit == l.counit);
    cmp("antipode", pulled.antipode == l.antipode);
    return rep;
}

FMapResult heisenberg_map_f(const PentagonSolution& s, const HeisenbergDouble& d) {
    const std::size_t m = s.m();
    if (d.m != m) throw ShapeMismatch("double is not built on P of this solution");
    FMapResult res;
    res.images.assign(d.dim, Mat());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) res.images[d.index(i, j)] = s.b_basis()[j] * s.a_basis()[i];

    const Field f = s.field();
    const std::size_t n = s.n();
    res.is_algebra_map = true;
    for (std::size_t x = 0; x < d.dim && res.is_algebra_map; ++x)
        for (std::size_t y = 0; y < d.dim && res.is_algebra_map; ++y) {
            Mat expect(f, n, n);
            for (const auto& t : d.mult.terms[x * d.dim + y]) expect += t.coeff * res.images[t.index];
            if (!(res.images[x] * res.images[y] == expect)) res.is_algebra_map = false;
        }

    Mat acc(f, n * n, n * n);
    for (std::size_t x = 0; x < d.dim; ++x)
        for (std::size_t y = 0; y < d.dim; ++y) {
            const Scalar& c = d.canon[x * d.dim + y];
            if (!c.is_zero()) acc += c * kron(res.images[x], res.images[y]);
        }
    res.recovers_r = acc == s.r().kron();
    return res;
}

Mat double_basis_change(const Mat& t) {
    const std::size_t m = t.rows();
    const Mat tinv = invert(t);
    Mat phi(t.field(), m * m, m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) phi(a * m + b, i * m + j) = t(a, i) * tinv(j, b);
    return phi;
}

}  // namespace pentagon
