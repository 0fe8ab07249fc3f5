#include "pentagon/hopf.hpp"

#include <sstream>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

std::string idx(std::initializer_list<std::size_t> ids) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto i : ids) {
        os << (first ? "" : ",") << i + 1;
        first = false;
    }
    os << ")";
    return os.str();
}

Scalar delta(Field f, std::size_t a, std::size_t b) { return a == b ? Scalar::one(f) : Scalar::zero(f); }

// Records the first failure of a named check.
class Recorder {
public:
    explicit Recorder(std::string name) : res_{std::move(name), true, {}} {}
    bool ok() const { return res_.passed; }
    void fail(std::string witness) {
        if (!res_.passed) return;
        res_.passed = false;
        res_.witness = std::move(witness);
    }
    CheckResult result() && { return std::move(res_); }

private:
    CheckResult res_;
};

Vec basis_vec(const HopfData& l, std::size_t i) { return unit_vec(l.field, l.dim, i); }

}  // namespace

HopfData HopfData::zeros(Field f, std::size_t dim) {
    HopfData h;
    h.field = f;
    h.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) h.basis_names.push_back("e" + std::to_string(i + 1));
    h.mult_table = zero_vec(f, dim * dim * dim);
    h.unit = zero_vec(f, dim);
    h.comult_table = zero_vec(f, dim * dim * dim);
    h.counit = zero_vec(f, dim);
    h.antipode = Mat(f, dim, dim);
    return h;
}

Vec HopfData::product(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) out[k].add_mul(c, mult(i, j, k));
        }
    }
    return out;
}

Mat HopfData::coproduct(const Vec& x) const {
    Mat out(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) out(j, k).add_mul(x[i], comult(i, j, k));
    }
    return out;
}

Scalar HopfData::counit_of(const Vec& x) const {
    Scalar s(field);
    for (std::size_t i = 0; i < dim; ++i) s.add_mul(x[i], counit[i]);
    return s;
}

bool HopfData::same_structure(const HopfData& o) const {
    return field == o.field && dim == o.dim && mult_table == o.mult_table && unit == o.unit &&
           comult_table == o.comult_table && counit == o.counit && antipode == o.antipode;
}

bool CheckReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

CheckReport check_hopf_axioms(const HopfData& l) {
    const std::size_t d = l.dim;
    const Field f = l.field;
    CheckReport rep;
    const Vec one = l.unit;

    Recorder assoc("associativity");
    for (std::size_t i = 0; i < d && assoc.ok(); ++i)
        for (std::size_t j = 0; j < d && assoc.ok(); ++j)
            for (std::size_t k = 0; k < d && assoc.ok(); ++k) {
                const Vec lhs = l.product(l.product(basis_vec(l, i), basis_vec(l, j)), basis_vec(l, k));
                const Vec rhs = l.product(basis_vec(l, i), l.product(basis_vec(l, j), basis_vec(l, k)));
                if (lhs != rhs) assoc.fail("(e_i e_j) e_k != e_i (e_j e_k) at (i,j,k) = " + idx({i, j, k}));
            }
    rep.checks.push_back(std::move(assoc).result());

    Recorder unit("unit");
    for (std::size_t j = 0; j < d && unit.ok(); ++j) {
        const Vec e = basis_vec(l, j);
        if (l.product(one, e) != e) unit.fail("1 e_j != e_j at j = " + idx({j}));
        else if (l.product(e, one) != e) unit.fail("e_j 1 != e_j at j = " + idx({j}));
    }
    rep.checks.push_back(std::move(unit).result());

    Recorder coassoc("coassociativity");
    for (std::size_t i = 0; i < d && coassoc.ok(); ++i)
        for (std::size_t a = 0; a < d && coassoc.ok(); ++a)
            for (std::size_t b = 0; b < d && coassoc.ok(); ++b)
                for (std::size_t c = 0; c < d && coassoc.ok(); ++c) {
                    Scalar lhs(f), rhs(f);
                    for (std::size_t p = 0; p < d; ++p) lhs.add_mul(l.comult(i, p, c), l.comult(p, a, b));
                    for (std::size_t q = 0; q < d; ++q) rhs.add_mul(l.comult(i, a, q), l.comult(q, b, c));
                    if (!(lhs == rhs)) coassoc.fail("at e_i, component (a,b,c): " + idx({i, a, b, c}));
                }
    rep.checks.push_back(std::move(coassoc).result());

    Recorder counit("counit");
    for (std::size_t i = 0; i < d && counit.ok(); ++i)
        for (std::size_t q = 0; q < d && counit.ok(); ++q) {
            Scalar left(f), right(f);
            for (std::size_t p = 0; p < d; ++p) {
                left.add_mul(l.counit[p], l.comult(i, p, q));
                right.add_mul(l.counit[p], l.comult(i, q, p));
            }
            if (!(left == delta(f, i, q))) counit.fail("(eps (x) id) D(e_i) at (i,q) = " + idx({i, q}));
            else if (!(right == delta(f, i, q))) counit.fail("(id (x) eps) D(e_i) at (i,q) = " + idx({i, q}));
        }
    rep.checks.push_back(std::move(counit).result());

    Recorder dmult("comult_multiplicative");
    for (std::size_t i = 0; i < d && dmult.ok(); ++i)
        for (std::size_t j = 0; j < d && dmult.ok(); ++j) {
            const Mat lhs = l.coproduct(l.product(basis_vec(l, i), basis_vec(l, j)));
            Mat rhs(f, d, d);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) {
                    if (l.comult(i, p, q).is_zero()) continue;
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t t = 0; t < d; ++t) {
                            if (l.comult(j, r, t).is_zero()) continue;
                            const Scalar c = l.comult(i, p, q) * l.comult(j, r, t);
                            for (std::size_t a = 0; a < d; ++a) {
                                if (l.mult(p, r, a).is_zero()) continue;
                                const Scalar ca = c * l.mult(p, r, a);
                                for (std::size_t b = 0; b < d; ++b) rhs(a, b).add_mul(ca, l.mult(q, t, b));
                            }
                        }
                }
            if (!(lhs == rhs)) dmult.fail("D(e_i e_j) != D(e_i) D(e_j) at (i,j) = " + idx({i, j}));
        }
    rep.checks.push_back(std::move(dmult).result());

    Recorder dunit("comult_unital");
    {
        const Mat lhs = l.coproduct(one);
        for (std::size_t a = 0; a < d && dunit.ok(); ++a)
            for (std::size_t b = 0; b < d && dunit.ok(); ++b)
                if (!(lhs(a, b) == one[a] * one[b])) dunit.fail("D(1) != 1 (x) 1 at " + idx({a, b}));
    }
    rep.checks.push_back(std::move(dunit).result());

    Recorder emult("counit_multiplicative");
    for (std::size_t i = 0; i < d && emult.ok(); ++i)
        for (std::size_t j = 0; j < d && emult.ok(); ++j)
            if (!(l.counit_of(l.product(basis_vec(l, i), basis_vec(l, j))) == l.counit[i] * l.counit[j]))
                emult.fail("eps(e_i e_j) != eps(e_i) eps(e_j) at (i,j) = " + idx({i, j}));
    rep.checks.push_back(std::move(emult).result());

    Recorder eunit("counit_unital");
    if (!l.counit_of(one).is_one()) eunit.fail("eps(1) != 1");
    rep.checks.push_back(std::move(eunit).result());

    Recorder sleft("antipode_left");
    Recorder sright("antipode_right");
    for (std::size_t i = 0; i < d; ++i) {
        Vec lsum = zero_vec(f, d), rsum = zero_vec(f, d);
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
                const Scalar& c = l.comult(i, p, q);
                if (c.is_zero()) continue;
                const Vec sl = l.product(l.antipode.col(p), basis_vec(l, q));
                const Vec sr = l.product(basis_vec(l, p), l.antipode.col(q));
                for (std::size_t t = 0; t < d; ++t) {
                    lsum[t].add_mul(c, sl[t]);
                    rsum[t].add_mul(c, sr[t]);
                }
            }
        Vec expect = one;
        for (auto& x : expect) x *= l.counit[i];
        if (lsum != expect) sleft.fail("S(e_(1)) e_(2) != eps(e_i) 1 at i = " + idx({i}));
        if (rsum != expect) sright.fail("e_(1) S(e_(2)) != eps(e_i) 1 at i = " + idx({i}));
    }
    rep.checks.push_back(std::move(sleft).result());
    rep.checks.push_back(std::move(sright).result());
    return rep;
}

HopfData change_basis(const HopfData& l, const Mat& t) {
    if (t.rows() != l.dim || t.cols() != l.dim) throw ShapeMismatch("basis change must be dim x dim");
    const Mat tinv = invert(t);
    const std::size_t d = l.dim;
    HopfData out = HopfData::zeros(l.field, d);
    out.basis_names = l.basis_names;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < d; ++j) cols.push_back(t.col(j));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            const Vec prod = tinv * l.product(cols[j], cols[k]);
            for (std::size_t s = 0; s < d; ++s) out.mult(j, k, s) = prod[s];
        }
        const Mat cop = tinv * l.coproduct(cols[j]) * tinv.transpose();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) out.comult(j, a, b) = cop(a, b);
        out.counit[j] = l.counit_of(cols[j]);
    }
    out.unit = tinv * l.unit;
    out.antipode = tinv * l.antipode * t;
    return out;
}

HopfData dual(const HopfData& l) {
    const std::size_t d = l.dim;
    HopfData out = HopfData::zeros(l.field, d);
    for (std::size_t i = 0; i < d; ++i) out.basis_names[i] = l.basis_names[i] + "*";
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                out.mult(i, j, k) = l.comult(k, i, j);
                out.comult(k, i, j) = l.mult(i, j, k);
            }
    out.unit = l.counit;
    out.counit = l.unit;
    out.antipode = l.antipode.transpose();
    return out;
}

Mat HopfEmbedding::element(const Vec& c) const {
    Mat out(hopf.field, carrier.at(0).rows(), carrier.at(0).cols());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out += c[i] * carrier[i];
    return out;
}

namespace {

enum class Which { P, H };

HopfEmbedding construct(const PentagonSolution& s, Which which) {
    const std::size_t m = s.m();
    const std::size_t n = s.n();
    const Field f = s.field();
    const bool is_p = which == Which::P;
    HopfEmbedding emb;
    emb.carrier = is_p ? s.a_basis() : s.b_basis();
    emb.span = is_p ? s.a_span() : s.b_span();
    HopfData& h = emb.hopf;
    h = HopfData::zeros(f, m);
    for (std::size_t i = 0; i < m; ++i) h.basis_names[i] = (is_p ? "a" : "b") + std::to_string(i + 1);

    const Mat id = Mat::identity(f, n);
    const Mat& r = s.r().kron();
    const Mat& u = s.u().kron();
    try {
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = 0; q < m; ++q) {
                const Vec c = emb.coords(emb.carrier[p] * emb.carrier[q]);
                for (std::size_t k = 0; k < m; ++k) h.mult(p, q, k) = c[k];
            }
            const Mat d = is_p ? u * kron(id, emb.carrier[p]) * r : r * kron(emb.carrier[p], id) * u;
            const Mat g = tensor_coordinates(Tensor2(n, d), emb.span, emb.span);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) h.comult(p, i, j) = g(i, j);
        }
    } catch (const NotInSpan& e) {
        throw ClosureViolation(std::string(is_p ? "P" : "H") + " not closed: " + e.what());
    }
    // eps_P(a_k) = <b_k*, 1>, eps_H(b_k) = <a_k*, 1>; S_P = gamma, S_H = gamma^T.
    h.unit = is_p ? s.one_in_p() : s.one_in_h();
    h.counit = is_p ? s.one_in_h() : s.one_in_p();
    h.antipode = is_p ? s.gamma() : s.gamma().transpose();

    const CheckReport rep = check_hopf_axioms(h);
    for (const auto& c : rep.checks)
        if (!c.passed)
            throw InternalError(std::string("constructed ") + (is_p ? "P" : "H") + " fails " + c.name + ": " +
                                c.witness);
    return emb;
}

}  // namespace

HopfEmbedding construct_p(const PentagonSolution& s) { return construct(s, Which::P); }
HopfEmbedding construct_h(const PentagonSolution& s) { return construct(s, Which::H); }

CheckReport verify_candidate_hopf_iso(const LinearHopfMap& f) {
    const HopfData& src = f.source;
    const HopfData& tgt = f.target;
    const Mat& m = f.matrix;
    CheckReport rep;
    if (m.rows() != tgt.dim || m.cols() != src.dim || !(src.field == tgt.field)) {
        rep.checks.push_back({"shape", false, "map matrix does not match source/target dimensions"});
        return rep;
    }
    Recorder bij("bijective");
    if (src.dim != tgt.dim) bij.fail("dimensions differ");
    else if (rank(m) != src.dim) bij.fail("rank " + std::to_string(rank(m)) + " < " + std::to_string(src.dim));
    rep.checks.push_back(std::move(bij).result());

    std::vector<Vec> img;
    for (std::size_t i = 0; i < src.dim; ++i) img.push_back(m.col(i));

    Recorder mult("multiplicative");
    for (std::size_t i = 0; i < src.dim && mult.ok(); ++i)
        for (std::size_t j = 0; j < src.dim && mult.ok(); ++j)
            if (m * src.product(unit_vec(src.field, src.dim, i), unit_vec(src.field, src.dim, j)) !=
                tgt.product(img[i], img[j]))
                mult.fail("f(e_i e_j) != f(e_i) f(e_j) at (i,j) = " + idx({i, j}));
    rep.checks.push_back(std::move(mult).result());

    Recorder unit("unit");
    if (m * src.unit != tgt.unit) unit.fail("f(1) != 1");
    rep.checks.push_back(std::move(unit).result());

    Recorder comult("comultiplicative");
    for (std::size_t i = 0; i < src.dim && comult.ok(); ++i)
        if (!(m * src.coproduct(unit_vec(src.field, src.dim, i)) * m.transpose() == tgt.coproduct(img[i])))
            comult.fail("(f (x) f) D(e_i) != D(f(e_i)) at i = " + idx({i}));
    rep.checks.push_back(std::move(comult).result());

    Recorder counit("counit");
    for (std::size_t i = 0; i < src.dim && counit.ok(); ++i)
        if (!(tgt.counit_of(img[i]) == src.counit[i])) counit.fail("eps(f(e_i)) != eps(e_i) at i = " + idx({i}));
    rep.checks.push_back(std::move(counit).result());

    Recorder anti("antipode");
    if (!(m * src.antipode == tgt.antipode * m)) anti.fail("f S != S f");
    rep.checks.push_back(std::move(anti).result());
    return rep;
}

LinearHopfMap dual_iso_f(const PentagonSolution& s) {
    const HopfEmbedding p = construct_p(s);
    const HopfEmbedding h = construct_h(s);
    // R = sum G(i,j) a_i (x) b_j, so f(a_i*) = sum_j G(i,j) b_j.
    const Mat g = tensor_coordinates(s.r(), s.a_span(), s.b_span());
    return LinearHopfMap{dual(p.hopf), h.hopf, g.transpose()};
}

bool check_dual_iso_f(const PentagonSolution& s) { return verify_candidate_hopf_iso(dual_iso_f(s)).all_passed(); }

std::vector<Vec> right_integrals(const HopfData& l) {
    const std::size_t d = l.dim;
    Mat system(l.field, d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar v = l.mult(k, j, s);
                if (k == s) v -= l.counit[j];
                system(j * d + s, k) = v;
            }
    return nullspace(system);
}

IntegralResult integral_from_invariant(const PentagonSolution& s, const Mat& a) {
    if (!is_r_invariant(s, Side::Right, a)) throw NotInvariant("(a (x) 1) R != a (x) 1");
    const HopfEmbedding p = construct_p(s);
    const std::vector<Mat> co = coinvariants(s, Side::Right);
    const std::size_t m = s.m();
    std::vector<Vec> cols;
    for (const auto& c : co)
        for (const auto& x : s.a_basis()) cols.push_back((c * x).entries());
    Vec y;
    try {
        y = coords_in_span(a.entries(), cols);
    } catch (const MathError& e) {
        throw InternalError(std::string("multiplication A^{R,r} (x) P -> A is not bijective: ") + e.what());
    }
    IntegralResult res;
    res.coords.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m));
    res.element = p.element(res.coords);
    res.is_right_integral = true;
    for (std::size_t q = 0; q < m; ++q)
        if (!(res.element * s.a_basis()[q] == p.hopf.counit[q] * res.element)) res.is_right_integral = false;
    return res;
}

}  // namespace pentagon
