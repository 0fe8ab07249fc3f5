#include "pentagon/solution.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return std::pair{i, j};
    return std::nullopt;
}

PentagonVerdict verify_legs(const Tensor2& r) {
    const Tensor3 r12 = leg_embed(r, Leg::L12);
    const Tensor3 r13 = leg_embed(r, Leg::L13);
    const Tensor3 r23 = leg_embed(r, Leg::L23);
    const Tensor3 lhs = r12 * r13 * r23;
    const Tensor3 rhs = r23 * r12;
    PentagonVerdict v;
    if (auto d = first_difference(lhs.entries(), rhs.entries())) {
        v.witness = PentagonWitness{PentagonMethod::Legs, d->first + 1, d->second + 1};
        return v;
    }
    v.holds = true;
    return v;
}

PentagonVerdict verify_blocks(const Tensor2& r) {
    const std::size_t n = r.n();
    const Mat rinv = invert(r.kron());
    const BlockArray a = blocks(r);
    const Mat id = Mat::identity(r.field(), n);
    PentagonVerdict v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p) {
            Mat lhs(r.field(), n * n, n * n);
            for (std::size_t j = 0; j < n; ++j) lhs += kron(a[i][j], a[j][p]);
            const Mat rhs = r.kron() * kron(a[i][p], id) * rinv;
            if (!(lhs == rhs)) {
                v.witness = PentagonWitness{PentagonMethod::Blocks, i + 1, p + 1};
                return v;
            }
        }
    v.holds = true;
    return v;
}

Mat tensor_id_left(const Mat& a) { return kron(Mat::identity(a.field(), a.rows()), a); }
Mat tensor_id_right(const Mat& a) { return kron(a, Mat::identity(a.field(), a.rows())); }

// Solutions a of  lhs(a) = rhs(a)  where both sides are linear in a, built
// column by column over the basis e_kl of M_n.
template <typename Map>
std::vector<Mat> solve_fixed_space(const PentagonSolution& s, Map map) {
    const std::size_t n = s.n();
    const Field f = s.field();
    const std::size_t n2 = n * n;
    Mat system(f, n2 * n2, n2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const Mat col = map(Mat::unit(f, n, k, l));
            for (std::size_t e = 0; e < n2 * n2; ++e) system(e, k * n + l) = col.entries()[e];
        }
    std::vector<Mat> out;
    for (auto& v : nullspace(system)) out.push_back(mat_of(f, n, v));
    return out;
}

}  // namespace

std::string PentagonWitness::to_string() const {
    if (method == PentagonMethod::Blocks)
        return "blocks identity fails at (i,p) = (" + std::to_string(first) + "," + std::to_string(second) + ")";
    return "legs identity differs at entry (" + std::to_string(first) + "," + std::to_string(second) + ")";
}

PentagonVerdict verify_pentagon(const Tensor2& r, PentagonMethod method) {
    switch (method) {
        case PentagonMethod::Legs:
            return verify_legs(r);
        case PentagonMethod::Blocks:
            return verify_blocks(r);
        case PentagonMethod::Both: {
            PentagonVerdict legs = verify_legs(r);
            PentagonVerdict blk = verify_blocks(r);
            if (legs.holds != blk.holds)
                throw InternalError("legs and blocks pentagon verdicts disagree");
            return legs.holds ? legs : blk;
        }
    }
    throw InternalError("unknown pentagon method");
}

Tensor2 hopf_transform(const Tensor2& r) { return inverse(r); }

bool verify_hopf_equation(const Tensor2& t) {
    const Tensor3 t12 = leg_embed(t, Leg::L12);
    const Tensor3 t13 = leg_embed(t, Leg::L13);
    const Tensor3 t23 = leg_embed(t, Leg::L23);
    return t12 * t23 == t23 * t13 * t12;
}

std::size_t tensor_length(const Tensor2& t) { return rank(coefficient_matrix(t)); }

PentagonSolution analyze(const Tensor2& r) {
    if (r.kron().is_zero()) throw ZeroTensor("R = 0 is not a pentagon solution");
    PentagonSolution s;
    s.r_ = r;
    s.u_ = inverse(r);
    const PentagonVerdict verdict = verify_pentagon(r, PentagonMethod::Both);
    if (!verdict.holds) throw PentagonFails(verdict.witness->to_string());

    const std::size_t n = r.n();
    const Field f = r.field();
    const RankFactorization rf = rank_factorize(coefficient_matrix(r));
    std::vector<Vec> a_vecs, b_vecs;
    for (std::size_t t = 0; t < rf.left.cols(); ++t) {
        a_vecs.push_back(rf.left.col(t));
        b_vecs.push_back(rf.right.row(t));
        s.a_.push_back(mat_of(f, n, a_vecs.back()));
        s.b_.push_back(mat_of(f, n, b_vecs.back()));
    }
    s.a_span_ = SpanCoordinates(f, n * n, a_vecs);
    s.b_span_ = SpanCoordinates(f, n * n, b_vecs);

    Tensor2 resum = Tensor2(n, Mat(f, n * n, n * n));
    for (std::size_t t = 0; t < s.m(); ++t) resum = resum + Tensor2::simple(s.a_[t], s.b_[t]);
    if (!(resum == r)) throw InternalError("sum a_i (x) b_i does not reproduce R");

    try {
        s.gamma_ = tensor_coordinates(s.u_, s.a_span_, s.b_span_);
    } catch (const NotInSpan&) {
        throw GammaOutsideSpan("R^{-1} is not in P (x) H");
    }
    const Vec one = vec_of(Mat::identity(f, n));
    try {
        s.one_in_p_ = s.a_span_.coords(one);
        s.one_in_h_ = s.b_span_.coords(one);
    } catch (const NotInSpan&) {
        throw UnitarityFails("identity matrix is not in P and H");
    }
    return s;
}

std::vector<Mat> coinvariants(const PentagonSolution& s, Side side) {
    const Mat& r = s.r().kron();
    std::vector<Mat> out;
    if (side == Side::Right) {
        out = solve_fixed_space(s, [&](const Mat& a) {
            const Mat one_a = tensor_id_left(a);
            return one_a * r - one_a;
        });
    } else {
        out = solve_fixed_space(s, [&](const Mat& a) {
            const Mat a_one = tensor_id_right(a);
            return r * a_one - a_one;
        });
    }
    if (out.empty()) throw InternalError("coinvariant space is zero");
    return out;
}

std::vector<Mat> r_invariants(const PentagonSolution& s, Side side) {
    const Mat& r = s.r().kron();
    std::vector<Mat> out;
    if (side == Side::Left) {
        out = solve_fixed_space(s, [&](const Mat& a) {
            const Mat one_a = tensor_id_left(a);
            return r * one_a - one_a;
        });
    } else {
        out = solve_fixed_space(s, [&](const Mat& a) {
            const Mat a_one = tensor_id_right(a);
            return a_one * r - a_one;
        });
    }
    return out;
}

bool is_r_invariant(const PentagonSolution& s, Side side, const Mat& a) {
    if (!a.is_square() || a.rows() != s.n()) throw ShapeMismatch("element must be n x n");
    const Mat& r = s.r().kron();
    if (side == Side::Left) {
        const Mat one_a = tensor_id_left(a);
        return r * one_a == one_a;
    }
    const Mat a_one = tensor_id_right(a);
    return a_one * r == a_one;
}

SubalgebraResult generated_subalgebra(const PentagonSolution& s) {
    const std::size_t n = s.n();
    const Field f = s.field();
    std::vector<Vec> gens;
    for (const auto& a : s.a_basis()) gens.push_back(a.entries());
    for (const auto& b : s.b_basis()) gens.push_back(b.entries());
    std::vector<Vec> basis = span_basis(f, n * n, gens);
    for (;;) {
        const SpanCoordinates span(f, n * n, basis);
        std::vector<Vec> grown = basis;
        bool changed = false;
        for (const auto& x : basis)
            for (const auto& y : basis) {
                Vec prod = (mat_of(f, n, x) * mat_of(f, n, y)).entries();
                if (!span.contains(prod)) {
                    grown.push_back(std::move(prod));
                    changed = true;
                }
            }
        if (!changed) break;
        basis = span_basis(f, n * n, grown);
    }
    SubalgebraResult res;
    res.dim = basis.size();
    for (auto& v : basis) res.basis.push_back(mat_of(f, n, v));
    if (res.dim > s.m() * s.m())
        throw BoundViolated("dim(A_R) = " + std::to_string(res.dim) + " exceeds l(R)^2 = " +
                            std::to_string(s.m() * s.m()));
    return res;
}

LagrangeReport lagrange_report(const PentagonSolution& s) {
    LagrangeReport rep;
    rep.n = s.n();
    rep.dim_p = s.a_basis().size();
    rep.dim_h = s.b_basis().size();
    rep.dim_coinv_l = coinvariants(s, Side::Left).size();
    rep.dim_coinv_r = coinvariants(s, Side::Right).size();
    const std::size_t n2 = s.n() * s.n();
    const std::size_t m = s.m();
    rep.relations_hold = rep.dim_p == m && rep.dim_h == m && m * rep.dim_coinv_r == n2 && m * rep.dim_coinv_l == n2;
    return rep;
}

}  // namespace pentagon
