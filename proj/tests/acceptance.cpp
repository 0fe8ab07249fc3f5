// Acceptance suite: one line per criterion, exit status 0 iff every line passes.
// All mathematical checks are exact; the only tolerances are wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pentagon/errors.hpp"
#include "pentagon/gallery.hpp"
#include "pentagon/heisenberg.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/solution.hpp"

using namespace pentagon;

namespace {

constexpr double kCyclicSecondsEach = 1.0;
constexpr double kSweedlerSeconds = 5.0;
constexpr double kLagrangeSeconds = 30.0;
constexpr double kSplitSeconds = 60.0;
constexpr double kConjugationSeconds = 60.0;
constexpr int kLagrangeConjugates = 25;
constexpr int kActionConjugators = 50;
constexpr int kRandomNonSolutions = 100;
constexpr int kMutants = 20;

const Field Q;
const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Every solution analyzed anywhere in the suite, for the global criteria 6, 9, 10.
struct Ledger {
    std::size_t analyses = 0;
    std::size_t unitarity_failures = 0;
    std::size_t divisibility_failures = 0;
    std::size_t axiom_failures = 0;
    std::size_t constructions = 0;
    std::vector<HopfData> constructed;
} ledger;

Mat combine(const std::vector<Mat>& basis, const Vec& c) {
    Mat out(basis.at(0).field(), basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < c.size(); ++i) out += c[i] * basis[i];
    return out;
}

// analyze() with the bookkeeping for the global criteria. The unitarity check
// is repeated here from the returned coordinates rather than trusted.
PentagonSolution tracked(const Tensor2& r) {
    ++ledger.analyses;
    PentagonSolution s = [&] {
        try {
            return analyze(r);
        } catch (const UnitarityFails&) {
            ++ledger.unitarity_failures;
            throw;
        }
    }();
    const Mat id = Mat::identity(r.field(), r.n());
    if (!(combine(s.a_basis(), s.one_in_p()) == id) || !(combine(s.b_basis(), s.one_in_h()) == id))
        ++ledger.unitarity_failures;
    if ((s.n() * s.n()) % (s.m() * s.m()) != 0) ++ledger.divisibility_failures;
    return s;
}

// construct_P and construct_H with an explicit axiom check on top of the
// internal one.
std::pair<HopfEmbedding, HopfEmbedding> tracked_hopf(const PentagonSolution& s) {
    auto p = construct_p(s);
    auto h = construct_h(s);
    for (const HopfData* d : {&p.hopf, &h.hopf}) {
        ++ledger.constructions;
        if (!check_hopf_axioms(*d).all_passed()) ++ledger.axiom_failures;
        if (ledger.constructed.size() < 64) ledger.constructed.push_back(*d);
    }
    return {std::move(p), std::move(h)};
}

Tensor2 coproduct_tensor(const HopfEmbedding& e, const Mat& x) {
    return tensor_from_coordinates(x.rows(), e.hopf.coproduct(e.coords(x)), e.carrier, e.carrier);
}

Mat power(const Mat& a, std::size_t k) {
    Mat out = Mat::identity(a.field(), a.rows());
    for (std::size_t i = 0; i < k; ++i) out = out * a;
    return out;
}

Mat unit(Field f, std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(f, n, i - 1, j - 1); }

struct Line {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int number, const Line& line) {
    std::printf("criterion %2d: %s  %s\n", number, line.pass ? "PASS" : "FAIL", line.detail.c_str());
    std::fflush(stdout);
    if (!line.pass) ++failures;
}

// Runs a criterion body; any exception is a failure with its message.
void criterion(int number, const std::function<Line()>& body) {
    try {
        report(number, body());
    } catch (const std::exception& e) {
        report(number, {false, std::string("exception: ") + e.what()});
    }
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

struct Member {
    std::string name;
    Tensor2 r;
};

std::vector<Member> gallery_members() {
    return {
        {"trivial(3,Q)", gallery::trivial(Q, 3)},
        {"cyclic(2,Q)", gallery::cyclic(Q, 2)},
        {"cyclic(3,Q)", gallery::cyclic(Q, 3)},
        {"cyclic(5,Q)", gallery::cyclic(Q, 5)},
        {"cyclic(2,F7)", gallery::cyclic(F7, 2)},
        {"cyclic(3,F7)", gallery::cyclic(F7, 3)},
        {"cyclic(5,F7)", gallery::cyclic(F7, 5)},
        {"sweedler4(Q)", gallery::sweedler4(Q)},
        {"nilsol1(1,F2)", gallery::nilsol1(F2, 1)},
        {"nilsol1(2,F2)", gallery::nilsol1(F2, 2)},
        {"nilsol2(I1,F2)", gallery::nilsol2(F2, Mat::identity(F2, 1))},
        {"nilsol2(I2,F2)", gallery::nilsol2(F2, Mat::identity(F2, 2))},
        {"nilsol2(X,F2)", gallery::nilsol2(F2, Mat::from_ints(F2, 2, 2, {1, 1, 0, 1}))},
    };
}

// Independent legs and blocks verdicts; returns false on disagreement.
std::size_t disagreements = 0;
std::size_t method_comparisons = 0;
bool methods_agree(const Tensor2& r) {
    ++method_comparisons;
    const bool legs = verify_pentagon(r, PentagonMethod::Legs).holds;
    const bool blocks = verify_pentagon(r, PentagonMethod::Blocks).holds;
    if (legs != blocks) ++disagreements;
    return legs == blocks;
}

Line criterion1() {
    Line line;
    double worst = 0;
    for (Field f : {Q, F7})
        for (std::size_t n : {2, 3, 5}) {
            Timer t;
            const Tensor2 r = gallery::cyclic(f, n);
            const bool pent = verify_pentagon(r, PentagonMethod::Both).holds;
            const PentagonSolution s = tracked(r);
            const auto [p, h] = tracked_hopf(s);
            const Mat a = gallery::cyclic_shift(f, n);
            const bool ok = pent && s.m() == n && coproduct_tensor(h, a) == Tensor2::simple(a, a) &&
                            h.hopf.counit_of(h.coords(a)).is_one() &&
                            h.element(h.hopf.antipode_of(h.coords(a))) == power(a, n - 1);
            const double el = t.seconds();
            worst = std::max(worst, el);
            if (!ok || el >= kCyclicSecondsEach) {
                line.pass = false;
                line.detail += "[cyclic n=" + std::to_string(n) + " over " + f.to_string() + " failed] ";
            }
        }
    line.detail += "cyclic n in {2,3,5} over Q and F_7: pentagon, length n, D(A)=A(x)A, eps(A)=1, S(A)=A^(n-1); "
                   "slowest " + secs(worst) + " (limit " + secs(kCyclicSecondsEach) + " each)";
    return line;
}

Line criterion2() {
    Timer t;
    const Tensor2 r = gallery::sweedler4(Q);
    const bool pent = verify_pentagon(r, PentagonMethod::Both).holds;
    const PentagonSolution s = tracked(r);
    const auto [p, h] = tracked_hopf(s);
    const Mat id = Mat::identity(Q, 4);
    const Mat g = unit(Q, 4, 1, 2) + unit(Q, 4, 2, 1) + unit(Q, 4, 3, 4) + unit(Q, 4, 4, 3);
    const Mat x = unit(Q, 4, 3, 1) - unit(Q, 4, 4, 2);
    const bool in_h = h.span.contains(g.entries()) && h.span.contains(x.entries());
    const bool rel = (x * x).is_zero() && g * g == id && g * x == Scalar(Q, -1) * (x * g);
    const bool co = in_h && coproduct_tensor(h, g) == Tensor2::simple(g, g) &&
                    coproduct_tensor(h, x) == Tensor2::simple(x, g) + Tensor2::simple(id, x);
    const double el = t.seconds();
    Line line{pent && s.m() == 4 && rel && co && el < kSweedlerSeconds, ""};
    line.detail = "sweedler4 over Q: pentagon " + std::string(pent ? "holds" : "FAILS") + ", length " +
                  std::to_string(s.m()) + ", x^2=0 g^2=I gx=-xg " + (rel ? "exact" : "VIOLATED") +
                  ", D(g)=g(x)g D(x)=x(x)g+I(x)x " + (co ? "exact" : "VIOLATED") + "; " + secs(el) + " (limit " +
                  secs(kSweedlerSeconds) + ")";
    return line;
}

Line criterion3() {
    Timer t;
    std::size_t checked = 0, bad = 0;
    const auto members = gallery_members();
    for (const auto& mem : members) {
        std::vector<Tensor2> family = {mem.r};
        for (int k = 0; k < kLagrangeConjugates; ++k)
            family.push_back(conjugate_action(mem.r, gallery::random_conjugator(mem.r.n(), mem.r.field(), 1000 + k)));
        for (const auto& r : family) {
            methods_agree(r);
            const PentagonSolution s = tracked(r);
            const LagrangeReport l = lagrange_report(s);
            const std::size_t n2 = l.n * l.n;
            ++checked;
            if (!(l.relations_hold && l.dim_p * l.dim_coinv_r == n2 && l.dim_h * l.dim_coinv_l == n2)) ++bad;
        }
    }
    const double el = t.seconds();
    return {bad == 0 && el < kLagrangeSeconds,
            std::to_string(checked) + " solutions (" + std::to_string(members.size()) + " gallery members, " +
                std::to_string(kLagrangeConjugates) + " conjugates each): dim(P)dim(A^{R,r}) = dim(H)dim(A^{R,l}) "
            "= n^2 fails on " + std::to_string(bad) + "; " + secs(el) + " (limit " + secs(kLagrangeSeconds) + ")"};
}

Line criterion4() {
    Line line;
    double h4_time = 0;
    std::vector<std::pair<std::string, HopfData>> ls = {{"k", gallery::group_hopf(Q, 1)},
                                                        {"kZ2", gallery::group_hopf(Q, 2)},
                                                        {"kZ3", gallery::group_hopf(Q, 3)},
                                                        {"H4", gallery::sweedler_hopf(Q)}};
    for (const auto& [name, l] : ls) {
        Timer t;
        const HeisenbergDouble d = build_double(l);
        const bool dp = verify_double_pentagon(d);
        const RegularRep rr = regular_rep(d);
        const PentagonSolution s = tracked(matrix_solution(l).r());
        tracked_hopf(s);
        const bool pent = verify_pentagon(s.r(), PentagonMethod::Both).holds;
        const SplitReport sp = splitting_check(l);
        const bool ok = dp && rr.bijective && rr.multiplicative && pent && s.m() == l.dim && sp.passed();
        if (name == "H4") h4_time = t.seconds();
        if (!ok) {
            line.pass = false;
            line.detail += "[" + name + " failed] ";
        }
    }
    line.pass = line.pass && h4_time < kSplitSeconds;
    line.detail += "L in {k, kZ2, kZ3, H4}: double pentagon, rep bijective, matrix solution of length dim L, "
                   "all five structure tensors recovered; H4 " + secs(h4_time) + " (limit " + secs(kSplitSeconds) + ")";
    return line;
}

Line criterion5() {
    Timer t;
    std::size_t runs = 0, bad = 0;
    for (Field f : {Q, F5})
        for (std::size_t which = 0; which < 3; ++which) {
            const Tensor2 r = which == 0 ? gallery::cyclic(f, 2) : which == 1 ? gallery::cyclic(f, 3) : gallery::sweedler4(f);
            const PentagonSolution s = tracked(r);
            const HopfEmbedding p = construct_p(s);
            for (int k = 0; k < kActionConjugators; ++k) {
                const Mat u = gallery::random_conjugator(r.n(), f, 5000 + k);
                const Mat uinv = invert(u);
                const Tensor2 rc = conjugate_action(r, u);
                ++runs;
                methods_agree(rc);
                const bool pent = verify_pentagon(rc, PentagonMethod::Both).holds;
                const PentagonSolution sc = tracked(rc);
                const auto [pc, hc] = tracked_hopf(sc);
                bool same = sc.m() == s.m();
                if (same) {
                    Mat tm(f, s.m(), s.m());
                    for (std::size_t i = 0; i < s.m(); ++i) {
                        const Vec c = pc.coords(u * p.carrier[i] * uinv);
                        for (std::size_t j = 0; j < s.m(); ++j) tm(j, i) = c[j];
                    }
                    same = change_basis(pc.hopf, tm).same_structure(p.hopf);
                }
                if (!(pent && same)) ++bad;
            }
        }
    const double el = t.seconds();
    return {bad == 0 && el < kConjugationSeconds,
            std::to_string(runs) + " conjugates of cyclic(2), cyclic(3), sweedler4 over Q and F_5: pentagon, length "
            "and P structure constants (in the basis u a_i u^-1) preserved; mismatches " + std::to_string(bad) + "; " +
            secs(el) + " (limit " + secs(kConjugationSeconds) + ")"};
}

Line criterion6() {
    return {ledger.unitarity_failures == 0 && ledger.analyses > 0,
            "I_n in P and H for all " + std::to_string(ledger.analyses) + " analyzed solutions; failures " +
                std::to_string(ledger.unitarity_failures)};
}

Line criterion7() {
    for (const auto& mem : gallery_members()) methods_agree(mem.r);
    std::size_t solutions_hit = 0;
    for (int k = 0; k < kRandomNonSolutions; ++k) {
        const std::size_t n = 2 + k % 2;
        const Field f = k % 3 == 0 ? F7 : Q;
        const Tensor2 r(n, gallery::random_conjugator(n * n, f, 9000 + k));
        methods_agree(r);
        if (verify_pentagon(r, PentagonMethod::Legs).holds) ++solutions_hit;
    }
    return {disagreements == 0,
            "legs vs blocks on " + std::to_string(method_comparisons) + " inputs (gallery, conjugates, " +
                std::to_string(kRandomNonSolutions) + " random invertible tensors, " + std::to_string(solutions_hit) +
                " of which happen to be solutions): disagreements " + std::to_string(disagreements)};
}

Line criterion8() {
    Line line;
    const std::vector<Member> members = {
        {"nilsol1 q=1", gallery::nilsol1(F2, 1)},
        {"nilsol1 q=2", gallery::nilsol1(F2, 2)},
        {"nilsol2 q=1 X=I", gallery::nilsol2(F2, Mat::identity(F2, 1))},
        {"nilsol2 q=2 X=I", gallery::nilsol2(F2, Mat::identity(F2, 2))},
        {"nilsol2 q=2 X=[[1,1],[0,1]]", gallery::nilsol2(F2, Mat::from_ints(F2, 2, 2, {1, 1, 0, 1}))},
    };
    for (const auto& mem : members) {
        const bool ok = verify_pentagon(mem.r, PentagonMethod::Both).holds;
        tracked_hopf(tracked(mem.r));
        if (!ok) {
            line.pass = false;
            line.detail += "[" + mem.name + " fails] ";
        }
    }
    const PentagonSolution s = tracked(gallery::nilsol1(F2, 1));
    const HopfEmbedding p = construct_p(s);
    const Mat a = unit(F2, 2, 1, 2), one = Mat::identity(F2, 2);
    const bool prim = p.hopf.dim == 2 && p.span.contains(a.entries()) &&
                      coproduct_tensor(p, a) == Tensor2::simple(a, one) + Tensor2::simple(one, a);
    line.pass = line.pass && prim;
    line.detail += "nilsol1 q in {1,2}, nilsol2 q in {1,2} over F_2 satisfy the pentagon; P(nilsol1 q=1) is "
                   "2-dimensional with D(a)=a(x)1+1(x)a " + std::string(prim ? "exactly" : "VIOLATED") +
                   " (q=1 has no invertible X other than I over F_2)";
    return line;
}

Line criterion9() {
    std::mt19937_64 rng(424242);
    std::size_t caught = 0;
    std::vector<HopfData> pool = ledger.constructed;
    pool.push_back(gallery::sweedler_hopf(Q));
    pool.push_back(gallery::group_hopf(Q, 3));
    // mutants need a nontrivial algebra
    std::erase_if(pool, [](const HopfData& h) { return h.dim < 2; });
    for (int k = 0; k < kMutants; ++k) {
        HopfData h = pool[rng() % pool.size()];
        const std::size_t d = h.dim;
        const std::size_t tensor = rng() % 5;
        const Scalar one = Scalar::one(h.field);
        switch (tensor) {
            case 0: h.mult_table[rng() % (d * d * d)] += one; break;
            case 1: h.unit[rng() % d] += one; break;
            case 2: h.comult_table[rng() % (d * d * d)] += one; break;
            case 3: h.counit[rng() % d] += one; break;
            default: h.antipode(rng() % d, rng() % d) += one; break;
        }
        if (!check_hopf_axioms(h).all_passed()) ++caught;
    }
    return {ledger.axiom_failures == 0 && caught == static_cast<std::size_t>(kMutants),
            "all " + std::to_string(ledger.constructions) + " constructed P/H pass every axiom (failures " +
                std::to_string(ledger.axiom_failures) + "); mutants caught " + std::to_string(caught) + "/" +
                std::to_string(kMutants)};
}

Line criterion10() {
    return {ledger.divisibility_failures == 0,
            "l(R)^2 divides n^2 for all " + std::to_string(ledger.analyses) + " analyzed solutions; failures " +
                std::to_string(ledger.divisibility_failures)};
}

Line criterion11() {
    const HopfData z2 = gallery::group_hopf(Q, 2);
    const std::size_t d_z2 = right_integrals(z2).size();
    const std::size_t d_z2_dual = right_integrals(dual(z2)).size();
    const std::size_t d_h4 = right_integrals(gallery::sweedler_hopf(Q)).size();
    std::size_t outputs = 0, bad = 0;
    for (const Tensor2& r : {gallery::cyclic(Q, 2), gallery::cyclic(Q, 3), gallery::sweedler4(Q),
                             gallery::nilsol1(F2, 1), gallery::nilsol2(F2, Mat::identity(F2, 2))}) {
        const PentagonSolution s = tracked(r);
        const HopfEmbedding p = construct_p(s);
        for (const Mat& a : r_invariants(s, Side::Right)) {
            const IntegralResult ir = integral_from_invariant(s, a);
            ++outputs;
            // t x = eps(x) t on every basis element, recomputed from P's constants
            bool ok = true;
            for (std::size_t q = 0; q < p.hopf.dim; ++q) {
                Vec rhs = ir.coords;
                for (auto& c : rhs) c *= p.hopf.counit[q];
                ok = ok && p.hopf.product(ir.coords, unit_vec(s.field(), p.hopf.dim, q)) == rhs;
            }
            if (!ok) ++bad;
        }
    }
    return {d_z2 == 1 && d_z2_dual == 1 && d_h4 == 1 && bad == 0,
            "dim of right integrals: kZ2 " + std::to_string(d_z2) + ", (kZ2)* " + std::to_string(d_z2_dual) + ", H4 " +
                std::to_string(d_h4) + "; " + std::to_string(outputs) + " projected invariants, " +
                std::to_string(bad) + " fail t x = eps(x) t"};
}

}  // namespace

int main() {
    criterion(1, criterion1);
    criterion(2, criterion2);
    criterion(3, criterion3);
    criterion(4, criterion4);
    criterion(5, criterion5);
    criterion(6, criterion6);
    criterion(7, criterion7);
    criterion(8, criterion8);
    criterion(9, criterion9);
    criterion(10, criterion10);
    criterion(11, criterion11);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
