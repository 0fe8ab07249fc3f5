// pentagon: command-line front end. Exit codes: 0 pass, 1 mathematical
// failure, 2 input or usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/gallery.hpp"
#include "pentagon/heisenberg.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/io.hpp"
#include "pentagon/solution.hpp"

namespace {

using namespace pentagon;
using io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Output {
    bool text = false;
    std::string out_path;

    void report(const Json& j) const { std::cout << (text ? io::render_text(j) : io::dump(j)); }
    // Writes a data file to --out, or to stdout when no path is given.
    void data(const std::string& contents) const {
        if (out_path.empty())
            std::cout << contents;
        else
            io::write_file(out_path, contents);
    }
};

Tensor2 load_solution(const std::string& path) { return io::parse_solution(io::read_file(path)); }
HopfData load_hopf(const std::string& path) { return io::parse_hopf(io::read_file(path)); }

PentagonMethod parse_method(const std::string& m) {
    if (m == "legs") return PentagonMethod::Legs;
    if (m == "blocks") return PentagonMethod::Blocks;
    return PentagonMethod::Both;
}

int cmd_verify(const std::string& path, const std::string& method, const Output& o) {
    const Tensor2 r = load_solution(path);
    const PentagonMethod m = parse_method(method);
    const PentagonVerdict v = verify_pentagon(r, m);
    o.report(io::verify_report(r, m, v));
    return v.holds ? kPass : kFail;
}

int cmd_analyze(const std::string& path, const Output& o) {
    const Json rep = io::analyze_report(analyze(load_solution(path)));
    if (o.out_path.empty())
        o.report(rep);
    else
        io::write_file(o.out_path, io::dump(rep));
    return kPass;
}

int cmd_construct(const std::string& path, const std::string& which, const Output& o) {
    const PentagonSolution s = analyze(load_solution(path));
    const HopfEmbedding e = which == "P" ? construct_p(s) : construct_h(s);
    o.data(io::serialize_hopf(e.hopf));
    return kPass;
}

int cmd_axioms(const std::string& path, const Output& o) {
    const CheckReport r = check_hopf_axioms(load_hopf(path));
    o.report(io::check_report_json(r));
    return r.all_passed() ? kPass : kFail;
}

int cmd_heisenberg(const std::string& path, const Output& o) {
    const HopfData l = load_hopf(path);
    const HeisenbergDouble d = build_double(l);
    const bool double_pentagon = verify_double_pentagon(d);
    const RegularRep rr = regular_rep(d);
    const PentagonSolution s = matrix_solution(l);
    Json j;
    j["dim_L"] = l.dim;
    j["dim_double"] = d.dim;
    j["double_pentagon"] = double_pentagon;
    j["regular_rep_multiplicative"] = rr.multiplicative;
    j["regular_rep_bijective"] = rr.bijective;
    j["length"] = s.m();
    if (o.out_path.empty())
        j["solution"] = Json::parse(io::serialize_solution(s.r()));
    else
        io::write_file(o.out_path, io::serialize_solution(s.r()));
    o.report(j);
    return double_pentagon && s.m() == l.dim ? kPass : kFail;
}

int cmd_split(const std::string& path, const Output& o) {
    const SplitReport r = splitting_check(load_hopf(path));
    o.report(io::split_report_json(r));
    return r.passed() ? kPass : kFail;
}

int cmd_equiv(const std::string& p1, const std::string& p2, const std::string& cpath, const Output& o) {
    const Tensor2 s1 = load_solution(p1);
    const Tensor2 s2 = load_solution(p2);
    const Mat u = io::parse_matrix(io::read_file(cpath));
    if (!(s1.field() == s2.field()) || !(u.field() == s1.field()))
        throw FieldMismatch("solutions and conjugator must share a field");
    if (s1.n() != s2.n() || !u.is_square() || u.rows() != s1.n())
        throw ShapeMismatch("solutions and conjugator must have the same size n");
    if (rank(u) != u.rows()) throw BadParams("conjugator is not invertible");
    const bool p1_ok = verify_pentagon(s1).holds;
    const bool p2_ok = verify_pentagon(s2).holds;
    const bool related = conjugate_action(s1, u) == s2;
    Json j;
    j["n"] = s1.n();
    j["first_is_solution"] = p1_ok;
    j["second_is_solution"] = p2_ok;
    j["second_is_conjugate_of_first"] = related;
    o.report(j);
    return p1_ok && p2_ok && related ? kPass : kFail;
}

int cmd_lagrange(const std::string& path, const Output& o) {
    const PentagonSolution s = analyze(load_solution(path));
    const LagrangeReport l = lagrange_report(s);
    Json j = io::lagrange_report_json(l);
    j["length"] = s.m();
    o.report(j);
    return l.relations_hold ? kPass : kFail;
}

int cmd_gallery(gallery::GallerySpec spec, const std::string& field, const Output& o) {
    spec.field = Field::parse(field);
    const gallery::GalleryObject obj = gallery::generate(spec);
    if (const auto* r = std::get_if<Tensor2>(&obj))
        o.data(io::serialize_solution(*r));
    else
        o.data(io::serialize_hopf(std::get<HopfData>(obj)));
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for pentagon-equation solutions and their Hopf algebras"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--text", out.text, "Render reports as indented text instead of JSON");

    std::string sol, sol2, hopf, method = "both", which, conj, name, field;
    std::optional<std::size_t> gn, gq;
    std::optional<std::uint64_t> seed;

    auto* verify = app.add_subcommand("verify", "Check the pentagon identity");
    verify->add_option("solution", sol)->required();
    verify->add_option("--method", method)->check(CLI::IsMember({"legs", "blocks", "both"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis with P, H and dimension data");
    analyze_cmd->add_option("solution", sol)->required();
    analyze_cmd->add_option("--out", out.out_path);

    auto* construct = app.add_subcommand("construct", "Emit P or H as structure constants");
    construct->add_option("solution", sol)->required();
    construct->add_option("--which", which)->required()->check(CLI::IsMember({"P", "H"}));
    construct->add_option("--out", out.out_path);

    auto* axioms = app.add_subcommand("axioms", "Check the Hopf algebra axioms");
    axioms->add_option("hopf", hopf)->required();

    auto* heis = app.add_subcommand("heisenberg", "Heisenberg double and its matrix solution");
    heis->add_option("hopf", hopf)->required();
    heis->add_option("--out", out.out_path);

    auto* split = app.add_subcommand("split-check", "Recover L from its matrix solution");
    split->add_option("hopf", hopf)->required();

    auto* equiv = app.add_subcommand("equiv", "Check S2 = (u(x)u) S1 (u(x)u)^-1");
    equiv->add_option("solution1", sol)->required();
    equiv->add_option("solution2", sol2)->required();
    equiv->add_option("--conjugator", conj)->required();

    auto* lag = app.add_subcommand("lagrange", "Dimension relations for coinvariants");
    lag->add_option("solution", sol)->required();

    auto* gal = app.add_subcommand("gallery", "Generate a named example");
    gal->add_option("name", name)
        ->required()
        ->check(CLI::IsMember({"trivial", "cyclic", "sweedler4", "nilsol1", "nilsol2", "group_hopf", "sweedler_hopf"}));
    gal->add_option("--n", gn);
    gal->add_option("--q", gq);
    gal->add_option("--seed", seed);
    gal->add_option("--field", field)->required();
    gal->add_option("--out", out.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*verify) return cmd_verify(sol, method, out);
        if (*analyze_cmd) return cmd_analyze(sol, out);
        if (*construct) return cmd_construct(sol, which, out);
        if (*axioms) return cmd_axioms(hopf, out);
        if (*heis) return cmd_heisenberg(hopf, out);
        if (*split) return cmd_split(hopf, out);
        if (*equiv) return cmd_equiv(sol, sol2, conj, out);
        if (*lag) return cmd_lagrange(sol, out);
        if (*gal) return cmd_gallery({name, Field{}, gn, gq, std::nullopt, seed}, field, out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MathError& e) {
        std::cerr << "fail: " << e.what() << "\n";
        return kFail;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
