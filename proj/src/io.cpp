#include "pentagon/io.hpp"

#include <fstream>
#include <sstream>

#include "pentagon/errors.hpp"

namespace pentagon::io {

namespace {

const Json& require(const Json& obj, const char* key) {
    if (!obj.is_object()) throw ParseError("expected a JSON object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
}

std::size_t positive_size(const Json& v, const char* what) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw ParseError(std::string(what) + " must be a positive integer");
    return v.get<std::size_t>();
}

Field parse_field(const Json& v) {
    if (v.is_string()) return Field::parse(v.get<std::string>());
    if (v.is_object() && v.size() == 1 && v.contains("Fp")) {
        const Json& p = v["Fp"];
        if (!p.is_number_unsigned()) throw ParseError("Fp modulus must be a non-negative integer");
        return Field::prime(p.get<std::uint64_t>());
    }
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

Scalar parse_scalar(const Field& f, const Json& v) {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::parse(f, v.dump());
    throw ParseError("scalar must be an integer or a \"num/den\" string, got " + v.dump());
}

const Json& array_of(const Json& v, std::size_t len, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    if (v.size() != len)
        throw ShapeError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(len));
    return v;
}

Vec parse_vec(const Field& f, const Json& v, std::size_t len, const char* what) {
    array_of(v, len, what);
    Vec out;
    out.reserve(len);
    for (const auto& e : v) out.push_back(parse_scalar(f, e));
    return out;
}

Mat parse_mat(const Field& f, const Json& v, std::size_t rows, std::size_t cols, const char* what) {
    array_of(v, rows, what);
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vec row = parse_vec(f, v[i], cols, what);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
    }
    return m;
}

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_json(s));
    return out;
}

Json cube_json(const Vec& t, std::size_t d) {
    Json out = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < d; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < d; ++k) row.push_back(scalar_json(t[(i * d + j) * d + k]));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

Vec parse_cube(const Field& f, const Json& v, std::size_t d, const char* what) {
    array_of(v, d, what);
    Vec out;
    out.reserve(d * d * d);
    for (const auto& plane : v) {
        array_of(plane, d, what);
        for (const auto& row : plane) {
            const Vec r = parse_vec(f, row, d, what);
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    return out;
}

bool is_leaf_array(const Json& j) {
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void dump_into(std::string& out, const Json& j, int indent) {
    const std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(k).dump() + ": ";
            dump_into(out, v, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "}";
    } else if (j.is_array()) {
        if (is_leaf_array(j)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            dump_into(out, j[i], indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "]";
    } else {
        out += j.dump();
    }
}

std::string leaf_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_into(std::string& out, const std::string& label, const Json& j, int indent) {
    const std::string pad(indent, ' ');
    if (!j.is_structured()) {
        out += pad + label + ": " + leaf_text(j) + "\n";
    } else if (j.is_array() && is_leaf_array(j)) {
        std::string line;
        for (std::size_t i = 0; i < j.size(); ++i) line += (i ? " " : "") + leaf_text(j[i]);
        out += pad + label + ": [" + line + "]\n";
    } else {
        out += pad + label + ":\n";
        if (j.is_object())
            for (const auto& [k, v] : j.items()) render_into(out, k, v, indent + 2);
        else
            for (std::size_t i = 0; i < j.size(); ++i) render_into(out, "[" + std::to_string(i + 1) + "]", j[i], indent + 2);
    }
}

}  // namespace

Json field_json(const Field& f) {
    if (f.is_rational()) return "Q";
    return Json{{"Fp", f.characteristic()}};
}

Json scalar_json(const Scalar& s) {
    if (s.field().is_rational()) return s.to_string();
    return s.residue();
}

Json matrix_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
    return out;
}

Tensor2 parse_solution(const std::string& text) {
    const Json j = parse_text(text);
    const Field f = parse_field(require(j, "field"));
    const std::size_t n = positive_size(require(j, "n"), "n");
    const bool has_blocks = j.contains("blocks");
    const bool has_kron = j.contains("kronecker");
    if (has_blocks == has_kron) throw ParseError("exactly one of \"blocks\" and \"kronecker\" is required");
    Tensor2 r;
    if (has_kron) {
        r = Tensor2(n, parse_mat(f, j["kronecker"], n * n, n * n, "kronecker"));
    } else {
        const Json& b = array_of(j["blocks"], n, "blocks");
        BlockArray arr(n);
        for (std::size_t i = 0; i < n; ++i) {
            array_of(b[i], n, "blocks row");
            for (std::size_t k = 0; k < n; ++k) arr[i].push_back(parse_mat(f, b[i][k], n, n, "block"));
        }
        r = from_blocks(arr);
    }
    if (r.kron().is_zero()) throw ZeroTensor("R = 0 is not allowed");
    return r;
}

std::string serialize_solution(const Tensor2& r) {
    Json j;
    j["field"] = field_json(r.field());
    j["n"] = r.n();
    Json b = Json::array();
    for (const auto& row : blocks(r)) {
        Json jr = Json::array();
        for (const auto& m : row) jr.push_back(matrix_json(m));
        b.push_back(std::move(jr));
    }
    j["blocks"] = std::move(b);
    return dump(j);
}

Json hopf_json(const HopfData& h) {
    Json j;
    j["field"] = field_json(h.field);
    j["dim"] = h.dim;
    j["basis_names"] = h.basis_names;
    j["mult"] = cube_json(h.mult_table, h.dim);
    j["unit"] = vec_json(h.unit);
    j["comult"] = cube_json(h.comult_table, h.dim);
    j["counit"] = vec_json(h.counit);
    j["antipode"] = matrix_json(h.antipode.transpose());
    return j;
}

HopfData parse_hopf(const std::string& text) {
    const Json j = parse_text(text);
    const Field f = parse_field(require(j, "field"));
    const std::size_t d = positive_size(require(j, "dim"), "dim");
    HopfData h = HopfData::zeros(f, d);
    if (j.contains("basis_names")) {
        const Json& names = array_of(j["basis_names"], d, "basis_names");
        for (std::size_t i = 0; i < d; ++i) {
            if (!names[i].is_string()) throw ParseError("basis names must be strings");
            h.basis_names[i] = names[i].get<std::string>();
        }
    }
    h.mult_table = parse_cube(f, require(j, "mult"), d, "mult");
    h.unit = parse_vec(f, require(j, "unit"), d, "unit");
    h.comult_table = parse_cube(f, require(j, "comult"), d, "comult");
    h.counit = parse_vec(f, require(j, "counit"), d, "counit");
    h.antipode = parse_mat(f, require(j, "antipode"), d, d, "antipode").transpose();
    return h;
}

std::string serialize_hopf(const HopfData& h) { return dump(hopf_json(h)); }

Mat parse_matrix(const std::string& text) {
    const Json j = parse_text(text);
    const Field f = parse_field(require(j, "field"));
    const Json& rows = require(j, "matrix");
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
        throw ShapeError("matrix must be a nonempty array of nonempty rows");
    return parse_mat(f, rows, rows.size(), rows[0].size(), "matrix");
}

std::string serialize_matrix(const Mat& m) {
    Json j;
    j["field"] = field_json(m.field());
    j["matrix"] = matrix_json(m);
    return dump(j);
}

Json check_report_json(const CheckReport& r) {
    Json j;
    j["passed"] = r.all_passed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string dump(const Json& j) {
    std::string out;
    dump_into(out, j, 0);
    out += "\n";
    return out;
}

std::string render_text(const Json& j) {
    std::string out;
    if (j.is_object())
        for (const auto& [k, v] : j.items()) render_into(out, k, v, 0);
    else
        render_into(out, "value", j, 0);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents)) throw ParseError("cannot write '" + path + "'");
}

Json verify_report(const Tensor2& r, PentagonMethod method, const PentagonVerdict& v) {
    static const char* names[] = {"legs", "blocks", "both"};
    Json j;
    j["field"] = field_json(r.field());
    j["n"] = r.n();
    j["method"] = names[static_cast<int>(method)];
    j["holds"] = v.holds;
    j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
    return j;
}

Json lagrange_report_json(const LagrangeReport& l) {
    Json j;
    j["n"] = l.n;
    j["dim_P"] = l.dim_p;
    j["dim_H"] = l.dim_h;
    j["dim_coinvariants_left"] = l.dim_coinv_l;
    j["dim_coinvariants_right"] = l.dim_coinv_r;
    j["relations_hold"] = l.relations_hold;
    return j;
}

Json analyze_report(const PentagonSolution& s) {
    Json j;
    j["field"] = field_json(s.field());
    j["n"] = s.n();
    j["pentagon"] = true;
    j["length"] = s.m();
    j["length_squared_divides_n_squared"] = (s.n() * s.n()) % (s.m() * s.m()) == 0;
    j["unitary"] = true;
    Json a = Json::array(), b = Json::array();
    for (const auto& m : s.a_basis()) a.push_back(matrix_json(m));
    for (const auto& m : s.b_basis()) b.push_back(matrix_json(m));
    j["P_basis"] = std::move(a);
    j["H_basis"] = std::move(b);
    j["identity_in_P"] = vec_json(s.one_in_p());
    j["identity_in_H"] = vec_json(s.one_in_h());
    j["inverse_coordinates"] = matrix_json(s.gamma());
    j["lagrange"] = lagrange_report_json(lagrange_report(s));
    j["P"] = hopf_json(construct_p(s).hopf);
    j["H"] = hopf_json(construct_h(s).hopf);
    return j;
}

Json split_report_json(const SplitReport& r) {
    Json j = check_report_json(r.checks);
    j["length"] = r.length;
    return j;
}

}  // namespace pentagon::io
