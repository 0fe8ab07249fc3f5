#pragma once
// File formats and reports. This is the only module that touches text.
//
// Field tag: "Q" or {"Fp": p}.  Scalars: over Q, strings "n" or "n/d" (bare
// integers accepted on input); over F_p, integer residues.
//
//   solution: {"field", "n", "blocks": n x n array of n x n matrices}
//             or {"field", "n", "kronecker": n^2 rows of n^2 scalars}
//   hopf:     {"field", "dim", "basis_names", "mult"[i][j][k], "unit",
//              "comult"[i][j][k], "counit", "antipode"[i] = coordinates of S(e_i)}
//   matrix:   {"field", "matrix": rows}

#include <string>

#include "json.hpp"

#include "pentagon/heisenberg.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/solution.hpp"
#include "pentagon/tensor.hpp"

namespace pentagon::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError, BadField, ShapeError, ZeroTensor.
Tensor2 parse_solution(const std::string& text);
/// Canonical form uses the "blocks" payload.
std::string serialize_solution(const Tensor2& r);

/// Throws ParseError, BadField, ShapeError. Axioms are not checked.
HopfData parse_hopf(const std::string& text);
std::string serialize_hopf(const HopfData& h);

/// Throws ParseError, BadField, ShapeError.
Mat parse_matrix(const std::string& text);
std::string serialize_matrix(const Mat& m);

Json field_json(const Field& f);
Json scalar_json(const Scalar& s);
Json matrix_json(const Mat& m);
Json hopf_json(const HopfData& h);
Json check_report_json(const CheckReport& r);

/// Two-space indentation; arrays of scalars stay on one line. Ends with '\n'.
std::string dump(const Json& j);
/// Indented "key: value" lines for humans.
std::string render_text(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Reports produced by the CLI subcommands.
Json verify_report(const Tensor2& r, PentagonMethod method, const PentagonVerdict& v);
Json analyze_report(const PentagonSolution& s);
Json lagrange_report_json(const LagrangeReport& l);
Json split_report_json(const SplitReport& r);

}  // namespace pentagon::io
