#pragma once

#include "arrangelab/gradedla.hpp"
#include "arrangelab/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace arrangelab {

using ojson = nlohmann::ordered_json;

/// Parsed arrangement document:
///   {"field": {"kind": "rational"} | {"kind": "quadratic", "d": D}
///             | {"kind": "prime", "p": P},
///    "lines": [["a", "b", "c"], ...],
///    "meta": {...}}                       (meta optional)
struct ArrangementFile {
  Arrangement arrangement;
  ojson meta = ojson::object();
};

ojson field_to_json(const Field& f);
Field field_from_json(const ojson& j);

/// Throws ParseError; syntax errors carry "line L, column C".
ArrangementFile parse_arrangement(std::string_view text);
/// Canonical rendering: two-space indent, one line per coefficient triple,
/// trailing newline. parse_arrangement(render_arrangement(a)) reproduces a.
std::string render_arrangement(const Arrangement& a, const ojson& meta = ojson::object());

ArrangementFile read_arrangement_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"degree": d, "terms": [{"monomial": [i, j, k], "coeffs": [cx, cy, cz]}, ...]}
/// listing only monomials with a nonzero coefficient, in lex order.
ojson derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Field& f, const ojson& j);

ojson report_to_json(const TheoremReport& r);
ojson scan_to_json(const ScanReport& s);

}  // namespace arrangelab
