#include "arrangelab/io.hpp"

#include "arrangelab/poly.hpp"

#include <fstream>
#include <sstream>

namespace arrangelab {

namespace {

const ojson& member(const ojson& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::int64_t integer(const ojson& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

ojson field_to_json(const Field& f) {
  ojson j;
  switch (f.kind()) {
    case FieldKind::rational:
      j["kind"] = "rational";
      break;
    case FieldKind::quadratic:
      j["kind"] = "quadratic";
      j["d"] = f.descriptor().param;
      break;
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = f.descriptor().param;
      break;
  }
  return j;
}

Field field_from_json(const ojson& j) {
  const ojson& kind = member(j, "kind", "field");
  if (!kind.is_string()) throw ParseError("field.kind: expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "rational") return Field(FieldDescriptor::rational());
    if (k == "quadratic") return Field(FieldDescriptor::quadratic(integer(member(j, "d", "field"), "field.d")));
    if (k == "prime") return Field(FieldDescriptor::prime(integer(member(j, "p", "field"), "field.p")));
  } catch (const FieldError& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
  throw ParseError("field.kind: unknown kind '" + k + "'");
}

ArrangementFile parse_arrangement(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  Field f = field_from_json(member(doc, "field", "document"));
  const ojson& lines = member(doc, "lines", "document");
  if (!lines.is_array()) throw ParseError("lines: expected an array");
  std::vector<Line> ls;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "lines[" + std::to_string(i) + "]";
    const ojson& row = lines[i];
    if (!row.is_array() || row.size() != 3) throw ParseError(where + ": expected 3 coefficients");
    Triple t;
    for (std::size_t c = 0; c < 3; ++c) {
      if (!row[c].is_string())
        throw ParseError(where + "[" + std::to_string(c) + "]: coefficients are strings");
      try {
        t[c] = f.parse(row[c].get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + "[" + std::to_string(c) + "]: " + e.what());
      }
    }
    if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) throw ParseError(where + ": zero linear form");
    ls.push_back(Line::from_coeffs(t));
  }
  ArrangementFile out{Arrangement(f, std::move(ls))};
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw ParseError("meta: expected an object");
    out.meta = doc["meta"];
  }
  return out;
}

std::string render_arrangement(const Arrangement& a, const ojson& meta) {
  std::ostringstream os;
  os << "{\n  \"field\": " << field_to_json(a.field()).dump() << ",\n  \"lines\": [";
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Line& l = a.line(i);
    os << (i ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < 3; ++c) os << (c ? ", " : "") << ojson(l[c].str()).dump();
    os << "]";
  }
  os << (a.size() ? "\n  ]" : "]");
  if (!meta.empty()) os << ",\n  \"meta\": " << meta.dump();
  os << "\n}\n";
  return os.str();
}

ArrangementFile read_arrangement_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return parse_arrangement(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

ojson derivation_to_json(const Derivation& d) {
  ojson j;
  j["degree"] = d.degree;
  ojson terms = ojson::array();
  const auto mons = monomials(d.degree);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (d.coeffs[0][m].is_zero() && d.coeffs[1][m].is_zero() && d.coeffs[2][m].is_zero()) continue;
    ojson t;
    t["monomial"] = {mons[m][0], mons[m][1], mons[m][2]};
    t["coeffs"] = {d.coeffs[0][m].str(), d.coeffs[1][m].str(), d.coeffs[2][m].str()};
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Derivation derivation_from_json(const Field& f, const ojson& j) {
  const std::int64_t degree = integer(member(j, "degree", "derivation"), "derivation.degree");
  if (degree < 0 || degree > 1000) throw ParseError("derivation.degree out of range");
  Derivation d = Derivation::zero(f, static_cast<int>(degree));
  const ojson& terms = member(j, "terms", "derivation");
  if (!terms.is_array()) throw ParseError("derivation.terms: expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "derivation.terms[" + std::to_string(i) + "]";
    const ojson& mon = member(terms[i], "monomial", where);
    const ojson& cs = member(terms[i], "coeffs", where);
    if (!mon.is_array() || mon.size() != 3 || !cs.is_array() || cs.size() != 3)
      throw ParseError(where + ": monomial and coeffs need 3 entries");
    Exponent3 e{};
    for (std::size_t c = 0; c < 3; ++c) {
      std::int64_t v = integer(mon[c], where + ".monomial");
      if (v < 0) throw ParseError(where + ": negative exponent");
      e[c] = static_cast<int>(v);
    }
    if (e[0] + e[1] + e[2] != degree) throw ParseError(where + ": monomial degree differs from the derivation degree");
    const std::size_t idx = monomial_index(e);
    for (std::size_t c = 0; c < 3; ++c) {
      if (!cs[c].is_string()) throw ParseError(where + ".coeffs: coefficients are strings");
      d.coeffs[c][idx] = f.parse(cs[c].get<std::string>());
    }
  }
  return d;
}

ojson report_to_json(const TheoremReport& r) {
  ojson j;
  j["id"] = r.id;
  j["applicable"] = r.applicable;
  j["holds"] = r.applicable ? ojson(r.holds) : ojson(nullptr);
  if (!r.applicable) j["failed_hypothesis"] = r.failed_hypothesis;
  ojson q = ojson::object();
  for (const auto& [k, v] : r.quantities) std::visit([&](const auto& x) { q[k] = x; }, v);
  j["quantities"] = std::move(q);
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

ojson scan_to_json(const ScanReport& s) {
  ojson j;
  j["report_version"] = 1;
  j["trials"] = s.records.size();
  j["candidates"] = s.candidates;
  j["deletion_candidates"] = s.deletion_candidates;
  j["supersolvable_half_bound_violations"] = s.supersolvable_violations;
  ojson stats = ojson::array();
  for (const auto& [size, row] : s.by_size)
    stats.push_back({{"size", size},
                     {"count", row.count},
                     {"free", row.free},
                     {"min_n2", row.min_n2},
                     {"max_n2", row.max_n2},
                     {"half_bound", row.half_bound}});
  j["statistics"] = std::move(stats);
  ojson flagged = ojson::array();
  for (const ScanRecord& rec : s.records) {
    if (!rec.candidate && rec.deletion_candidates.empty()) continue;
    ojson c;
    c["trial"] = rec.trial;
    c["seed"] = rec.seed;
    c["member"] = rec.member;
    c["injected"] = rec.injected;
    c["free"] = rec.free;
    c["n2"] = rec.n2;
    c["deletion_candidates"] = rec.deletion_candidates;
    c["arrangement"] = ojson::parse(render_arrangement(rec.arrangement));
    flagged.push_back(std::move(c));
  }
  j["flagged"] = std::move(flagged);
  return j;
}

}  // namespace arrangelab
