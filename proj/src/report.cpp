#include "arrangelab/report.hpp"

#include <sstream>

namespace arrangelab {

AnalysisReport analyze(const Arrangement& a, const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.field = a.field();
  r.size = a.size();
  if (a.size() < 2) {
    r.warnings.push_back("fewer than 2 lines: no intersection data");
    return r;
  }
  r.essential = is_essential(a);
  r.pencil = is_pencil(a);
  if (!r.essential) r.warnings.push_back("arrangement is not essential");
  for (const auto& p : a.lattice().points()) ++r.mu_histogram[p.mu()];
  r.n2 = n2(a);
  for (std::size_t h = 0; h < a.size(); ++h) {
    LineInfo li;
    li.form = a.line(h).form();
    li.n2 = n2_on_line(a, h);
    li.restriction_size = restriction_size(a, h);
    Multiarrangement2 res = restriction(a, h);
    li.multiplicities = res.sorted_multiplicities();
    if (a.size() >= 3) li.ziegler = multi_exponents(res);
    r.lines.push_back(std::move(li));
  }
  if (!r.essential) return r;

  r.chi = char_poly0(a);
  r.modular = modular_points(a);
  r.supersolvable = is_supersolvable(a);
  r.divisional = is_divisionally_free(a);
  try {
    r.mdr = mdr(a);
  } catch (const DegreeScanExceeded& e) {
    r.warnings.push_back(e.what());
  }
  if (a.field().characteristic() == 0) {
    FreenessVerdict v = is_free(a);
    r.freeness = v.str();
    if (v.free) {
      r.exponents = ExponentPair{v.d2, v.d3};
      if (opts.certify) {
        r.basis = certify_free(a, v.d2, v.d3);
        if (!r.basis) r.warnings.push_back("free verdict could not be certified by a basis");
      }
    }
  } else if (opts.certify) {
    auto roots = r.chi->integer_roots();
    if (roots && roots->first >= 0) {
      r.basis = certify_free(a, static_cast<int>(roots->first), static_cast<int>(roots->second));
      if (r.basis) {
        r.exponents = ExponentPair{static_cast<int>(roots->first), static_cast<int>(roots->second)};
        r.freeness = "Free(1," + std::to_string(roots->first) + "," + std::to_string(roots->second) + ")";
      }
    }
    if (!r.freeness) r.warnings.push_back("no certified basis found; freeness undecided in positive characteristic");
  } else {
    r.warnings.push_back("freeness decision needs characteristic 0 (try --certify)");
  }
  return r;
}

namespace {

std::string pair_str(const ExponentPair& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::string mults_str(const std::vector<int>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "field: " << r.field.name() << "\n";
  os << "lines: " << r.size << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  if (r.size < 2) return os.str();
  os << "essential: " << (r.essential ? "yes" : "no") << "\n";
  os << "pencil: " << (r.pencil ? "yes" : "no") << "\n";
  os << "points by mu:";
  for (const auto& [mu, count] : r.mu_histogram) os << " " << mu << ":" << count;
  os << "\n";
  os << "n2: " << r.n2 << "\n";
  if (r.chi) {
    os << "chi0: " << r.chi->str();
    if (auto roots = r.chi->integer_roots()) os << " = (t - " << roots->first << ")(t - " << roots->second << ")";
    os << "\n";
    os << "modular points:";
    if (r.modular.empty()) os << " none";
    for (const auto& mp : r.modular) os << " " << mp.point.str() << "[m=" << mp.m << "]";
    os << "\n";
    os << "supersolvable: ";
    if (r.supersolvable)
      os << "yes, p=" << r.supersolvable->point.str() << " m=" << r.supersolvable->m << " k=" << r.supersolvable->k;
    else
      os << "no";
    os << "\n";
    os << "divisionally free: ";
    if (r.divisional && r.divisional->holds)
      os << "yes, H=" << r.lines[*r.divisional->witness].form;
    else
      os << "no";
    os << "\n";
    os << "mdr: " << (r.mdr ? std::to_string(*r.mdr) : std::string("?")) << "\n";
    os << "freeness: " << r.freeness.value_or("undecided") << (r.basis ? " (certified)" : "") << "\n";
  }
  os << "per line (index, form, n2(H), |A^H|, multiplicities, Ziegler exponents):\n";
  for (std::size_t h = 0; h < r.lines.size(); ++h) {
    const LineInfo& li = r.lines[h];
    os << "  " << h << "  " << li.form << "  " << li.n2 << "  " << li.restriction_size << "  "
       << mults_str(li.multiplicities) << "  " << (li.ziegler ? pair_str(*li.ziegler) : "-") << "\n";
  }
  return os.str();
}

ojson analysis_to_json(const AnalysisReport& r) {
  ojson j;
  j["report_version"] = 1;
  j["field"] = field_to_json(r.field);
  j["size"] = r.size;
  j["essential"] = r.essential;
  j["pencil"] = r.pencil;
  ojson hist = ojson::object();
  for (const auto& [mu, count] : r.mu_histogram) hist[std::to_string(mu)] = count;
  j["mu_histogram"] = std::move(hist);
  j["n2"] = r.n2;
  ojson lines = ojson::array();
  for (const LineInfo& li : r.lines) {
    ojson l;
    l["form"] = li.form;
    l["n2"] = li.n2;
    l["restriction_size"] = li.restriction_size;
    l["multiplicities"] = li.multiplicities;
    l["ziegler_exponents"] = li.ziegler ? ojson{li.ziegler->first, li.ziegler->second} : ojson(nullptr);
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  if (r.chi) {
    j["chi0"] = {{"c1", r.chi->c1}, {"c0", r.chi->c0}};
    auto roots = r.chi->integer_roots();
    j["chi0_roots"] = roots ? ojson{roots->first, roots->second} : ojson(nullptr);
    ojson mods = ojson::array();
    for (const auto& mp : r.modular) mods.push_back({{"point", mp.point.str()}, {"m", mp.m}});
    j["modular_points"] = std::move(mods);
    j["supersolvable"] = r.supersolvable ? ojson{{"point", r.supersolvable->point.str()},
                                                 {"m", r.supersolvable->m},
                                                 {"k", r.supersolvable->k}}
                                         : ojson(nullptr);
    j["divisionally_free"] = r.divisional && r.divisional->holds
                                 ? ojson{{"witness_line", *r.divisional->witness}}
                                 : ojson(nullptr);
    j["mdr"] = r.mdr ? ojson(*r.mdr) : ojson(nullptr);
    j["freeness"] = r.freeness ? ojson(*r.freeness) : ojson(nullptr);
    j["exponents"] = r.exponents ? ojson{1, r.exponents->first, r.exponents->second} : ojson(nullptr);
    if (r.basis)
      j["basis"] = ojson{derivation_to_json(r.basis->first), derivation_to_json(r.basis->second)};
  }
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace arrangelab
