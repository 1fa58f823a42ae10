#include "arrangelab/cli.hpp"

#include "arrangelab/families.hpp"
#include "arrangelab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace arrangelab {

namespace {

struct AnalyzeArgs {
  std::string path;
  bool json = false;
  std::string json_out;
  bool strict = false;
  bool certify = false;
};

struct GenerateArgs {
  FamilySpec spec;
  std::string out;
};

struct RestrictArgs {
  std::string path;
  std::size_t line = 0;
  bool json = false;
};

struct VerifyArgs {
  std::string path;
  std::string theorem;
  bool all = false;
  std::optional<std::size_t> line;
  bool certify = false;
  bool allow_positive_char = false;
  std::string basis;
  bool json = false;
};

struct SearchArgs {
  ScanOptions scan;
  std::string out;
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  ArrangementFile file = read_arrangement_file(args.path);
  const Arrangement& a = file.arrangement;
  if (a.size() == 0) throw ParseError(args.path + ": no lines");
  if (args.strict && (a.size() < 3 || !is_essential(a))) {
    err << "error: " << args.path << ": arrangement is not essential\n";
    return kExitCheckFailed;
  }
  AnalysisReport r = analyze(a, {args.certify});
  if (!args.json)
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  const std::string json = analysis_to_json(r).dump(2) + "\n";
  if (!args.json_out.empty()) write_text_file(args.json_out, json);
  out << (args.json ? json : render_text(r));
  return kExitOk;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  Arrangement a = make_family(args.spec);
  const FamilySpec& s = args.spec;
  ojson meta;
  meta["family"] = s.name;
  ojson params = ojson::object();
  if (s.name == "near_pencil" || s.name == "monomial" || s.name == "full_monomial" || s.name == "generic" ||
      s.name == "random")
    params["n"] = s.n;
  if (s.name == "grid") {
    params["a"] = s.a;
    params["b"] = s.b;
  }
  if (s.name == "random_supersolvable") {
    params["m"] = s.m;
    params["k"] = s.k;
  }
  if (s.name == "finite_plane") params["p"] = s.p;
  meta["params"] = std::move(params);
  if (s.name == "generic" || s.name == "random" || s.name == "random_supersolvable") meta["seed"] = s.seed;
  emit(out, args.out, render_arrangement(a, meta));
  return kExitOk;
}

int cmd_restrict(const RestrictArgs& args, std::ostream& out) {
  ArrangementFile file = read_arrangement_file(args.path);
  const Arrangement& a = file.arrangement;
  if (args.line >= a.size())
    throw std::out_of_range("line index " + std::to_string(args.line) + " out of range for " +
                            std::to_string(a.size()) + " lines");
  Multiarrangement2 m = restriction(a, args.line);
  ExponentPair e = multi_exponents(m);
  if (args.json) {
    ojson j;
    j["report_version"] = 1;
    j["line"] = a.line(args.line).form();
    ojson pts = ojson::array();
    for (std::size_t i = 0; i < m.points.size(); ++i)
      pts.push_back({{"point", "[" + m.points[i][0].str() + ":" + m.points[i][1].str() + "]"},
                     {"multiplicity", m.mult[i]}});
    j["points"] = std::move(pts);
    j["total"] = m.total();
    j["exponents"] = {e.first, e.second};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "restriction to " << a.line(args.line).form() << ": " << m.points.size() << " points, |m| = "
      << m.total() << "\n";
  for (std::size_t i = 0; i < m.points.size(); ++i)
    out << "  [" << m.points[i][0].str() << ":" << m.points[i][1].str() << "]  multiplicity " << m.mult[i]
        << "\n";
  auto sorted = m.sorted_multiplicities();
  out << "multiplicities: {";
  for (std::size_t i = 0; i < sorted.size(); ++i) out << (i ? "," : "") << sorted[i];
  out << "}\nexponents: (" << e.first << "," << e.second << ")\n";
  return kExitOk;
}

std::string quantity_str(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>)
          return v;
        else
          return std::to_string(v);
      },
      q);
}

void print_report(std::ostream& out, const TheoremReport& r) {
  out << (r.applicable ? (r.holds ? "[PASS] " : "[FAIL] ") : "[N/A]  ") << r.id;
  if (!r.applicable) out << ": requires " << r.failed_hypothesis;
  for (const auto& [k, v] : r.quantities) out << " " << k << "=" << quantity_str(v);
  out << "\n";
  if (r.witness) out << "       witness: " << *r.witness << "\n";
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (!args.all && args.theorem.empty() && args.basis.empty())
    throw std::invalid_argument("verify needs --theorem ID, --all or --basis FILE");
  const VerifyOptions opts{args.allow_positive_char, args.certify};
  std::vector<TheoremReport> reports;
  std::optional<ArrangementFile> file;
  const bool needs_file = args.all || !args.basis.empty() || (!args.theorem.empty() && args.theorem != "kawanoue");
  if (needs_file) {
    if (args.path.empty()) throw std::invalid_argument("verify needs an arrangement file");
    file = read_arrangement_file(args.path);
  }
  if (args.all) {
    reports = verify_all(file->arrangement, opts);
  } else if (!args.theorem.empty()) {
    if (args.theorem == "kawanoue")
      reports.push_back(kawanoue_certificate(opts));
    else
      reports = verify_one(file->arrangement, args.theorem, args.line, opts);
  }

  ojson saito;
  bool saito_ok = true;
  if (!args.basis.empty()) {
    std::ifstream in(args.basis, std::ios::binary);
    if (!in) throw ParseError("cannot read " + args.basis);
    ojson doc;
    try {
      doc = ojson::parse(in);
    } catch (const ojson::parse_error& e) {
      throw ParseError(args.basis + ": " + e.what());
    }
    const ojson& list = doc.is_object() && doc.contains("basis") ? doc["basis"] : doc;
    if (!list.is_array() || list.size() != 2)
      throw ParseError(args.basis + ": expected two derivations (or an object with \"basis\")");
    const Field& f = file->arrangement.field();
    Derivation t2 = derivation_from_json(f, list[0]), t3 = derivation_from_json(f, list[1]);
    SaitoResult res = saito_check(file->arrangement, t2, t3);
    saito_ok = res.ok;
    saito = {{"ok", res.ok}, {"reason", to_string(res.reason)}, {"degrees", {1, t2.degree, t3.degree}}};
  }

  bool ok = saito_ok;
  for (const auto& r : reports) ok = ok && !r.failed();
  if (args.json) {
    ojson j;
    j["report_version"] = 1;
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["reports"] = std::move(arr);
    if (!args.basis.empty()) j["saito"] = saito;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(out, r);
    if (!args.basis.empty())
      out << (saito_ok ? "[PASS] " : "[FAIL] ") << "saito: " << saito["reason"].get<std::string>()
          << " degrees=(1," << saito["degrees"][1] << "," << saito["degrees"][2] << ")\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_search(const SearchArgs& args, std::ostream& out) {
  ScanReport rep = conjecture_scan(args.scan);
  out << "trials: " << rep.records.size() << "\n";
  out << "counterexample candidates (NonFree, n2 = 0): " << rep.candidates << "\n";
  out << "deletion candidates (free A, NonFree A\\H, n2 = 0): " << rep.deletion_candidates << "\n";
  out << "supersolvable members with 2*n2 < |A|: " << rep.supersolvable_violations << "\n";
  for (const auto& rec : rep.records)
    if (rec.candidate || !rec.deletion_candidates.empty())
      out << "  candidate: trial " << rec.trial << " " << rec.member << (rec.injected ? " (injected)" : "")
          << "\n";
  out << "n2 against |A|/2 by size:\n" << rep.table();
  if (!args.out.empty()) write_text_file(args.out, scan_to_json(rep).dump(2) + "\n");
  return rep.candidates + rep.deletion_candidates > 0 ? kExitCandidate : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of projective line arrangements", "arrangelab"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full combinatorial and algebraic report");
  analyze_cmd->add_option("file", an.path, "Arrangement file")->required();
  analyze_cmd->add_flag("--json", an.json, "Print the machine-readable report");
  analyze_cmd->add_option("--json-out", an.json_out, "Also write the machine-readable report here");
  analyze_cmd->add_flag("--strict", an.strict, "Reject non-essential input");
  analyze_cmd->add_flag("--certify", an.certify, "Certify the freeness verdict with an explicit basis");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a family member as an arrangement file");
  generate_cmd->add_option("--family", gen.spec.name, "Family name")->required();
  generate_cmd->add_option("--n", gen.spec.n, "Size or order parameter");
  generate_cmd->add_option("--a", gen.spec.a, "grid: number of x lines");
  generate_cmd->add_option("--b", gen.spec.b, "grid: number of y lines");
  generate_cmd->add_option("--m", gen.spec.m, "random_supersolvable: lines through the modular point");
  generate_cmd->add_option("--k", gen.spec.k, "random_supersolvable: remaining lines");
  generate_cmd->add_option("--p", gen.spec.p, "finite_plane: prime");
  generate_cmd->add_option("--seed", gen.spec.seed, "Seed of randomized families");
  generate_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  RestrictArgs rs;
  auto* restrict_cmd = app.add_subcommand("restrict", "Ziegler restriction onto one line");
  restrict_cmd->add_option("file", rs.path, "Arrangement file")->required();
  restrict_cmd->add_option("--line", rs.line, "Line index")->required();
  restrict_cmd->add_flag("--json", rs.json, "Machine-readable output");

  VerifyArgs vf;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks");
  verify_cmd->add_option("file", vf.path, "Arrangement file");
  verify_cmd->add_option("--theorem", vf.theorem, "Check id")
      ->check(CLI::IsMember(theorem_ids()));
  verify_cmd->add_flag("--all", vf.all, "Run every check that takes an arrangement");
  verify_cmd->add_option("--line", vf.line, "Line index for addition and deletion");
  verify_cmd->add_flag("--certify", vf.certify, "Certify freeness verdicts with explicit bases");
  verify_cmd->add_flag("--allow-positive-char", vf.allow_positive_char,
                       "Run characteristic-zero checks over F_p anyway");
  verify_cmd->add_option("--basis", vf.basis, "Derivation file to certify with saito_check");
  verify_cmd->add_flag("--json", vf.json, "Machine-readable output");

  SearchArgs se;
  auto* search_cmd = app.add_subcommand("search", "Counterexample search over a seeded corpus");
  search_cmd->add_option("--corpus", se.scan.corpus, "Corpus description");
  search_cmd->add_option("--trials", se.scan.trials, "Number of arrangements");
  search_cmd->add_option("--seed", se.scan.seed, "First seed");
  search_cmd->add_option("--jobs", se.scan.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", se.out, "Write the JSON scan report here");
  search_cmd->add_flag("--inject-fake", se.scan.inject_fake, "Append a forced candidate (plumbing test)");

  std::vector<std::string> args(argv_in.rbegin(), argv_in.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(an, out, err);
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*restrict_cmd) return cmd_restrict(rs, out);
    if (*verify_cmd) return cmd_verify(vf, out);
    if (*search_cmd) return cmd_search(se, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace arrangelab
