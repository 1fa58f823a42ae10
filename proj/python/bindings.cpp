#include "arrangelab/cli.hpp"
#include "arrangelab/families.hpp"
#include "arrangelab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace arrangelab;

namespace {

Arrangement parse_text(const std::string& text) { return parse_arrangement(text).arrangement; }

std::string verify_json(const Arrangement& a, const std::string& theorem, std::optional<std::size_t> line,
                        bool certify, bool allow_positive_char) {
  const VerifyOptions opts{allow_positive_char, certify};
  std::vector<TheoremReport> reports =
      theorem == "all" ? verify_all(a, opts) : verify_one(a, theorem, line, opts);
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of projective line arrangements";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Arrangement>(m, "Arrangement")
      .def_static("from_json", &parse_text, py::arg("text"))
      .def("to_json", [](const Arrangement& a) { return render_arrangement(a); })
      .def("__len__", &Arrangement::size)
      .def_property_readonly("field", [](const Arrangement& a) { return a.field().name(); })
      .def_property_readonly("characteristic", [](const Arrangement& a) { return a.field().characteristic(); })
      .def_property_readonly("lines",
                             [](const Arrangement& a) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.line(i).form());
                               return out;
                             })
      .def("is_essential", [](const Arrangement& a) { return is_essential(a); })
      .def("is_pencil", [](const Arrangement& a) { return is_pencil(a); })
      .def("n2", [](const Arrangement& a) { return n2(a); })
      .def("n2_on_line", [](const Arrangement& a, std::size_t h) { return n2_on_line(a, h); }, py::arg("h"))
      .def("restriction_size", [](const Arrangement& a, std::size_t h) { return restriction_size(a, h); },
           py::arg("h"))
      .def("restriction_multiplicities",
           [](const Arrangement& a, std::size_t h) {
             if (h >= a.size()) throw py::index_error("line index out of range");
             return restriction(a, h).sorted_multiplicities();
           },
           py::arg("h"))
      .def("ziegler_exponents",
           [](const Arrangement& a, std::size_t h) {
             if (h >= a.size()) throw py::index_error("line index out of range");
             return ziegler_exponents(a, h);
           },
           py::arg("h"))
      .def("char_poly",
           [](const Arrangement& a) {
             CharPoly c = char_poly0(a);
             return std::make_pair(c.c1, c.c0);
           })
      .def("mdr", [](const Arrangement& a) { return mdr(a); })
      .def("is_supersolvable", [](const Arrangement& a) { return is_supersolvable(a).has_value(); })
      .def("is_free",
           [](const Arrangement& a) -> std::optional<std::pair<int, int>> {
             FreenessVerdict v = is_free(a);
             if (!v.free) return std::nullopt;
             return std::make_pair(v.d2, v.d3);
           },
           "Exponents (d2, d3) when free, None otherwise. Characteristic 0 only.")
      .def("delete_line", [](const Arrangement& a, std::size_t h) { return delete_line(a, h); }, py::arg("h"));

  m.def(
      "family",
      [](const std::string& name, std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t mm, std::int64_t k,
         std::int64_t p, std::uint64_t seed) {
        FamilySpec s;
        s.name = name;
        s.n = n;
        s.a = a;
        s.b = b;
        s.m = mm;
        s.k = k;
        s.p = p;
        s.seed = seed;
        return make_family(s);
      },
      py::arg("name"), py::arg("n") = FamilySpec{}.n, py::arg("a") = FamilySpec{}.a, py::arg("b") = FamilySpec{}.b,
      py::arg("m") = FamilySpec{}.m, py::arg("k") = FamilySpec{}.k, py::arg("p") = FamilySpec{}.p,
      py::arg("seed") = FamilySpec{}.seed);
  m.def("family_names", &family_names);

  m.def(
      "_analyze_json",
      [](const Arrangement& a, bool certify) { return analysis_to_json(analyze(a, {certify})).dump(); },
      py::arg("arrangement"), py::arg("certify") = false);
  m.def("_verify_json", &verify_json, py::arg("arrangement"), py::arg("theorem"), py::arg("line") = py::none(),
        py::arg("certify") = false, py::arg("allow_positive_char") = false);
  m.def("_kawanoue_json", [](bool certify) { return report_to_json(kawanoue_certificate({false, certify})).dump(); },
        py::arg("certify") = true);
  m.def(
      "_search_json",
      [](const std::string& corpus, int trials, std::uint64_t seed, int jobs, bool inject_fake) {
        ScanOptions o;
        o.corpus = corpus;
        o.trials = trials;
        o.seed = seed;
        o.jobs = jobs;
        o.inject_fake = inject_fake;
        py::gil_scoped_release release;
        return scan_to_json(conjecture_scan(o)).dump();
      },
      py::arg("corpus"), py::arg("trials"), py::arg("seed"), py::arg("jobs"), py::arg("inject_fake"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
