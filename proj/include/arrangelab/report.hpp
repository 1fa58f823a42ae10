#pragma once

#include "arrangelab/io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arrangelab {

struct AnalyzeOptions {
  /// Search for an explicit basis certifying the freeness verdict. In
  /// positive characteristic this is the only way to obtain a verdict.
  bool certify = false;
};

struct LineInfo {
  std::string form;
  int n2 = 0;
  int restriction_size = 0;
  std::vector<int> multiplicities;
  std::optional<ExponentPair> ziegler;
};

struct AnalysisReport {
  Field field;
  std::size_t size = 0;
  bool essential = false;
  bool pencil = false;
  std::map<int, int> mu_histogram;  // mu -> number of points
  int n2 = 0;
  std::vector<LineInfo> lines;
  std::optional<CharPoly> chi;
  std::vector<ModularPoint> modular;
  std::optional<SupersolvableWitness> supersolvable;
  std::optional<DivisionalFreeness> divisional;
  std::optional<int> mdr;
  /// "Free(1,a,b)", "NonFree", or absent when no verdict is available.
  std::optional<std::string> freeness;
  std::optional<ExponentPair> exponents;
  std::optional<std::pair<Derivation, Derivation>> basis;
  std::vector<std::string> warnings;
};

AnalysisReport analyze(const Arrangement& a, const AnalyzeOptions& opts = {});
std::string render_text(const AnalysisReport& r);
/// Machine-readable form with "report_version": 1.
ojson analysis_to_json(const AnalysisReport& r);

}  // namespace arrangelab
