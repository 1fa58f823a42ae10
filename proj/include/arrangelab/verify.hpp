#pragma once

#include "arrangelab/gradedla.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arrangelab {

using Quantity = std::variant<std::int64_t, bool, std::string>;

/// Outcome of one theorem check. `holds` is meaningful only when applicable;
/// otherwise `failed_hypothesis` names the hypothesis that was not met.
struct TheoremReport {
  std::string id;
  bool applicable = false;
  bool holds = false;
  std::string failed_hypothesis;
  std::vector<std::pair<std::string, Quantity>> quantities;
  std::optional<std::string> witness;

  void put(std::string name, Quantity value);
  const Quantity* get(std::string_view name) const;
  bool failed() const { return applicable && !holds; }
};

struct VerifyOptions {
  /// Run characteristic-zero theorems over F_p anyway.
  bool allow_positive_char = false;
  /// Certify freeness verdicts with an explicit basis.
  bool certify = false;
};

/// Check ids accepted by `verify --theorem`.
const std::vector<std::string>& theorem_ids();

TheoremReport check_theorem_main(const Arrangement& a, const VerifyOptions& opts = {});
/// With `p`, uses that modular point instead of the canonical maximal one.
TheoremReport check_corollary_bound(const Arrangement& a, const std::optional<ProjPoint>& p = {},
                                    const VerifyOptions& opts = {});
/// Adds `l` to the free arrangement `a_prime`; throws if l is already in it.
TheoremReport check_addition(const Arrangement& a_prime, const Line& l, const VerifyOptions& opts = {});
TheoremReport check_mdr_bounds(const Arrangement& a, const VerifyOptions& opts = {});
TheoremReport check_div_free_sg(const Arrangement& a, const VerifyOptions& opts = {});
TheoremReport check_large(const Arrangement& a, const VerifyOptions& opts = {});
TheoremReport check_deletion_ss(const Arrangement& a, std::size_t h, const VerifyOptions& opts = {});
TheoremReport check_at2(const Arrangement& a, const VerifyOptions& opts = {});
TheoremReport kawanoue_certificate(const VerifyOptions& opts = {});

/// Every check that takes an arrangement; addition and deletion run once per
/// line (addition treats a minus that line as the free arrangement).
std::vector<TheoremReport> verify_all(const Arrangement& a, const VerifyOptions& opts = {});
/// One check by id. `line` selects the line for addition and deletion; when
/// absent those checks run for every line.
std::vector<TheoremReport> verify_one(const Arrangement& a, std::string_view id,
                                      std::optional<std::size_t> line, const VerifyOptions& opts = {});

// ---- conjecture search ------------------------------------------------------

struct ScanOptions {
  /// Comma-separated members: "family:lo-hi" (size range; for monomial the
  /// range is n), "dual_hesse", or "mixed".
  std::string corpus = "mixed";
  int trials = 100;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Appends a dual Hesse record whose verdict is forced to NonFree.
  bool inject_fake = false;
};

struct ScanRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string member;
  Arrangement arrangement{Field(), {}};
  int n2 = 0;
  bool free = false;
  int d2 = 0;
  int d3 = 0;
  bool supersolvable = false;
  bool candidate = false;
  /// Lines whose deletion from a free member is NonFree with no double point.
  std::vector<std::size_t> deletion_candidates;
  bool injected = false;
};

struct ScanRow {
  std::size_t count = 0;
  std::size_t free = 0;
  int min_n2 = 0;
  int max_n2 = 0;
  std::size_t half_bound = 0;  // members with 2 n2 >= |A|
};

struct ScanReport {
  std::vector<ScanRecord> records;
  std::map<std::size_t, ScanRow> by_size;
  std::size_t candidates = 0;
  std::size_t deletion_candidates = 0;
  std::size_t supersolvable_violations = 0;

  std::string table() const;
};

ScanReport conjecture_scan(const ScanOptions& opts);

}  // namespace arrangelab
