#include "arrangelab/verify.hpp"

#include "arrangelab/families.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace arrangelab {

void TheoremReport::put(std::string name, Quantity value) {
  for (auto& [k, v] : quantities)
    if (k == name) {
      v = std::move(value);
      return;
    }
  quantities.emplace_back(std::move(name), std::move(value));
}

const Quantity* TheoremReport::get(std::string_view name) const {
  for (const auto& [k, v] : quantities)
    if (k == name) return &v;
  return nullptr;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"half_bound", "split_bound", "addition",
                                            "mdr_bound",  "divisional",  "large",
                                            "deletion",   "modular_lines", "kawanoue"};
  return ids;
}

namespace {

using I = std::int64_t;

TheoremReport start(std::string id) {
  TheoremReport r;
  r.id = std::move(id);
  return r;
}

TheoremReport skip(TheoremReport r, std::string why) {
  r.applicable = false;
  r.holds = false;
  r.failed_hypothesis = std::move(why);
  return r;
}

std::optional<std::string> char_zero_missing(const Arrangement& a, const VerifyOptions& opts) {
  if (a.field().characteristic() != 0 && !opts.allow_positive_char)
    return "characteristic zero (field is " + a.field().name() + ")";
  return std::nullopt;
}

std::optional<std::string> essential_missing(const Arrangement& a) {
  if (a.size() < 3 || !is_essential(a)) return std::string("essential arrangement");
  return std::nullopt;
}

std::string exp_str(int d2, int d3) {
  return "(1," + std::to_string(d2) + "," + std::to_string(d3) + ")";
}

/// Double points on line h.
std::vector<std::size_t> doubles_on(const Arrangement& a, std::size_t h) {
  std::vector<std::size_t> out;
  const auto& pts = a.lattice().points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].lines.size() == 2 && (pts[i].lines[0] == h || pts[i].lines[1] == h)) out.push_back(i);
  return out;
}

bool in_pencil(const SupersolvableWitness& w, std::size_t h) {
  return std::binary_search(w.pencil_lines.begin(), w.pencil_lines.end(), h);
}

struct Freeness {
  bool free = false;
  int d2 = 0;
  int d3 = 0;
  std::optional<bool> certified;
};

// Char 0 uses is_free; positive characteristic needs an explicit basis.
Freeness decide_free(const Arrangement& a, bool certify) {
  Freeness out;
  if (a.field().characteristic() == 0) {
    FreenessVerdict v = is_free(a);
    out.free = v.free;
    out.d2 = v.d2;
    out.d3 = v.d3;
    if (v.free && certify) out.certified = certify_free(a, v.d2, v.d3).has_value();
    return out;
  }
  auto roots = terao_exponents(a);
  if (!roots) return out;
  if (certify_free(a, static_cast<int>(roots->first), static_cast<int>(roots->second))) {
    out.free = true;
    out.d2 = static_cast<int>(roots->first);
    out.d3 = static_cast<int>(roots->second);
    out.certified = true;
  }
  return out;
}

}  // namespace

TheoremReport check_theorem_main(const Arrangement& a, const VerifyOptions& opts) {
  TheoremReport r = start("half_bound");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  auto w = is_supersolvable(a);
  if (!w) return skip(r, "supersolvable");
  const int n = n2(a);
  r.applicable = true;
  r.put("size", static_cast<I>(a.size()));
  r.put("n2", static_cast<I>(n));
  r.put("m", static_cast<I>(w->m));
  r.put("k", static_cast<I>(w->k));
  r.put("modular_point", w->point.str());
  r.holds = 2 * n >= static_cast<int>(a.size());
  if (!r.holds) r.witness = "2*n2 = " + std::to_string(2 * n) + " < |A| = " + std::to_string(a.size());
  return r;
}

TheoremReport check_corollary_bound(const Arrangement& a, const std::optional<ProjPoint>& p,
                                    const VerifyOptions& opts) {
  TheoremReport r = start("split_bound");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  auto w = p ? supersolvable_at(a, *p) : is_supersolvable(a);
  if (!w) return skip(r, p ? "modular point " + p->str() : std::string("supersolvable"));
  const int m = w->m, k = w->k, n = n2(a);
  r.applicable = true;
  r.put("size", static_cast<I>(a.size()));
  r.put("modular_point", w->point.str());
  r.put("m", static_cast<I>(m));
  r.put("k", static_cast<I>(k));
  r.put("n2", static_cast<I>(n));
  r.holds = true;
  std::ostringstream why;
  if (k <= m) {
    const int bound = k * (m - k + 1);
    r.put("bound_k_le_m", static_cast<I>(bound));
    if (n < bound) {
      r.holds = false;
      why << "n2 = " << n << " < k(m-k+1) = " << bound << "; ";
    }
  }
  if (k >= m) {
    r.put("bound_k_ge_m", static_cast<I>(k));
    if (n < k) {
      r.holds = false;
      why << "n2 = " << n << " < k = " << k << "; ";
    }
  }

  // Lines off the modular pencil: each restriction has m points and their
  // double points are pairwise distinct.
  std::set<std::size_t> seen;
  I sum = 0;
  bool sizes_ok = true, distinct = true;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (in_pencil(*w, h)) continue;
    if (restriction_size(a, h) != m) {
      sizes_ok = false;
      why << "|A^H| != m on line " << h << "; ";
    }
    for (std::size_t q : doubles_on(a, h)) {
      ++sum;
      if (!seen.insert(q).second) {
        distinct = false;
        why << "double point " << a.lattice().points()[q].point.str() << " shared; ";
      }
    }
  }
  r.put("off_pencil_restrictions_equal_m", sizes_ok);
  r.put("off_pencil_doubles_distinct", distinct);
  r.put("off_pencil_double_sum", sum);
  r.holds = r.holds && sizes_ok && distinct && sum <= n;
  if (!r.holds) r.witness = why.str();
  return r;
}

TheoremReport check_addition(const Arrangement& a_prime, const Line& l, const VerifyOptions& opts) {
  if (a_prime.index_of(l))
    throw std::invalid_argument("line " + l.form() + " already belongs to the arrangement");
  TheoremReport r = start("addition");
  r.put("line", l.form());
  if (auto why = char_zero_missing(a_prime, opts)) return skip(r, *why);
  if (auto why = essential_missing(a_prime)) return skip(r, *why + " without the line");
  Freeness fr = decide_free(a_prime, opts.certify);
  if (fr.certified) r.put("certified", *fr.certified);
  if (!fr.free) return skip(r, "freeness of the arrangement without the line");
  Arrangement a = add_line(a_prime, l);
  const std::size_t h = a.size() - 1;
  const int nh = n2_on_line(a, h), na = n2(a);
  r.applicable = true;
  r.put("size", static_cast<I>(a.size()));
  r.put("exponents", exp_str(fr.d2, fr.d3));
  r.put("n2_H", static_cast<I>(nh));
  r.put("n2", static_cast<I>(na));
  r.put("strict_holds", na > nh);
  r.holds = nh > 0 && fr.certified.value_or(true);
  if (nh == 0) r.witness = "line " + l.form() + " carries no double point: n2(H) = 0";
  else if (!r.holds) r.witness = "freeness verdict could not be certified by a basis";
  return r;
}

TheoremReport check_mdr_bounds(const Arrangement& a, const VerifyOptions& opts) {
  TheoremReport r = start("mdr_bound");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  int rr = 0;
  try {
    rr = mdr(a);
  } catch (const DegreeScanExceeded& e) {
    return skip(r, std::string("mdr within the scan cap: ") + e.what());
  }
  const int n = n2(a);
  r.applicable = true;
  r.holds = true;
  r.put("size", static_cast<I>(a.size()));
  r.put("mdr", static_cast<I>(rr));
  r.put("n2", static_cast<I>(n));
  I above = 0, excess = 0, strict_failures = 0;
  std::ostringstream why;
  for (std::size_t h = 0; h < a.size(); ++h) {
    const int s = restriction_size(a, h);
    if (s <= rr) continue;
    ++above;
    excess += s - rr;
    const int nh = n2_on_line(a, h);
    if (nh < s - rr) {
      r.holds = false;
      why << "line " << h << ": n2(H) = " << nh << " < |A^H| - r = " << (s - rr) << "; ";
    }
    if (!(n > nh)) ++strict_failures;
  }
  r.put("lines_above_mdr", above);
  r.put("excess_sum", excess);
  r.put("strict_failures", strict_failures);
  if (2 * static_cast<I>(n) < excess) {
    r.holds = false;
    why << "2*n2 = " << 2 * n << " < excess sum " << excess << "; ";
  }
  if (2 * static_cast<I>(n) < above) {
    r.holds = false;
    why << "2*n2 = " << 2 * n << " < |A_>r| = " << above << "; ";
  }
  if (!r.holds) r.witness = why.str();
  return r;
}

TheoremReport check_div_free_sg(const Arrangement& a, const VerifyOptions& opts) {
  TheoremReport r = start("divisional");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  auto df = is_divisionally_free(a);
  if (!df.holds) return skip(r, "divisionally free");
  const int n = n2(a);
  r.applicable = true;
  r.put("size", static_cast<I>(a.size()));
  r.put("chi0", char_poly0(a).str());
  r.put("witness_line", static_cast<I>(*df.witness));
  r.put("restriction_size", static_cast<I>(restriction_size(a, *df.witness)));
  r.put("n2", static_cast<I>(n));
  r.holds = n > 0;
  if (!r.holds) r.witness = "no double point";
  return r;
}

TheoremReport check_large(const Arrangement& a, const VerifyOptions& opts) {
  TheoremReport r = start("large");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  auto w = is_supersolvable(a);
  if (!w) return skip(r, "supersolvable");
  if (w->k < 1) return skip(r, "a line off the modular pencil");
  const int n = n2(a);
  const int bound = std::max(static_cast<int>(a.size()) - w->m, w->m);
  r.applicable = true;
  r.put("size", static_cast<I>(a.size()));
  r.put("m", static_cast<I>(w->m));
  r.put("n2", static_cast<I>(n));
  r.put("bound", static_cast<I>(bound));
  r.holds = n >= bound;
  if (!r.holds) r.witness = "n2 = " + std::to_string(n) + " < " + std::to_string(bound);
  return r;
}

TheoremReport check_deletion_ss(const Arrangement& a, std::size_t h, const VerifyOptions& opts) {
  TheoremReport r = start("deletion");
  r.put("line_index", static_cast<I>(h));
  if (h >= a.size()) return skip(r, "line index in range");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  auto w = is_supersolvable(a);
  if (!w) return skip(r, "supersolvable");
  Arrangement d = delete_line(a, h);
  if (is_pencil(d)) return skip(r, "deletion is not a pencil");
  const int n = n2(d);
  r.applicable = true;
  r.put("line", a.line(h).form());
  r.put("in_modular_pencil", in_pencil(*w, h));
  r.put("size", static_cast<I>(d.size()));
  r.put("n2", static_cast<I>(n));
  r.holds = n > 0;
  if (!r.holds) r.witness = "deleting " + a.line(h).form() + " leaves no double point";
  return r;
}

TheoremReport check_at2(const Arrangement& a, const VerifyOptions& opts) {
  TheoremReport r = start("modular_lines");
  if (auto why = char_zero_missing(a, opts)) return skip(r, *why);
  if (auto why = essential_missing(a)) return skip(r, *why);
  std::vector<SupersolvableWitness> ws;
  for (const auto& mp : modular_points(a))
    if (mp.m >= 3) ws.push_back(*supersolvable_at(a, mp.point));
  if (ws.empty()) return skip(r, "modular point with mu >= 2");
  r.applicable = true;
  r.holds = true;
  I min_n2 = -1;
  std::ostringstream why;
  for (const auto& w : ws) {
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (in_pencil(w, h)) continue;
      const int nh = n2_on_line(a, h);
      if (min_n2 < 0 || nh < min_n2) min_n2 = nh;
      if (nh == 0) {
        r.holds = false;
        why << "line " << a.line(h).form() << " off the pencil at " << w.point.str()
            << " has n2(H) = 0; ";
      }
    }
  }
  r.put("modular_points", static_cast<I>(ws.size()));
  r.put("min_n2_off_pencil", min_n2);
  if (!r.holds) r.witness = why.str();
  return r;
}

TheoremReport kawanoue_certificate(const VerifyOptions& opts) {
  TheoremReport r = start("kawanoue");
  r.applicable = true;
  Arrangement a = monomial(4, false);
  std::ostringstream why;
  FreenessVerdict v = is_free(a);
  r.put("size", static_cast<I>(a.size()));
  r.put("exponents", v.free ? exp_str(v.d2, v.d3) : std::string("NonFree"));
  bool ok = v.free && v.d2 == 5 && v.d3 == 6;
  if (!ok) why << "expected Free(1,5,6), got " << v.str() << "; ";
  if (opts.certify && v.free) {
    bool c = certify_free(a, v.d2, v.d3).has_value();
    r.put("certified", c);
    if (!c) {
      ok = false;
      why << "no basis certified; ";
    }
  }

  const std::vector<int> expected{3, 2, 2, 2, 2};
  bool restrictions_ok = true;
  for (std::size_t h = 0; h < a.size(); ++h) {
    auto ms = restriction(a, h).sorted_multiplicities();
    if (ms != expected) {
      restrictions_ok = false;
      why << "restriction to line " << h << " has the wrong multiplicities; ";
    }
  }
  r.put("restriction_multiplicities", std::string("{3,2,2,2,2}"));
  r.put("restrictions_ok", restrictions_ok);

  I nonfree = 0;
  std::set<int> deletion_n2;
  bool deletions_ok = true;
  for (std::size_t h = 0; h < a.size(); ++h) {
    Arrangement d = delete_line(a, h);
    const int n = n2(d);
    deletion_n2.insert(n);
    if (!is_free(d).free) ++nonfree;
    if (2 * n >= static_cast<int>(d.size())) {
      deletions_ok = false;
      why << "deleting line " << h << " leaves n2 = " << n << "; ";
    }
  }
  r.put("deletions_nonfree", nonfree);
  r.put("deletion_n2", deletion_n2.size() == 1 ? static_cast<I>(*deletion_n2.begin()) : I{-1});
  r.put("deletion_half_size", std::string("11/2"));
  if (nonfree != static_cast<I>(a.size())) {
    deletions_ok = false;
    why << "only " << nonfree << " deletions are NonFree; ";
  }
  if (deletion_n2 != std::set<int>{4}) deletions_ok = false;
  r.holds = ok && restrictions_ok && deletions_ok;
  if (!r.holds) r.witness = why.str();
  return r;
}

std::vector<TheoremReport> verify_one(const Arrangement& a, std::string_view id,
                                      std::optional<std::size_t> line, const VerifyOptions& opts) {
  std::vector<TheoremReport> out;
  auto each_line = [&](auto&& f) {
    if (line) {
      if (*line >= a.size()) throw std::out_of_range("line index out of range");
      out.push_back(f(*line));
    } else {
      for (std::size_t h = 0; h < a.size(); ++h) out.push_back(f(h));
    }
  };
  if (id == "half_bound") out.push_back(check_theorem_main(a, opts));
  else if (id == "split_bound") out.push_back(check_corollary_bound(a, std::nullopt, opts));
  else if (id == "addition")
    each_line([&](std::size_t h) { return check_addition(delete_line(a, h), a.line(h), opts); });
  else if (id == "mdr_bound") out.push_back(check_mdr_bounds(a, opts));
  else if (id == "divisional") out.push_back(check_div_free_sg(a, opts));
  else if (id == "large") out.push_back(check_large(a, opts));
  else if (id == "deletion") each_line([&](std::size_t h) { return check_deletion_ss(a, h, opts); });
  else if (id == "modular_lines") out.push_back(check_at2(a, opts));
  else if (id == "kawanoue") out.push_back(kawanoue_certificate(opts));
  else throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
  return out;
}

std::vector<TheoremReport> verify_all(const Arrangement& a, const VerifyOptions& opts) {
  std::vector<TheoremReport> out;
  for (const std::string& id : theorem_ids()) {
    if (id == "kawanoue") continue;
    auto part = verify_one(a, id, std::nullopt, opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// ---- conjecture search ------------------------------------------------------

namespace {

struct Member {
  std::string family;
  int lo = 0;
  int hi = 0;
};

const char* kMixed =
    "generic:5-10,random:5-12,random_supersolvable:4-14,grid:3-12,near_pencil:4-12,monomial:2-4";

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("malformed corpus entry '" + std::string(whole) + "'");
  return v;
}

std::vector<Member> parse_corpus(std::string_view spec) {
  std::vector<Member> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) throw std::invalid_argument("empty corpus entry");
    if (item == "mixed") {
      auto more = parse_corpus(kMixed);
      out.insert(out.end(), more.begin(), more.end());
      continue;
    }
    if (item == "dual_hesse") {
      out.push_back({"monomial", 3, 3});
      continue;
    }
    Member m;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("corpus entry '" + std::string(item) + "' needs a range");
    m.family = std::string(item.substr(0, colon));
    std::string_view range = item.substr(colon + 1);
    std::size_t dash = range.find('-');
    if (dash == std::string_view::npos) {
      m.lo = m.hi = parse_int(range, item);
    } else {
      m.lo = parse_int(range.substr(0, dash), item);
      m.hi = parse_int(range.substr(dash + 1), item);
    }
    if (m.lo > m.hi) throw std::invalid_argument("empty range in '" + std::string(item) + "'");
    static const std::set<std::string> known{"generic", "random", "random_supersolvable", "grid",
                                             "near_pencil", "monomial"};
    if (!known.count(m.family)) throw std::invalid_argument("unsupported corpus family '" + m.family + "'");
    if (m.family == "monomial" && (m.lo < 2 || m.hi > 4))
      throw std::invalid_argument("monomial corpus range must lie in 2-4");
    out.push_back(m);
  }
  return out;
}

Arrangement build_member(const Member& mem, std::uint64_t seed, std::string& label) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int size = pick(mem.lo, mem.hi);
  if (mem.family == "monomial") {
    label = "monomial(" + std::to_string(size) + ")";
    return monomial(size, false);
  }
  if (mem.family == "generic") {
    label = "generic(" + std::to_string(std::max(3, size)) + ")";
    return generic(std::max(3, size), seed);
  }
  if (mem.family == "random") {
    label = "random(" + std::to_string(std::max(3, size)) + ")";
    return random_arrangement(std::max(3, size), seed);
  }
  if (mem.family == "near_pencil") {
    label = "near_pencil(" + std::to_string(std::max(3, size)) + ")";
    return near_pencil(std::max(3, size));
  }
  const int s = std::max(3, size);
  if (mem.family == "grid") {
    const int a = pick(1, s - 2), b = s - 1 - a;
    label = "grid(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return grid(a, b);
  }
  const int m = pick(2, s - 1), k = s - m;
  label = "random_supersolvable(" + std::to_string(m) + "," + std::to_string(k) + ")";
  return random_supersolvable(m, k, seed);
}

void analyze_member(ScanRecord& rec) {
  const Arrangement& a = rec.arrangement;
  rec.n2 = n2(a);
  FreenessVerdict v = is_free(a);
  rec.free = v.free;
  rec.d2 = v.d2;
  rec.d3 = v.d3;
  rec.supersolvable = is_supersolvable(a).has_value();
  rec.candidate = !rec.free && rec.n2 == 0;
  if (rec.free) {
    for (std::size_t h = 0; h < a.size(); ++h) {
      Arrangement d = delete_line(a, h);
      if (is_pencil(d) || !is_essential(d)) continue;
      if (n2(d) == 0 && !is_free(d).free) rec.deletion_candidates.push_back(h);
    }
  }
}

}  // namespace

ScanReport conjecture_scan(const ScanOptions& opts) {
  if (opts.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (opts.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto members = parse_corpus(opts.corpus);
  const std::size_t n = static_cast<std::size_t>(opts.trials);
  std::vector<std::optional<ScanRecord>> slots(n);
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        ScanRecord rec;
        rec.trial = i;
        rec.seed = opts.seed + i;
        rec.arrangement = build_member(members[i % members.size()], rec.seed, rec.member);
        if (rec.arrangement.field().characteristic() != 0)
          throw std::invalid_argument("conjecture_scan needs a characteristic-zero corpus");
        analyze_member(rec);
        slots[i] = std::move(rec);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next = n;
      }
    }
  };
  const int jobs = std::min<int>(opts.jobs, static_cast<int>(std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);

  ScanReport out;
  for (auto& s : slots) out.records.push_back(std::move(*s));
  if (opts.inject_fake) {
    ScanRecord rec;
    rec.trial = n;
    rec.member = "injected(dual_hesse)";
    rec.arrangement = monomial(3, false);
    rec.n2 = n2(rec.arrangement);
    rec.free = false;
    rec.candidate = rec.n2 == 0;
    rec.injected = true;
    out.records.push_back(std::move(rec));
  }
  for (const ScanRecord& rec : out.records) {
    const std::size_t size = rec.arrangement.size();
    ScanRow& row = out.by_size[size];
    if (row.count == 0 || rec.n2 < row.min_n2) row.min_n2 = rec.n2;
    if (row.count == 0 || rec.n2 > row.max_n2) row.max_n2 = rec.n2;
    ++row.count;
    if (rec.free) ++row.free;
    if (2 * static_cast<std::size_t>(rec.n2) >= size) ++row.half_bound;
    if (rec.candidate) ++out.candidates;
    out.deletion_candidates += rec.deletion_candidates.size();
    if (rec.supersolvable && 2 * static_cast<std::size_t>(rec.n2) < size) ++out.supersolvable_violations;
  }
  return out;
}

std::string ScanReport::table() const {
  std::ostringstream os;
  os << "  |A|  count  free  min_n2  max_n2  n2>=|A|/2\n";
  char buf[96];
  for (const auto& [size, row] : by_size) {
    std::snprintf(buf, sizeof buf, "%5zu  %5zu  %4zu  %6d  %6d  %5zu/%zu\n", size, row.count, row.free,
                  row.min_n2, row.max_n2, row.half_bound, row.count);
    os << buf;
  }
  return os.str();
}

}  // namespace arrangelab
