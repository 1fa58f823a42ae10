#include "arrangelab/combin.hpp"

#include "arrangelab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arrangelab {

namespace {

Point1 normalize_point1(Point1 p) {
  if (p[0].is_zero() && p[1].is_zero()) throw std::invalid_argument("zero point of P^1");
  std::size_t lead = p[0].is_zero() ? 1 : 0;
  Scalar inv = p[lead].inv();
  p[0] *= inv;
  p[1] *= inv;
  return p;
}

int compare_point1(const Point1& a, const Point1& b) {
  int c = canonical_compare(a[0], b[0]);
  return c != 0 ? c : canonical_compare(a[1], b[1]);
}

std::size_t require_index(const Arrangement& a, const Line& h) {
  auto idx = a.index_of(h);
  if (!idx) throw std::invalid_argument("line " + h.form() + " is not in the arrangement");
  return *idx;
}

}  // namespace

Multiarrangement2 Multiarrangement2::make(const Field& field, std::vector<Point1> points,
                                          std::vector<int> mult) {
  if (points.size() != mult.size())
    throw std::invalid_argument("multiarrangement: points and multiplicities differ in length");
  Multiarrangement2 out;
  out.field = field;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mult[i] < 1) throw std::invalid_argument("multiplicities must be positive");
    Point1 p = normalize_point1(points[i]);
    for (const Point1& q : out.points)
      if (compare_point1(p, q) == 0) throw std::invalid_argument("repeated point " + p[0].str() + ":" + p[1].str());
    out.points.push_back(std::move(p));
    out.mult.push_back(mult[i]);
  }
  return out;
}

int Multiarrangement2::total() const {
  int s = 0;
  for (int m : mult) s += m;
  return s;
}

std::vector<int> Multiarrangement2::sorted_multiplicities() const {
  std::vector<int> out = mult;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> CharPoly::integer_roots() const {
  std::int64_t disc = c1 * c1 - 4 * c0;
  if (disc < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  if (s * s != disc) return std::nullopt;
  if ((-c1 - s) % 2 != 0) return std::nullopt;
  return std::make_pair((-c1 - s) / 2, (-c1 + s) / 2);
}

std::string CharPoly::str() const {
  auto term = [](std::int64_t c, const char* suffix) {
    if (c == 0) return std::string();
    std::string sign = c < 0 ? " - " : " + ";
    std::int64_t mag = c < 0 ? -c : c;
    std::string body = (mag == 1 && *suffix) ? std::string(suffix) : std::to_string(mag) + suffix;
    return sign + body;
  };
  return "t^2" + term(c1, "t") + term(c0, "");
}

int mu(const LatticeL2& lat, const ProjPoint& p) {
  const LatticePoint* lp = lat.find(p);
  if (!lp) throw std::invalid_argument("point " + p.str() + " is not in L2");
  return lp->mu();
}

int n2(const Arrangement& a) {
  int count = 0;
  for (const auto& p : a.lattice().points()) count += p.mu() == 1;
  return count;
}

int n2_on_line(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("line index out of range");
  int count = 0;
  for (const auto& p : a.lattice().points())
    if (p.mu() == 1 && std::binary_search(p.lines.begin(), p.lines.end(), h)) ++count;
  return count;
}

int n2_on_line(const Arrangement& a, const Line& h) { return n2_on_line(a, require_index(a, h)); }

int restriction_size(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("line index out of range");
  int count = 0;
  for (const auto& p : a.lattice().points())
    if (std::binary_search(p.lines.begin(), p.lines.end(), h)) ++count;
  return count;
}

CharPoly char_poly0(const Arrangement& a) {
  if (!is_essential(a)) throw std::invalid_argument("char_poly0 needs an essential arrangement");
  std::int64_t n = static_cast<std::int64_t>(a.size());
  std::int64_t mu_sum = 0;
  for (const auto& p : a.lattice().points()) mu_sum += p.mu();
  return CharPoly{-(n - 1), mu_sum - n + 1};
}

bool is_modular_by_definition(const Arrangement& a, const ProjPoint& p) {
  const LatticePoint* lp = a.lattice().find(p);
  if (!lp) throw std::invalid_argument("point " + p.str() + " is not in L2");
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::binary_search(lp->lines.begin(), lp->lines.end(), i)) outside.push_back(i);
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      ProjPoint q = meet(a.line(outside[i]), a.line(outside[j]));
      int through = 0;
      for (std::size_t k : lp->lines) through += incident(q, a.line(k));
      if (through != 1) return false;
    }
  }
  return true;
}

std::vector<ModularPoint> modular_points(const Arrangement& a) {
  const auto& pts = a.lattice().points();
  std::vector<std::vector<bool>> on(pts.size(), std::vector<bool>(a.size(), false));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t l : pts[i].lines) on[i][l] = true;

  std::vector<ModularPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // Join criterion: every other lattice point shares a line with p.
    bool joined = true;
    for (std::size_t j = 0; j < pts.size() && joined; ++j) {
      if (i == j) continue;
      joined = std::any_of(pts[j].lines.begin(), pts[j].lines.end(),
                           [&](std::size_t l) { return on[i][l]; });
    }
    if (joined != is_modular_by_definition(a, pts[i].point))
      throw std::logic_error("modular criteria disagree at " + pts[i].point.str());
    if (joined) out.push_back({pts[i].point, static_cast<int>(pts[i].lines.size())});
  }
  return out;
}

std::optional<SupersolvableWitness> supersolvable_at(const Arrangement& a, const ProjPoint& p) {
  const LatticePoint* lp = a.lattice().find(p);
  if (!lp || !is_modular_by_definition(a, p)) return std::nullopt;
  int m = static_cast<int>(lp->lines.size());
  return SupersolvableWitness{p, m, static_cast<int>(a.size()) - m, lp->lines};
}

std::optional<SupersolvableWitness> is_supersolvable(const Arrangement& a) {
  if (a.size() < 3 || !is_essential(a)) return std::nullopt;
  auto mods = modular_points(a);
  const ModularPoint* best = nullptr;
  for (const auto& mp : mods)
    if (!best || mp.m > best->m) best = &mp;
  if (!best) return std::nullopt;
  return SupersolvableWitness{best->point, best->m, static_cast<int>(a.size()) - best->m,
                              a.lattice().find(best->point)->lines};
}

Multiarrangement2 restriction(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("line index out of range");
  const Line& H = a.line(h);
  Matrix form(a.field(), 1, 3);
  for (std::size_t i = 0; i < 3; ++i) form(0, i) = H[i];
  // Canonical kernel basis u, v: u has a 1 at the first free column and a 0 at
  // the second, v the reverse, so a kernel vector X equals X[f1] u + X[f2] v.
  std::vector<std::size_t> free_cols;
  {
    auto e = reduced_echelon(form);
    for (std::size_t c = 0; c < 3; ++c)
      if (c != e.pivots[0]) free_cols.push_back(c);
  }

  std::vector<Point1> points;
  std::vector<int> mult;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    ProjPoint x = meet(H, a.line(i));
    Point1 st = normalize_point1({x[free_cols[0]], x[free_cols[1]]});
    auto it = std::find_if(points.begin(), points.end(),
                           [&](const Point1& q) { return compare_point1(q, st) == 0; });
    if (it == points.end()) {
      points.push_back(st);
      mult.push_back(1);
    } else {
      ++mult[static_cast<std::size_t>(it - points.begin())];
    }
  }
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return compare_point1(points[x], points[y]) < 0;
  });
  Multiarrangement2 out;
  out.field = a.field();
  out.origin_line = h;
  for (std::size_t i : order) {
    out.points.push_back(points[i]);
    out.mult.push_back(mult[i]);
  }
  return out;
}

Multiarrangement2 restriction(const Arrangement& a, const Line& h) {
  return restriction(a, require_index(a, h));
}

DivisionalFreeness is_divisionally_free(const Arrangement& a) {
  CharPoly chi = char_poly0(a);
  for (std::size_t h = 0; h < a.size(); ++h)
    if (chi(restriction_size(a, h) - 1) == 0) return {true, h};
  return {false, std::nullopt};
}

std::optional<std::pair<std::int64_t, std::int64_t>> terao_exponents(const Arrangement& a) {
  return char_poly0(a).integer_roots();
}

}  // namespace arrangelab
