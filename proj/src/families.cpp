#include "arrangelab/families.hpp"

#include "arrangelab/combin.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace arrangelab {

namespace {

constexpr int kAttempts = 1000;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::int64_t in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

Field rationals() { return Field(FieldDescriptor::rational()); }

Triple ints(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c) {
  return {f.from_int(a), f.from_int(b), f.from_int(c)};
}

std::optional<Line> box_line(const Field& f, Draw& draw, std::int64_t bound) {
  std::int64_t a = draw.in(-bound, bound), b = draw.in(-bound, bound), c = draw.in(-bound, bound);
  if (a == 0 && b == 0 && c == 0) return std::nullopt;
  return Line::from_coeffs(ints(f, a, b, c));
}

bool contains(const std::vector<Line>& ls, const Line& l) {
  return std::find(ls.begin(), ls.end(), l) != ls.end();
}

bool avoids_all_meets(const std::vector<Line>& ls, const Line& l) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (incident(meet(ls[i], ls[j]), l)) return false;
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"near_pencil", "grid",         "monomial",
                                              "full_monomial", "finite_plane", "generic",
                                              "random_supersolvable", "random"};
  return names;
}

Arrangement make_family(const FamilySpec& s) {
  auto narrow = [](std::int64_t v) { return static_cast<int>(std::clamp<std::int64_t>(v, -1, 1 << 20)); };
  if (s.name == "near_pencil") return near_pencil(narrow(s.n));
  if (s.name == "grid") return grid(narrow(s.a), narrow(s.b));
  if (s.name == "monomial") return monomial(narrow(s.n), false);
  if (s.name == "full_monomial") return monomial(narrow(s.n), true);
  if (s.name == "finite_plane") return finite_plane(narrow(s.p));
  if (s.name == "generic") return generic(narrow(s.n), s.seed);
  if (s.name == "random_supersolvable") return random_supersolvable(narrow(s.m), narrow(s.k), s.seed);
  if (s.name == "random") return random_arrangement(narrow(s.n), s.seed);
  throw std::invalid_argument("unknown family '" + s.name + "'");
}

Arrangement near_pencil(int n) {
  require(n >= 3, "near_pencil needs n >= 3");
  Field f = rationals();
  std::vector<Triple> t{ints(f, 1, 0, 0), ints(f, 0, 1, 0)};
  for (int j = 1; j <= n - 3; ++j) t.push_back(ints(f, 1, -j, 0));
  t.push_back(ints(f, 0, 0, 1));
  return Arrangement::from_triples(f, t);
}

Arrangement grid(int a, int b) {
  require(a >= 1 && b >= 1, "grid needs a, b >= 1");
  Field f = rationals();
  std::vector<Triple> t;
  for (int i = 0; i < a; ++i) t.push_back(ints(f, 1, 0, -i));
  for (int j = 0; j < b; ++j) t.push_back(ints(f, 0, 1, -j));
  t.push_back(ints(f, 0, 0, 1));
  return Arrangement::from_triples(f, t);
}

Arrangement monomial(int n, bool full) {
  require(n >= 1 && n <= 4, "monomial needs n in {1, 2, 3, 4}");
  Field f = n == 3 ? Field(FieldDescriptor::quadratic(-3))
                   : n == 4 ? Field(FieldDescriptor::quadratic(-1)) : rationals();
  Scalar zeta = f.one();
  if (n == 2) zeta = f.from_int(-1);
  if (n == 3) zeta = f.from_parts(Rational(-1, 2), Rational(1, 2));
  if (n == 4) zeta = f.sqrt_d();
  std::vector<Scalar> roots{f.one()};
  for (int k = 1; k < n; ++k) roots.push_back(roots.back() * zeta);

  std::vector<Triple> t;
  const Scalar one = f.one(), zero = f.zero();
  for (const Scalar& r : roots) t.push_back({one, -r, zero});
  for (const Scalar& r : roots) t.push_back({zero, one, -r});
  for (const Scalar& r : roots) t.push_back({one, zero, -r});
  if (full) {
    t.push_back({one, zero, zero});
    t.push_back({zero, one, zero});
    t.push_back({zero, zero, one});
  }
  return Arrangement::from_triples(f, t);
}

Arrangement finite_plane(int p) {
  require(p <= 7 && is_prime(p), "finite_plane supports primes p <= 7");
  Field f(FieldDescriptor::prime(p));
  std::vector<Triple> t;
  t.push_back(ints(f, 0, 0, 1));
  for (int c = 0; c < p; ++c) t.push_back(ints(f, 0, 1, c));
  for (int b = 0; b < p; ++b)
    for (int c = 0; c < p; ++c) t.push_back(ints(f, 1, b, c));
  return Arrangement::from_triples(f, t);
}

Arrangement generic(int n, std::uint64_t seed) {
  require(n >= 3, "generic needs n >= 3");
  Field f = rationals();
  Draw draw(seed);
  std::vector<Line> ls;
  while (static_cast<int>(ls.size()) < n) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
      auto l = box_line(f, draw, 9);
      if (!l || contains(ls, *l) || !avoids_all_meets(ls, *l)) continue;
      ls.push_back(*l);
      placed = true;
    }
    if (!placed)
      throw std::runtime_error("generic: no admissible line after " + std::to_string(kAttempts) +
                               " attempts");
  }
  Arrangement a(f, ls);
  for (const auto& p : a.lattice().points())
    if (p.mu() != 1) throw std::logic_error("generic: produced a point of multiplicity > 2");
  return a;
}

Arrangement random_supersolvable(int m, int k, std::uint64_t seed) {
  require(m >= 2 && k >= 1, "random_supersolvable needs m >= 2 and k >= 1");
  Field f = rationals();
  Draw draw(seed);
  const std::int64_t bound = std::max<std::int64_t>(9, m + k);
  const bool grid_like = seed % 2 == 1;

  std::vector<Line> ls{Line::from_coeffs(ints(f, 0, 0, 1))};
  std::vector<std::int64_t> offsets;
  while (static_cast<int>(ls.size()) < m) {
    std::int64_t c = draw.in(-bound, bound);
    if (std::find(offsets.begin(), offsets.end(), c) != offsets.end()) continue;
    offsets.push_back(c);
    ls.push_back(Line::from_coeffs(ints(f, 1, 0, -c)));
  }

  // q on a line of the pencil, away from p = (0:1:0).
  Triple q = ints(f, 1, 0, 0);
  if (!grid_like) {
    std::int64_t c0 = offsets[static_cast<std::size_t>(draw.in(0, static_cast<std::int64_t>(offsets.size()) - 1))];
    q = ints(f, c0, draw.in(-bound, bound), 1);
  }
  int added = 0;
  for (int attempt = 0; added < k; ++attempt) {
    if (attempt > kAttempts * k) throw std::runtime_error("random_supersolvable: out of attempts");
    std::int64_t a = grid_like ? 0 : draw.in(-bound, bound);
    std::int64_t b = draw.in(1, bound) * (draw.in(0, 1) == 0 ? 1 : -1);
    std::int64_t c = grid_like ? draw.in(-bound, bound) : 0;
    Triple t = ints(f, a, b, c);
    if (!grid_like) t[2] = -(t[0] * q[0] + t[1] * q[1]);
    Line l = Line::from_coeffs(t);
    if (contains(ls, l)) continue;
    ls.push_back(l);
    ++added;
  }
  Arrangement out(f, ls);
  if (!supersolvable_at(out, ProjPoint::from_coords(ints(f, 0, 1, 0))))
    throw std::logic_error("random_supersolvable: (0:1:0) is not modular");
  return out;
}

Arrangement random_arrangement(int n, std::uint64_t seed) {
  require(n >= 3, "random needs n >= 3");
  Field f = rationals();
  Draw draw(seed);
  for (int round = 0; round < kAttempts; ++round) {
    std::vector<Line> ls;
    int stalls = 0;
    while (static_cast<int>(ls.size()) < n && stalls < kAttempts) {
      std::optional<Line> l;
      if (ls.size() >= 3 && draw.in(0, 1) == 1) {
        Arrangement cur(f, ls);
        const auto& pts = cur.lattice().points();
        if (pts.size() >= 2) {
          std::size_t i = static_cast<std::size_t>(draw.in(0, static_cast<std::int64_t>(pts.size()) - 1));
          std::size_t j = static_cast<std::size_t>(draw.in(0, static_cast<std::int64_t>(pts.size()) - 1));
          if (i != j) l = join(pts[i].point, pts[j].point);
        }
      } else {
        l = box_line(f, draw, 9);
      }
      if (!l || contains(ls, *l)) {
        ++stalls;
        continue;
      }
      ls.push_back(*l);
    }
    if (static_cast<int>(ls.size()) < n) continue;
    Arrangement a(f, ls);
    if (is_essential(a)) return a;
  }
  throw std::runtime_error("random: no essential arrangement found");
}

Arrangement delete_line(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("line index out of range");
  std::vector<Line> ls = a.lines();
  ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(h));
  return Arrangement(a.field(), std::move(ls));
}

Arrangement delete_line(const Arrangement& a, const Line& h) {
  auto i = a.index_of(h);
  if (!i) throw std::invalid_argument("line " + h.form() + " is not in the arrangement");
  return delete_line(a, *i);
}

Arrangement add_line(const Arrangement& a, const Line& l) {
  if (!(l.field() == a.field())) throw FieldError("line and arrangement fields differ");
  if (a.index_of(l)) throw DuplicateLineError("line " + l.form() + " is already in the arrangement");
  std::vector<Line> ls = a.lines();
  ls.push_back(l);
  return Arrangement(a.field(), std::move(ls));
}

Line random_new_line(const Arrangement& a, std::uint64_t seed) {
  if (a.field().kind() != FieldKind::rational) throw FieldError("random_new_line works over Q");
  Draw draw(seed);
  if (seed % 2 == 0 && a.size() >= 2) {
    const auto& pts = a.lattice().points();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (!a.index_of(join(pts[i].point, pts[j].point))) pairs.emplace_back(i, j);
    if (!pairs.empty()) {
      auto [i, j] = pairs[draw.raw() % pairs.size()];
      return join(pts[i].point, pts[j].point);
    }
  }
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    auto l = box_line(a.field(), draw, 9);
    if (!l || a.index_of(*l)) continue;
    bool clear = true;
    for (const auto& p : a.lattice().points()) clear = clear && !incident(p.point, *l);
    if (clear) return *l;
  }
  throw std::runtime_error("random_new_line: out of attempts");
}

}  // namespace arrangelab
