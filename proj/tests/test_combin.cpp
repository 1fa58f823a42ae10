#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace testsupport;

namespace {

std::vector<Arrangement> corpus() {
  std::vector<Arrangement> out{braid(), triangle(), near_pencil(5), near_pencil(9), grid(2, 2), grid(4, 3),
                               monomial(2, false), monomial(2, true), monomial(3, false), monomial(4, false),
                               finite_plane(3)};
  for (std::uint64_t s = 0; s < 12; ++s) {
    out.push_back(random_arrangement(5 + static_cast<int>(s % 8), s));
    out.push_back(random_supersolvable(3 + static_cast<int>(s % 4), 1 + static_cast<int>(s % 5), s));
    out.push_back(generic(4 + static_cast<int>(s % 4), s));
  }
  return out;
}

Arrangement permuted(const Arrangement& a, std::uint64_t seed) {
  std::vector<Line> ls = a.lines();
  std::mt19937_64 rng(seed);
  std::shuffle(ls.begin(), ls.end(), rng);
  return Arrangement(a.field(), ls);
}

}  // namespace

TEST_SUITE("combin") {
  TEST_CASE("mu and n2") {
    const Field f = QQ();
    Arrangement b = braid();
    auto p = ProjPoint::from_coords({f.one(), f.one(), f.one()});
    CHECK(mu(b.lattice(), p) == 2);
    CHECK(n2(triangle()) == 3);
    CHECK(n2(b) == 3);
    CHECK(n2(monomial(3, false)) == 0);
    Arrangement g = monomial(4, false);
    CHECK(n2(delete_line(g, 0)) == 4);
    Arrangement pencil5 = from_rows(f, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "0"}, {"1", "2", "0"}, {"1", "3", "0"}});
    CHECK(mu(pencil5.lattice(), ProjPoint::from_coords({f.zero(), f.zero(), f.one()})) == 4);
  }

  TEST_CASE("characteristic polynomial") {
    CHECK(char_poly0(triangle()) == CharPoly{-2, 1});
    CHECK(char_poly0(braid()) == CharPoly{-5, 6});
    CHECK(char_poly0(monomial(4, false)) == CharPoly{-11, 30});
    CHECK(terao_exponents(braid()) == std::make_pair<std::int64_t, std::int64_t>(2, 3));
    CHECK(terao_exponents(monomial(4, false)) == std::make_pair<std::int64_t, std::int64_t>(5, 6));
    CHECK_FALSE(terao_exponents(generic(4, 1)).has_value());
  }

  TEST_CASE("characteristic polynomial coefficients from the lattice") {
    for (const Arrangement& a : corpus()) {
      if (!is_essential(a)) continue;
      std::int64_t sum_mu = 0;
      for (const auto& p : a.lattice().points()) sum_mu += p.mu();
      const auto n = static_cast<std::int64_t>(a.size());
      CharPoly c = char_poly0(a);
      CHECK(c.c1 == -(n - 1));
      CHECK(c.c0 == sum_mu - n + 1);
      CHECK(c(1) == 1 - (n - 1) + sum_mu - n + 1);
    }
  }

  TEST_CASE("double points counted by two lines") {
    for (const Arrangement& a : corpus()) {
      int total = 0;
      for (std::size_t h = 0; h < a.size(); ++h) total += n2_on_line(a, h);
      CHECK(total == 2 * n2(a));
    }
  }

  TEST_CASE("modular points") {
    auto np = modular_points(near_pencil(7));
    REQUIRE_FALSE(np.empty());
    CHECK(std::any_of(np.begin(), np.end(), [](const ModularPoint& m) { return m.m == 6; }));
    auto bm = modular_points(braid());
    CHECK(std::count_if(bm.begin(), bm.end(), [](const ModularPoint& m) { return m.m == 3; }) == 4);
    CHECK(modular_points(monomial(3, false)).empty());
  }

  TEST_CASE("join criterion agrees with the definition") {
    for (const Arrangement& a : corpus()) {
      if (!is_essential(a)) continue;
      auto mods = modular_points(a);
      for (const auto& lp : a.lattice().points()) {
        bool listed = std::any_of(mods.begin(), mods.end(), [&](const ModularPoint& m) { return m.point == lp.point; });
        CHECK(listed == is_modular_by_definition(a, lp.point));
      }
    }
  }

  TEST_CASE("modular points do not depend on line order") {
    for (const Arrangement& a : corpus()) {
      if (!is_essential(a)) continue;
      auto m1 = modular_points(a), m2 = modular_points(permuted(a, a.size()));
      REQUIRE(m1.size() == m2.size());
      for (std::size_t i = 0; i < m1.size(); ++i) {
        CHECK(m1[i].point == m2[i].point);
        CHECK(m1[i].m == m2[i].m);
      }
    }
  }

  TEST_CASE("supersolvable witnesses") {
    Arrangement g = grid(2, 2);
    auto w = is_supersolvable(g);
    REQUIRE(w);
    CHECK(w->m == 3);
    CHECK(w->k == 2);
    CHECK(w->point.str() == "(0:1:0)");
    CHECK_FALSE(is_supersolvable(monomial(3, false)));
    auto t = is_supersolvable(triangle());
    REQUIRE(t);
    CHECK(t->m == 2);
    CHECK(t->k == 1);
  }

  TEST_CASE("supersolvable restriction sizes and distinct double points") {
    for (const Arrangement& a : corpus()) {
      if (!is_essential(a)) continue;
      auto w = is_supersolvable(a);
      if (!w) continue;
      int sum = 0;
      for (std::size_t h = 0; h < a.size(); ++h) {
        if (std::find(w->pencil_lines.begin(), w->pencil_lines.end(), h) != w->pencil_lines.end()) continue;
        CHECK(restriction_size(a, h) == w->m);
        sum += n2_on_line(a, h);
      }
      CHECK(n2(a) >= sum);
    }
  }

  TEST_CASE("restrictions") {
    const Field f = QQ();
    Line x = Line::from_coeffs({f.one(), f.zero(), f.zero()});
    auto rt = restriction(triangle(), x);
    CHECK(rt.sorted_multiplicities() == std::vector<int>{1, 1});
    CHECK(restriction(braid(), x).sorted_multiplicities() == std::vector<int>{2, 2, 1});
    Arrangement g = monomial(4, false);
    for (std::size_t h = 0; h < g.size(); ++h)
      CHECK(restriction(g, h).sorted_multiplicities() == std::vector<int>{3, 2, 2, 2, 2});
    for (const Arrangement& a : corpus())
      for (std::size_t h = 0; h < a.size(); ++h) {
        auto r = restriction(a, h);
        CHECK(r.total() == static_cast<int>(a.size()) - 1);
        CHECK(static_cast<int>(r.points.size()) == restriction_size(a, h));
      }
  }

  TEST_CASE("divisional freeness") {
    auto t = is_divisionally_free(triangle());
    CHECK(t.holds);
    CHECK(t.witness.has_value());
    CHECK_FALSE(is_divisionally_free(monomial(3, false)).holds);
    CHECK_FALSE(is_divisionally_free(monomial(4, false)).holds);
    CHECK(is_divisionally_free(braid()).holds);
  }

  TEST_CASE("multiarrangement construction checks") {
    const Field f = QQ();
    CHECK_THROWS(Multiarrangement2::make(f, {{f.one(), f.zero()}, {f.from_int(2), f.zero()}}, {1, 1}));
    CHECK_THROWS(Multiarrangement2::make(f, {{f.one(), f.zero()}}, {0}));
  }
}
