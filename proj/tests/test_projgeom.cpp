#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace testsupport;

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST_SUITE("projgeom") {
  TEST_CASE("normalization") {
    const Field f = QQ();
    Line l = Line::from_coeffs({f.zero(), f.from_int(-4), f.from_int(2)});
    CHECK(l.form() == "y-1/2*z");
    CHECK(l == Line::from_coeffs({f.zero(), f.from_int(2), f.from_int(-1)}));
    CHECK_THROWS(Line::from_coeffs({f.zero(), f.zero(), f.zero()}));
  }

  TEST_CASE("meet and join are incident") {
    std::mt19937_64 rng(2);
    const Field f = QW(-3);
    std::uniform_int_distribution<std::int64_t> d(-5, 5);
    auto rnd = [&] { return f.from_parts(Rational(d(rng)), Rational(d(rng))); };
    for (int i = 0; i < 200; ++i) {
      Triple a{rnd(), rnd(), rnd()}, b{rnd(), rnd(), rnd()};
      if ((a[0].is_zero() && a[1].is_zero() && a[2].is_zero()) || (b[0].is_zero() && b[1].is_zero() && b[2].is_zero()))
        continue;
      Line la = Line::from_coeffs(a), lb = Line::from_coeffs(b);
      if (la == lb) continue;
      ProjPoint p = meet(la, lb);
      CHECK(incident(p, la));
      CHECK(incident(p, lb));
      ProjPoint q = ProjPoint::from_coords(a);
      if (!(p == q)) {
        Line j = join(p, q);
        CHECK(incident(p, j));
        CHECK(incident(q, j));
      }
    }
  }

  TEST_CASE("duplicate lines are rejected") {
    const Field f = QQ();
    CHECK_THROWS_AS(from_rows(f, {{"1", "0", "0"}, {"2", "0", "0"}}), DuplicateLineError);
  }

  TEST_CASE("pair-count identity on the families") {
    std::vector<Arrangement> corpus{braid(), triangle(), near_pencil(6), grid(3, 4), monomial(3, false),
                                    monomial(4, false), monomial(2, true), finite_plane(2), finite_plane(3),
                                    generic(7, 4), random_arrangement(11, 8), random_supersolvable(5, 4, 3)};
    for (const Arrangement& a : corpus) {
      std::int64_t sum = 0;
      for (const auto& p : a.lattice().points()) sum += choose2(p.mu() + 1);
      CHECK(sum == choose2(static_cast<std::int64_t>(a.size())));
    }
  }

  TEST_CASE("lattice against brute-force meets") {
    for (const Arrangement& a : {grid(3, 3), monomial(3, false), random_arrangement(9, 2)}) {
      std::set<ProjPoint> meets;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) meets.insert(meet(a.line(i), a.line(j)));
      CHECK(meets.size() == a.lattice().size());
      for (const auto& lp : a.lattice().points()) {
        std::size_t through = 0;
        for (const Line& l : a.lines()) through += incident(lp.point, l);
        CHECK(through == lp.lines.size());
      }
    }
  }

  TEST_CASE("essential and pencil") {
    CHECK(is_essential(braid()));
    Arrangement pencil = from_rows(QQ(), {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "0"}});
    CHECK(is_pencil(pencil));
    CHECK_FALSE(is_essential(pencil));
    CHECK_FALSE(is_pencil(braid()));
  }
}
