#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using namespace testsupport;

namespace {

std::array<std::array<mpq_class, 3>, 2> kernel_pair(const std::array<mpq_class, 3>& l) {
  if (l[0] != 0) return {{{-l[1], l[0], 0}, {-l[2], 0, l[0]}}};
  if (l[1] != 0) return {{{1, 0, 0}, {0, -l[2], l[1]}}};
  return {{{1, 0, 0}, {0, 1, 0}}};
}

mpq_class eval_monomial(const Exponent3& e, const std::array<mpq_class, 3>& p) {
  mpq_class v = 1;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < e[i]; ++k) v *= p[i];
  return v;
}

/// dim D(A)_d by evaluating theta(alpha_H) at d + 1 points of every H; with
/// `h` also imposes theta(alpha_h) = 0.
int oracle_dim(const Arrangement& a, int d, std::optional<std::size_t> h = {}) {
  const auto mons = monomials(d);
  const std::size_t nm = mons.size();
  std::vector<std::vector<mpq_class>> rows;
  for (const Line& l : a.lines()) {
    const auto al = rational_coeffs(l);
    const auto [u, v] = kernel_pair(al);
    for (int j = 0; j <= d; ++j) {
      std::array<mpq_class, 3> p{u[0] + j * v[0], u[1] + j * v[1], u[2] + j * v[2]};
      std::vector<mpq_class> row(3 * nm);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t m = 0; m < nm; ++m) row[i * nm + m] = al[i] * eval_monomial(mons[m], p);
      rows.push_back(std::move(row));
    }
  }
  if (h) {
    const auto al = rational_coeffs(a.line(*h));
    for (std::size_t m = 0; m < nm; ++m) {
      std::vector<mpq_class> row(3 * nm);
      for (std::size_t i = 0; i < 3; ++i) row[i * nm + m] = al[i];
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(3 * nm - mpq_rank(rows));
}

std::vector<mpq_class> binary_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::vector<mpq_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// dim D(A, m)_d in K^2 with explicit quotient unknowns: t f - s g = alpha^m q.
int oracle_multi_dim(const std::vector<std::array<mpq_class, 2>>& pts, const std::vector<int>& mult, int d) {
  std::vector<std::vector<mpq_class>> quot;  // alpha^m as binary forms
  std::size_t unknowns = 2 * static_cast<std::size_t>(d + 1);
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<mpq_class> alpha{pts[i][1], -pts[i][0]}, pw{1};
    for (int k = 0; k < mult[i]; ++k) pw = binary_mul(pw, alpha);
    quot.push_back(pw);
    offset.push_back(unknowns);
    if (d >= mult[i]) unknowns += static_cast<std::size_t>(d - mult[i] + 1);
  }
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int e = 0; e <= d; ++e) {
      std::vector<mpq_class> row(unknowns);
      row[e] = pts[i][1];
      row[static_cast<std::size_t>(d + 1 + e)] = -pts[i][0];
      for (int q = 0; q <= d - mult[i]; ++q) {
        int k = e - q;
        if (k >= 0 && k <= mult[i]) row[offset[i] + q] = -quot[i][k];
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(unknowns - mpq_rank(rows));
}

Multiarrangement2 random_multi(std::mt19937_64& rng, int n, int max_mult, std::vector<std::array<mpq_class, 2>>& raw,
                               std::vector<int>& mult) {
  const Field f = QQ();
  std::uniform_int_distribution<int> c(-9, 9), mm(1, max_mult);
  std::vector<Point1> pts;
  raw.clear();
  mult.clear();
  while (static_cast<int>(pts.size()) < n) {
    int s = c(rng), t = c(rng);
    if (s == 0 && t == 0) continue;
    bool dup = false;
    for (const auto& r : raw) dup = dup || r[0] * t == r[1] * s;
    if (dup) continue;
    raw.push_back({s, t});
    pts.push_back({f.from_int(s), f.from_int(t)});
    mult.push_back(mm(rng));
  }
  return Multiarrangement2::make(f, pts, mult);
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

Derivation from_components(const Field& f, const std::array<HomPoly, 3>& c) {
  Derivation d = Derivation::zero(f, c[0].degree());
  for (std::size_t i = 0; i < 3; ++i) d.coeffs[i] = c[i].coeffs();
  return d;
}

HomPoly lin(const Field& f, int a, int b, int c) {
  return HomPoly::linear({f.from_int(a), f.from_int(b), f.from_int(c)});
}

}  // namespace

TEST_SUITE("gradedla") {
  TEST_CASE("documented dimensions") {
    CHECK(dim_D_graded(braid(), 0) == 0);
    CHECK(dim_D_graded(triangle(), 1) == 3);
    CHECK(dim_D_graded(braid(), 1) == 1);
    CHECK(dim_DH_graded(triangle(), 0, 1) == 2);
    for (std::size_t h = 0; h < 6; ++h) {
      CHECK(dim_DH_graded(braid(), h, 1) == 0);
      CHECK(dim_DH_graded(braid(), h, 2) == 1);
    }
    CHECK(mdr(triangle()) == 1);
    CHECK(mdr(braid()) == 2);
    CHECK(mdr(generic(5, 3)) == 3);
  }

  TEST_CASE("dimensions agree with the evaluation oracle") {
    for (const Arrangement& a : rational_corpus()) {
      for (int d = 0; d <= 4; ++d) {
        CHECK(dim_D_graded(a, d) == oracle_dim(a, d));
        CHECK(dim_DH_graded(a, a.size() - 1, d) == oracle_dim(a, d, a.size() - 1));
      }
    }
  }

  TEST_CASE("splitting identity") {
    for (const Arrangement& a : rational_corpus()) {
      if (!is_essential(a)) continue;
      for (std::size_t h = 0; h < a.size(); ++h)
        for (int d = 1; d <= 6; ++d)
          CHECK(dim_D_graded(a, d) - dim_DH_graded(a, h, d) == binom2(d + 1));
    }
  }

  TEST_CASE("mdr does not depend on the line") {
    for (const Arrangement& a : rational_corpus()) {
      if (!is_essential(a)) continue;
      const int r = mdr(a, 0);
      for (std::size_t h = 1; h < a.size(); ++h) CHECK(mdr(a, h) == r);
    }
  }

  TEST_CASE("Ziegler injectivity") {
    for (const Arrangement& a : rational_corpus()) {
      if (!is_essential(a)) continue;
      for (std::size_t h = 0; h < a.size(); ++h) {
        Multiarrangement2 z = restriction(a, h);
        for (int d = 1; d <= 6; ++d)
          CHECK(dim_DH_graded(a, h, d) - dim_DH_graded(a, h, d - 1) <= dim_multi_graded(z, d));
      }
    }
  }

  TEST_CASE("multiarrangement documented exponents") {
    const Field q = QQ();
    CHECK(multi_exponents(Multiarrangement2::make(q, {{q.one(), q.zero()}}, {4})) == ExponentPair{0, 4});
    auto three = Multiarrangement2::make(q, {{q.one(), q.zero()}, {q.zero(), q.one()}, {q.one(), q.one()}}, {2, 2, 2});
    CHECK(multi_exponents(three) == ExponentPair{3, 3});
    const Field f2 = GF(2);
    auto rem = Multiarrangement2::make(f2, {{f2.one(), f2.zero()}, {f2.zero(), f2.one()}, {f2.one(), f2.one()}}, {2, 2, 2});
    CHECK(multi_exponents(rem) == ExponentPair{2, 4});
  }

  TEST_CASE("multiarrangement dimensions agree with the quotient oracle") {
    std::mt19937_64 rng(17);
    std::vector<std::array<mpq_class, 2>> raw;
    std::vector<int> mult;
    for (int t = 0; t < 40; ++t) {
      Multiarrangement2 m = random_multi(rng, 1 + t % 6, 4, raw, mult);
      for (int d = 0; d <= m.total(); ++d) CHECK(dim_multi_graded(m, d) == oracle_multi_dim(raw, mult, d));
      auto [d1, d2] = multi_exponents(m);
      CHECK(d1 + d2 == m.total());
    }
  }

  TEST_CASE("three-line exponents follow the balanced rule") {
    std::mt19937_64 rng(23);
    std::vector<std::array<mpq_class, 2>> raw;
    std::vector<int> mult;
    for (int t = 0; t < 60; ++t) {
      Multiarrangement2 m = random_multi(rng, 3, 7, raw, mult);
      std::vector<int> s = mult;
      std::sort(s.begin(), s.end());
      const int total = s[0] + s[1] + s[2];
      ExponentPair expect = s[2] >= s[0] + s[1] - 1 ? ExponentPair{std::min(s[0] + s[1], s[2]), std::max(s[0] + s[1], s[2])}
                                                    : ExponentPair{total / 2, total - total / 2};
      CHECK(multi_exponents(m) == expect);
    }
  }

  TEST_CASE("constant multiplicity two") {
    std::mt19937_64 rng(29);
    std::vector<std::array<mpq_class, 2>> raw;
    std::vector<int> mult;
    for (int n = 2; n <= 8; ++n) {
      Multiarrangement2 m = random_multi(rng, n, 1, raw, mult);
      Multiarrangement2 two = Multiarrangement2::make(m.field, m.points, std::vector<int>(m.points.size(), 2));
      CHECK(multi_exponents(two) == ExponentPair{n, n});
    }
  }

  TEST_CASE("exponents are monotone in the multiplicity") {
    std::mt19937_64 rng(31);
    std::vector<std::array<mpq_class, 2>> raw;
    std::vector<int> mult;
    for (int t = 0; t < 30; ++t) {
      Multiarrangement2 big = random_multi(rng, 2 + t % 5, 4, raw, mult);
      std::vector<Point1> sub_pts;
      std::vector<int> sub_mult;
      for (std::size_t i = 0; i < big.points.size(); ++i) {
        if (i > 0 && rng() % 3 == 0) continue;
        sub_pts.push_back(big.points[i]);
        sub_mult.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(big.mult[i])));
      }
      Multiarrangement2 small = Multiarrangement2::make(big.field, sub_pts, sub_mult);
      for (int d = 0; d <= big.total(); ++d) CHECK(dim_multi_graded(big, d) <= dim_multi_graded(small, d));
      auto [e1, e2] = multi_exponents(big);
      auto [s1, s2] = multi_exponents(small);
      CHECK(s1 <= e1);
      CHECK(s2 <= e2);
    }
  }

  TEST_CASE("Ziegler exponents and freeness") {
    for (std::size_t h = 0; h < 6; ++h) CHECK(ziegler_exponents(braid(), h) == ExponentPair{2, 3});
    CHECK(ziegler_exponents(triangle(), 0) == ExponentPair{1, 1});
    Arrangement g = monomial(4, false);
    CHECK(ziegler_exponents(g, 7) == ExponentPair{5, 6});
    FreenessVerdict v = is_free(braid());
    CHECK(v.free);
    CHECK(v.str() == "Free(1,2,3)");
    FreenessVerdict vg = is_free(g);
    CHECK(vg.free);
    CHECK(vg.d2 == 5);
    CHECK(vg.d3 == 6);
    CHECK_FALSE(is_free(delete_line(g, 0)).free);
    CHECK_THROWS_AS(is_free(finite_plane(2)), PositiveCharacteristicError);
  }

  TEST_CASE("free verdicts are consistent") {
    std::vector<Arrangement> as = rational_corpus();
    as.push_back(monomial(3, false));
    for (const Arrangement& a : as) {
      if (!is_essential(a)) continue;
      FreenessVerdict v = is_free(a);
      if (!v.free) continue;
      auto roots = char_poly0(a).integer_roots();
      REQUIRE(roots);
      CHECK(roots->first == v.d2);
      CHECK(roots->second == v.d3);
      for (std::size_t h = 0; h < a.size(); ++h) {
        CHECK(ziegler_exponents(a, h) == ExponentPair{v.d2, v.d3});
        const int r = restriction_size(a, h);
        CHECK((r <= v.d2 + 1 || r == v.d3 + 1));
      }
      auto basis = certify_free(a, v.d2, v.d3);
      REQUIRE(basis);
      CHECK(saito_check(a, basis->first, basis->second).ok);
    }
  }

  TEST_CASE("restriction sizes of added lines") {
    for (const Arrangement& a : rational_corpus()) {
      if (!is_essential(a)) continue;
      FreenessVerdict v = is_free(a);
      if (!v.free) continue;
      for (std::uint64_t s = 0; s < 6; ++s) {
        Line l = random_new_line(a, s);
        Arrangement b = add_line(a, l);
        const int r = restriction_size(b, b.size() - 1);
        CAPTURE(r);
        CHECK((r == 1 + v.d2 || r >= v.d3 + 1));
      }
    }
  }

  TEST_CASE("an added line can meet in exactly d3 + 1 points") {
    const Field f = QQ();
    Arrangement b = add_line(braid(), Line::from_coeffs({f.one(), f.one(), f.from_int(-1)}));
    CHECK(restriction_size(b, b.size() - 1) == 4);
    FreenessVerdict v = is_free(b);
    CHECK(v.free);
    CHECK(v.d2 == 3);
    CHECK(v.d3 == 3);
  }

  TEST_CASE("logarithmic derivations") {
    const Field q = QQ();
    for (const Arrangement& a : rational_corpus()) CHECK(is_log_deriv(a, Derivation::euler(a.field())));
    Derivation x_dy = Derivation::zero(q, 1);
    x_dy.coeffs[1][monomial_index({1, 0, 0})] = q.one();
    CHECK_FALSE(is_log_deriv(triangle(), x_dy));
  }

  TEST_CASE("Saito check on the Fano plane minus a line") {
    const Field f = GF(2);
    Arrangement a = fano_minus_x();
    REQUIRE(a.size() == 6);
    HomPoly x = lin(f, 1, 0, 0), y = lin(f, 0, 1, 0), z = lin(f, 0, 0, 1);
    Derivation t2 = from_components(f, {x * x, y * y, z * z});
    HomPoly cubic = lin(f, 1, 1, 0) * lin(f, 1, 0, 1) * lin(f, 1, 1, 1);
    Derivation t3 = from_components(f, {cubic, HomPoly(f, 3), HomPoly(f, 3)});
    CHECK(is_log_deriv(a, t2));
    CHECK(is_log_deriv(a, t3));
    CHECK(saito_check(a, t2, t3).ok);
    SaitoResult same = saito_check(a, t2, t2);
    CHECK_FALSE(same.ok);
    CHECK(same.reason == SaitoReason::degree_sum);
    CHECK(certify_free(a, 2, 3).has_value());
  }

  TEST_CASE("Saito check on the braid arrangement") {
    Arrangement b = braid();
    auto d2 = DH_graded_basis(b, 0, 2);
    auto d3 = DH_graded_basis(b, 0, 3);
    REQUIRE(d2.size() == 1);
    bool found = false;
    for (const auto& t : d3) found = found || saito_check(b, d2[0], t).ok;
    CHECK(found);
    Derivation z = Derivation::zero(b.field(), 3);
    CHECK(saito_check(b, d2[0], z).reason == SaitoReason::determinant_zero);
  }

  TEST_CASE("mdr scan cap") {
    Arrangement a = generic(6, 1);
    CHECK(mdr_scan_cap(a) == 4);
    setenv("ARRANGELAB_MAX_DEGREE", "9", 1);
    CHECK(mdr_scan_cap(a) == 9);
    setenv("ARRANGELAB_MAX_DEGREE", "2", 1);
    CHECK(mdr_scan_cap(a) == 4);
    unsetenv("ARRANGELAB_MAX_DEGREE");
  }
}
