#include "support.hpp"

#include <doctest.h>

#include <climits>

using namespace testsupport;

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40), den(1, 12);
  switch (f.kind()) {
    case FieldKind::prime:
      return f.from_int(num(rng));
    case FieldKind::quadratic:
      return f.from_parts(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    default:
      return f.from_rational(Rational(num(rng), den(rng)));
  }
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("rational tracks mpq across the int64 boundary") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> big(LLONG_MIN / 2, LLONG_MAX / 2), small(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
      std::int64_t n1 = i % 2 ? big(rng) : small(rng), n2 = i % 3 ? big(rng) : small(rng);
      std::int64_t d1 = std::max<std::int64_t>(1, std::abs(small(rng))), d2 = std::max<std::int64_t>(1, std::abs(big(rng)));
      Rational a(n1, d1), b(n2, d2);
      mpq_class qa(mpz_class(std::to_string(n1)), mpz_class(std::to_string(d1))),
          qb(mpz_class(std::to_string(n2)), mpz_class(std::to_string(d2)));
      qa.canonicalize();
      qb.canonicalize();
      CHECK((a + b).to_mpq() == qa + qb);
      CHECK((a - b).to_mpq() == qa - qb);
      CHECK((a * b).to_mpq() == qa * qb);
      if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
      CHECK((a < b) == (qa < qb));
      Rational c = a * b * b;
      c = c / b / b;
      CHECK(c == a);
      CHECK(c.is_small() == a.is_small());
    }
  }

  TEST_CASE("LLONG_MIN does not stay inline") {
    Rational m(LLONG_MIN);
    CHECK((-m).to_mpq() == -mpq_class(mpz_class(std::to_string(LLONG_MIN))));
    Rational x(LLONG_MAX);
    CHECK((x + Rational(1)).str() == "9223372036854775808");
    CHECK(((x + Rational(1)) - Rational(1)).is_small());
  }

  TEST_CASE("field axioms on random scalars") {
    for (const Field& f : {QQ(), QW(-3), QW(-1), QW(5), GF(2), GF(7), GF(101)}) {
      std::mt19937_64 rng(11);
      for (int i = 0; i < 300; ++i) {
        Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + f.zero() == a);
        CHECK(a * f.one() == a);
        CHECK(a - a == f.zero());
        if (!a.is_zero()) CHECK(a * a.inv() == f.one());
        Scalar s = a;
        s.sub_mul(b, c);
        CHECK(s == a - b * c);
        CHECK(f.parse(a.str()) == a);
      }
    }
  }

  TEST_CASE("quadratic multiplication against the explicit formula") {
    const Field f = QW(-3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      Scalar u = random_scalar(f, rng), v = random_scalar(f, rng);
      const mpq_class a = u.rational_part().to_mpq(), b = u.sqrt_part().to_mpq();
      const mpq_class c = v.rational_part().to_mpq(), d = v.sqrt_part().to_mpq();
      Scalar w = u * v;
      CHECK(w.rational_part().to_mpq() == a * c - 3 * b * d);
      CHECK(w.sqrt_part().to_mpq() == a * d + b * c);
    }
  }

  TEST_CASE("prime field against machine arithmetic") {
    const Field f = GF(13);
    for (std::int64_t a = -20; a < 20; ++a)
      for (std::int64_t b = -5; b < 15; ++b) {
        auto mod = [](std::int64_t v) { return ((v % 13) + 13) % 13; };
        CHECK((f.from_int(a) * f.from_int(b)).residue() == mod(a * b));
        CHECK((f.from_int(a) - f.from_int(b)).residue() == mod(a - b));
      }
  }

  TEST_CASE("scalar grammar") {
    Scalar s = QW(-3).parse("1/2+3*w");
    CHECK(s.rational_part() == Rational(1, 2));
    CHECK(s.sqrt_part() == Rational(3));
    CHECK(GF(2).parse("5").residue() == 1);
    CHECK(QQ().parse("-6/4").str() == "-3/2");
    CHECK_THROWS_AS(QQ().parse("1/0"), ParseError);
    CHECK_THROWS_AS(QQ().parse("w"), ParseError);
    CHECK_THROWS_AS(QQ().parse(""), ParseError);
    CHECK_THROWS_AS(GF(3).parse("1/3"), std::invalid_argument);
  }

  TEST_CASE("field validation") {
    CHECK_THROWS_AS(Field(FieldDescriptor::prime(4)), FieldError);
    CHECK_THROWS_AS(Field(FieldDescriptor::quadratic(4)), FieldError);
    CHECK_THROWS_AS(Field(FieldDescriptor::quadratic(1)), FieldError);
    CHECK_NOTHROW(Field(FieldDescriptor::quadratic(-1)));
    CHECK_THROWS(QQ().one() + GF(2).one());
  }
}
