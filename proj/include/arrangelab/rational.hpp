#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace arrangelab {

/// Exact rational number. Values whose reduced numerator and denominator fit
/// in int64 are stored inline; anything larger lives in a GMP rational. The
/// representation is canonical: a value is big only if it does not fit.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) { if (n == INT64_MIN) assign_big(mpq_class(static_cast<long>(n))); }  // NOLINT
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q) { assign_big(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_small() const { return !big_; }
  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational inv() const;
  /// this -= f * x
  void sub_mul(const Rational& f, const Rational& x);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }

  std::size_t hash() const;

 private:
  void assign_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace arrangelab
