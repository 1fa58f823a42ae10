#pragma once

#include "arrangelab/rational.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arrangelab {

enum class FieldKind { rational, quadratic, prime };

/// Identifies one of the supported exact fields: Q, Q(sqrt d) or F_p.
///
/// `param` is d for quadratic fields and p for prime fields; it is 0 for Q.
struct FieldDescriptor {
  FieldKind kind = FieldKind::rational;
  std::int64_t param = 0;

  static FieldDescriptor rational() { return {FieldKind::rational, 0}; }
  static FieldDescriptor quadratic(std::int64_t d) { return {FieldKind::quadratic, d}; }
  static FieldDescriptor prime(std::int64_t p) { return {FieldKind::prime, p}; }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// A validated field handle. Cheap to copy.
class Field {
 public:
  Field() = default;
  explicit Field(FieldDescriptor desc);

  const FieldDescriptor& descriptor() const { return desc_; }
  FieldKind kind() const { return desc_.kind; }
  std::int64_t characteristic() const {
    return desc_.kind == FieldKind::prime ? desc_.param : 0;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_rational(const Rational& q) const;
  /// a + b*w with w = sqrt(d); only valid over quadratic fields.
  Scalar from_parts(const Rational& a, const Rational& b) const;
  /// The adjoined square root w; only valid over quadratic fields.
  Scalar sqrt_d() const;

  Scalar parse(std::string_view text) const;
  std::string render(const Scalar& s) const;
  /// Short human label, e.g. "QQ", "QQ(sqrt(-3))", "GF(2)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  FieldDescriptor desc_;
};

Field make_field(FieldDescriptor desc);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Exact field element. Over Q and Q(sqrt d) the value is a + b*sqrt(d) with
/// a, b reduced fractions (b = 0 over Q); over F_p it is a residue in [0, p).
class Scalar {
 public:
  Scalar() = default;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational part (residue for prime fields).
  const Rational& rational_part() const { return a_; }
  /// Coefficient of sqrt(d); zero outside quadratic fields.
  const Rational& sqrt_part() const { return b_; }
  std::int64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inv() const;

  /// this -= f * x, without allocating a temporary Scalar.
  void sub_mul(const Scalar& f, const Scalar& x);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order on canonical representations. Not a field order.
  friend int canonical_compare(const Scalar& a, const Scalar& b);

  std::string str() const { return field_.render(*this); }
  std::size_t hash() const;

 private:
  friend class Field;
  void check_same_field(const Scalar& o) const;

  Field field_;
  Rational a_;
  Rational b_;
  std::int64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace arrangelab
