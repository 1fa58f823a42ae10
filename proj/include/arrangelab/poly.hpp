#pragma once

#include "arrangelab/field.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace arrangelab {

using Exponent3 = std::array<int, 3>;

/// Number of monomials of degree d in x, y, z.
inline std::size_t monomial_count(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

/// Degree-d monomials in lex order x > y > z: x^d, x^(d-1) y, x^(d-1) z, ...
std::vector<Exponent3> monomials(int d);

/// Position of x^i y^j z^k among monomials(i + j + k).
inline std::size_t monomial_index(const Exponent3& e) {
  const std::size_t d = static_cast<std::size_t>(e[0] + e[1] + e[2]);
  const std::size_t a = d - static_cast<std::size_t>(e[0]);
  return a * (a + 1) / 2 + (a - static_cast<std::size_t>(e[1]));
}

/// Homogeneous polynomial in x, y, z with coefficients over monomials(degree).
class HomPoly {
 public:
  HomPoly(Field field, int degree);
  static HomPoly linear(const std::array<Scalar, 3>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly operator*(const HomPoly& o) const;
  HomPoly scaled(const Scalar& s) const;

  friend bool operator==(const HomPoly&, const HomPoly&) = default;

 private:
  Field field_;
  int degree_;
  std::vector<Scalar> c_;
};

/// Binary form of degree d stored as coefficients of s^(d-e) t^e, e = 0..d.
using BinaryForm = std::vector<Scalar>;

BinaryForm binary_multiply(const BinaryForm& a, const BinaryForm& b);

/// Powers 0..max_power of the linear binary form p*s + q*t.
std::vector<BinaryForm> linear_powers(const Scalar& p, const Scalar& q, int max_power);

/// Substitutes (x, y, z) = s*u + t*v into every degree-d monomial.
std::vector<BinaryForm> substitute_monomials(const std::array<Scalar, 3>& u,
                                             const std::array<Scalar, 3>& v, int d);

/// Substitutes (x, y, z) = s*u + t*v into a polynomial.
BinaryForm substitute(const HomPoly& f, const std::array<Scalar, 3>& u,
                      const std::array<Scalar, 3>& v);

}  // namespace arrangelab
