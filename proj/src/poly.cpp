#include "arrangelab/poly.hpp"

#include <stdexcept>

namespace arrangelab {

std::vector<Exponent3> monomials(int d) {
  std::vector<Exponent3> out;
  out.reserve(monomial_count(d));
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

HomPoly::HomPoly(Field field, int degree)
    : field_(field), degree_(degree), c_(monomial_count(degree), field.zero()) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

HomPoly HomPoly::linear(const std::array<Scalar, 3>& coeffs) {
  HomPoly p(coeffs[0].field(), 1);
  for (std::size_t i = 0; i < 3; ++i) p.c_[i] = coeffs[i];
  return p;
}

bool HomPoly::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("adding polynomials of different degree");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("subtracting polynomials of different degree");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
  HomPoly out(field_, degree_ + o.degree_);
  auto ma = monomials(degree_);
  auto mb = monomials(o.degree_);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      Exponent3 e{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]};
      out.c_[monomial_index(e)] += c_[i] * o.c_[j];
    }
  }
  return out;
}

HomPoly HomPoly::scaled(const Scalar& s) const {
  HomPoly out = *this;
  for (Scalar& c : out.c_) c *= s;
  return out;
}

BinaryForm binary_multiply(const BinaryForm& a, const BinaryForm& b) {
  const Field& f = a.front().field();
  BinaryForm out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<BinaryForm> linear_powers(const Scalar& p, const Scalar& q, int max_power) {
  std::vector<BinaryForm> pw;
  pw.push_back({p.field().one()});
  BinaryForm lin{p, q};
  for (int k = 1; k <= max_power; ++k) pw.push_back(binary_multiply(pw.back(), lin));
  return pw;
}

std::vector<BinaryForm> substitute_monomials(const std::array<Scalar, 3>& u,
                                             const std::array<Scalar, 3>& v, int d) {
  std::array<std::vector<BinaryForm>, 3> pw;
  for (std::size_t i = 0; i < 3; ++i) pw[i] = linear_powers(u[i], v[i], d);
  std::vector<BinaryForm> out;
  out.reserve(monomial_count(d));
  for (const Exponent3& e : monomials(d))
    out.push_back(binary_multiply(binary_multiply(pw[0][e[0]], pw[1][e[1]]), pw[2][e[2]]));
  return out;
}

BinaryForm substitute(const HomPoly& f, const std::array<Scalar, 3>& u,
                      const std::array<Scalar, 3>& v) {
  auto subs = substitute_monomials(u, v, f.degree());
  BinaryForm out(static_cast<std::size_t>(f.degree()) + 1, f.field().zero());
  for (std::size_t m = 0; m < subs.size(); ++m) {
    if (f[m].is_zero()) continue;
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += f[m] * subs[m][e];
  }
  return out;
}

}  // namespace arrangelab
