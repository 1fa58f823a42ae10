#include "arrangelab/gradedla.hpp"

#include "arrangelab/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace arrangelab {

Derivation Derivation::zero(const Field& field, int degree) {
  Derivation d;
  d.field = field;
  d.degree = degree;
  for (auto& c : d.coeffs) c.assign(monomial_count(degree), field.zero());
  return d;
}

Derivation Derivation::euler(const Field& field) {
  Derivation d = zero(field, 1);
  for (std::size_t i = 0; i < 3; ++i) d.coeffs[i][i] = field.one();
  return d;
}

Derivation Derivation::from_stacked(const Field& field, int degree, const std::vector<Scalar>& v) {
  const std::size_t n = monomial_count(degree);
  if (v.size() != 3 * n) throw std::invalid_argument("stacked derivation has the wrong length");
  Derivation d;
  d.field = field;
  d.degree = degree;
  for (std::size_t i = 0; i < 3; ++i)
    d.coeffs[i].assign(v.begin() + static_cast<std::ptrdiff_t>(i * n),
                       v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return d;
}

HomPoly Derivation::component(std::size_t i) const {
  HomPoly p(field, degree);
  for (std::size_t m = 0; m < coeffs[i].size(); ++m) p[m] = coeffs[i][m];
  return p;
}

HomPoly Derivation::apply(const std::array<Scalar, 3>& form) const {
  HomPoly p(field, degree);
  for (std::size_t i = 0; i < 3; ++i) {
    if (form[i].is_zero()) continue;
    for (std::size_t m = 0; m < coeffs[i].size(); ++m)
      if (!coeffs[i][m].is_zero()) p[m] += form[i] * coeffs[i][m];
  }
  return p;
}

bool Derivation::is_zero() const {
  for (const auto& c : coeffs)
    for (const Scalar& s : c)
      if (!s.is_zero()) return false;
  return true;
}

namespace {

/// Canonical kernel basis (u, v) of the linear form of l.
std::pair<Triple, Triple> kernel_basis(const Line& l) {
  const Field& f = l.field();
  std::size_t pivot = 0;
  while (l[pivot].is_zero()) ++pivot;
  std::array<Triple, 2> out{Triple{f.zero(), f.zero(), f.zero()}, Triple{f.zero(), f.zero(), f.zero()}};
  std::size_t j = 0;
  for (std::size_t c = 0; c < 3; ++c) {
    if (c == pivot) continue;
    out[j][c] = f.one();
    out[j][pivot] = -l[c];
    ++j;
  }
  return {out[0], out[1]};
}

// Unknowns are the stacked coefficients of theta(x), theta(y), theta(z). Each
// line H contributes the d+1 coefficients of theta(alpha_H) restricted to H;
// with `tangent_to`, theta(alpha_H) = 0 is imposed identically for that line.
Matrix log_system(const Arrangement& a, int d, std::optional<std::size_t> tangent_to) {
  const std::size_t n = monomial_count(d);
  const Field& f = a.field();
  Matrix sys(f, 0, 3 * n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (tangent_to && *tangent_to == i) continue;
    const Line& l = a.line(i);
    auto [u, v] = kernel_basis(l);
    auto subs = substitute_monomials(u, v, d);
    for (int e = 0; e <= d; ++e) {
      Vector row(3 * n, f.zero());
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& val = subs[m][static_cast<std::size_t>(e)];
        if (val.is_zero()) continue;
        for (std::size_t k = 0; k < 3; ++k)
          if (!l[k].is_zero()) row[k * n + m] = l[k] * val;
      }
      sys.append_row(row);
    }
  }
  if (tangent_to) {
    const Line& l = a.line(*tangent_to);
    for (std::size_t m = 0; m < n; ++m) {
      Vector row(3 * n, f.zero());
      for (std::size_t k = 0; k < 3; ++k) row[k * n + m] = l[k];
      sys.append_row(row);
    }
  }
  return sys;
}

std::vector<Derivation> to_derivations(const Field& f, int d, const std::vector<Vector>& ns) {
  std::vector<Derivation> out;
  out.reserve(ns.size());
  for (const Vector& v : ns) out.push_back(Derivation::from_stacked(f, d, v));
  return out;
}

void check_line(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("line index out of range");
}

// Unknowns: coefficients of f and g in theta = f dx + g dy, over x^(d-e) y^e.
// For [s:t] with multiplicity mu the form is alpha = t x - s y; substituting
// x = s*lambda + w1*nu, y = t*lambda + w2*nu with alpha(w) != 0 turns alpha
// into a multiple of nu, so alpha^mu | theta(alpha) iff the nu^j coefficients
// vanish for j < mu.
Matrix multi_system(const Multiarrangement2& ma, int d) {
  const Field& f = ma.field;
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  Matrix sys(f, 0, 2 * n);
  for (std::size_t p = 0; p < ma.points.size(); ++p) {
    const Scalar& s = ma.points[p][0];
    const Scalar& t = ma.points[p][1];
    Scalar w1 = t.is_zero() ? f.zero() : f.one();
    Scalar w2 = t.is_zero() ? f.one() : f.zero();
    auto xp = linear_powers(s, w1, d);
    auto yp = linear_powers(t, w2, d);
    std::vector<BinaryForm> expand;
    for (int e = 0; e <= d; ++e) expand.push_back(binary_multiply(xp[d - e], yp[e]));
    const int rows = std::min(ma.mult[p], d + 1);
    Scalar minus_s = -s;
    for (int j = 0; j < rows; ++j) {
      Vector row(2 * n, f.zero());
      for (std::size_t e = 0; e < n; ++e) {
        const Scalar& c = expand[e][static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        row[e] = t * c;
        row[n + e] = minus_s * c;
      }
      sys.append_row(row);
    }
  }
  return sys;
}

}  // namespace

int dim_D_graded(const Arrangement& a, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  return static_cast<int>(nullity(log_system(a, d, std::nullopt)));
}

int dim_DH_graded(const Arrangement& a, std::size_t h, int d) {
  check_line(a, h);
  if (d < 0) throw std::invalid_argument("negative degree");
  return static_cast<int>(nullity(log_system(a, d, h)));
}

std::vector<Derivation> D_graded_basis(const Arrangement& a, int d) {
  return to_derivations(a.field(), d, nullspace(log_system(a, d, std::nullopt)));
}

std::vector<Derivation> DH_graded_basis(const Arrangement& a, std::size_t h, int d) {
  check_line(a, h);
  return to_derivations(a.field(), d, nullspace(log_system(a, d, h)));
}

int mdr_scan_cap(const Arrangement& a) {
  int cap = static_cast<int>(a.size()) - 2;
  if (const char* env = std::getenv("ARRANGELAB_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > cap) cap = static_cast<int>(v);
  }
  return cap;
}

int mdr(const Arrangement& a, std::size_t h) {
  check_line(a, h);
  if (a.size() < 3 || !is_essential(a))
    throw std::invalid_argument("mdr needs an essential arrangement of at least 3 lines");
  const int cap = mdr_scan_cap(a);
  for (int d = 1; d <= cap; ++d)
    if (dim_DH_graded(a, h, d) > 0) return d;
  throw DegreeScanExceeded("no nonzero element of D_H up to degree " + std::to_string(cap) +
                           " (|A| = " + std::to_string(a.size()) +
                           "); raise ARRANGELAB_MAX_DEGREE to scan further");
}

int dim_multi_graded(const Multiarrangement2& m, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  return static_cast<int>(nullity(multi_system(m, d)));
}

std::vector<std::array<std::vector<Scalar>, 2>> multi_graded_basis(const Multiarrangement2& m, int d) {
  auto ns = nullspace(multi_system(m, d));
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  std::vector<std::array<std::vector<Scalar>, 2>> out;
  for (const Vector& v : ns)
    out.push_back({Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
                   Vector(v.begin() + static_cast<std::ptrdiff_t>(n), v.end())});
  return out;
}

ExponentPair multi_exponents(const Multiarrangement2& m) {
  const int total = m.total();
  if (total < 1) throw std::invalid_argument("multiarrangement must have |m| >= 1");
  std::vector<int> dims;
  int d1 = -1;
  for (int d = 0; d <= total / 2; ++d) {
    dims.push_back(dim_multi_graded(m, d));
    if (dims.back() > 0) {
      d1 = d;
      break;
    }
  }
  if (d1 < 0) throw std::logic_error("no derivation found up to degree |m|/2");
  const int d2 = total - d1;
  for (int d = static_cast<int>(dims.size()); d <= d2; ++d) dims.push_back(dim_multi_graded(m, d));
  for (int d = 0; d <= d2; ++d) {
    int expected = std::max(0, d - d1 + 1) + std::max(0, d - d2 + 1);
    if (dims[static_cast<std::size_t>(d)] != expected)
      throw std::logic_error("Hilbert function mismatch at degree " + std::to_string(d) + ": got " +
                             std::to_string(dims[static_cast<std::size_t>(d)]) + ", expected " +
                             std::to_string(expected));
  }
  return {d1, d2};
}

ExponentPair ziegler_exponents(const Arrangement& a, std::size_t h) {
  if (a.size() < 3) throw std::invalid_argument("ziegler_exponents needs at least 3 lines");
  return multi_exponents(restriction(a, h));
}

std::string FreenessVerdict::str() const {
  if (!free) return "NonFree";
  return "Free(1," + std::to_string(d2) + "," + std::to_string(d3) + ")";
}

FreenessVerdict is_free(const Arrangement& a) {
  if (a.field().characteristic() != 0)
    throw PositiveCharacteristicError(
        "is_free needs characteristic 0; certify a basis with saito_check instead");
  if (a.size() < 3 || !is_essential(a))
    throw std::invalid_argument("is_free needs an essential arrangement");
  FreenessVerdict v;
  CharPoly chi = char_poly0(a);
  v.chi_roots = chi.integer_roots();
  v.ziegler = ziegler_exponents(a, 0);
  v.witness_line = 0;
  const auto [e1, e2] = v.ziegler;
  v.free = chi.c1 == -(e1 + e2) && chi.c0 == static_cast<std::int64_t>(e1) * e2;
  if (v.free) {
    v.d2 = e1;
    v.d3 = e2;
    if (ziegler_exponents(a, 1) != v.ziegler)
      throw std::logic_error("free verdict but Ziegler exponents differ between lines 0 and 1");
  }
  return v;
}

bool is_log_deriv(const Arrangement& a, const Derivation& theta) {
  if (!(theta.field == a.field())) throw FieldError("derivation and arrangement fields differ");
  for (std::size_t k = 0; k < 3; ++k)
    if (theta.coeffs[k].size() != monomial_count(theta.degree))
      throw std::invalid_argument("derivation coefficient vectors do not match its degree");
  for (const Line& l : a.lines()) {
    auto [u, v] = kernel_basis(l);
    for (const Scalar& c : substitute(theta.apply(l.coeffs()), u, v))
      if (!c.is_zero()) return false;
  }
  return true;
}

const char* to_string(SaitoReason r) {
  switch (r) {
    case SaitoReason::ok:
      return "ok";
    case SaitoReason::field_mismatch:
      return "field_mismatch";
    case SaitoReason::not_logarithmic:
      return "not_logarithmic";
    case SaitoReason::degree_sum:
      return "degree_sum";
    case SaitoReason::determinant_zero:
      return "determinant_zero";
    case SaitoReason::determinant_mismatch:
      return "determinant_mismatch";
  }
  return "?";
}

SaitoResult saito_check(const Arrangement& a, const Derivation& theta2, const Derivation& theta3) {
  if (!(theta2.field == a.field()) || !(theta3.field == a.field()))
    return {false, SaitoReason::field_mismatch};
  if (!is_log_deriv(a, theta2) || !is_log_deriv(a, theta3))
    return {false, SaitoReason::not_logarithmic};
  if (1 + theta2.degree + theta3.degree != static_cast<int>(a.size()))
    return {false, SaitoReason::degree_sum};

  const Field& f = a.field();
  std::array<HomPoly, 3> r0{HomPoly::linear({f.one(), f.zero(), f.zero()}),
                            HomPoly::linear({f.zero(), f.one(), f.zero()}),
                            HomPoly::linear({f.zero(), f.zero(), f.one()})};
  std::array<HomPoly, 3> r1{theta2.component(0), theta2.component(1), theta2.component(2)};
  std::array<HomPoly, 3> r2{theta3.component(0), theta3.component(1), theta3.component(2)};
  auto minor = [&](std::size_t i, std::size_t j) {
    HomPoly p = r1[i] * r2[j];
    p -= r1[j] * r2[i];
    return p;
  };
  HomPoly det = r0[0] * minor(1, 2);
  det -= r0[1] * minor(0, 2);
  det += r0[2] * minor(0, 1);
  if (det.is_zero()) return {false, SaitoReason::determinant_zero};

  HomPoly q = HomPoly::linear(a.line(0).coeffs());
  for (std::size_t i = 1; i < a.size(); ++i) q = q * HomPoly::linear(a.line(i).coeffs());
  std::size_t lead = 0;
  while (q[lead].is_zero()) ++lead;
  Scalar c = det[lead] / q[lead];
  if (!(det == q.scaled(c))) return {false, SaitoReason::determinant_mismatch};
  return {true, SaitoReason::ok};
}

std::optional<std::pair<Derivation, Derivation>> certify_free(const Arrangement& a, int d2, int d3) {
  if (d2 > d3) std::swap(d2, d3);
  if (d2 < 0 || 1 + d2 + d3 != static_cast<int>(a.size())) return std::nullopt;
  auto low = DH_graded_basis(a, 0, d2);
  if (d2 == d3) {
    for (std::size_t i = 0; i < low.size(); ++i)
      for (std::size_t j = i + 1; j < low.size(); ++j)
        if (saito_check(a, low[i], low[j])) return std::make_pair(low[i], low[j]);
    return std::nullopt;
  }
  auto high = DH_graded_basis(a, 0, d3);
  for (const auto& t2 : low)
    for (const auto& t3 : high)
      if (saito_check(a, t2, t3)) return std::make_pair(t2, t3);
  return std::nullopt;
}

}  // namespace arrangelab
