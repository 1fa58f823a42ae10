#pragma once

#include "arrangelab/combin.hpp"
#include "arrangelab/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrangelab {

/// Homogeneous derivation f*dx + g*dy + h*dz of degree d; coefficient vectors
/// follow monomials(d).
struct Derivation {
  Field field;
  int degree = 0;
  std::array<std::vector<Scalar>, 3> coeffs;

  static Derivation zero(const Field& field, int degree);
  static Derivation euler(const Field& field);
  /// Splits a stacked (theta(x) | theta(y) | theta(z)) vector.
  static Derivation from_stacked(const Field& field, int degree, const std::vector<Scalar>& v);

  HomPoly component(std::size_t i) const;
  /// theta applied to the linear form a*x + b*y + c*z.
  HomPoly apply(const std::array<Scalar, 3>& form) const;
  bool is_zero() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// Pair (d1, d2) with d1 <= d2.
using ExponentPair = std::pair<int, int>;

class PositiveCharacteristicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeScanExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int dim_D_graded(const Arrangement& a, int d);
int dim_DH_graded(const Arrangement& a, std::size_t h, int d);
std::vector<Derivation> D_graded_basis(const Arrangement& a, int d);
std::vector<Derivation> DH_graded_basis(const Arrangement& a, std::size_t h, int d);

/// Default upper bound of the mdr scan: |A| - 2, raised (never lowered) by
/// the ARRANGELAB_MAX_DEGREE environment variable.
int mdr_scan_cap(const Arrangement& a);
/// Least d >= 1 with D_H(A)_d != 0, computed with the line of index h.
int mdr(const Arrangement& a, std::size_t h = 0);

int dim_multi_graded(const Multiarrangement2& m, int d);
std::vector<std::array<std::vector<Scalar>, 2>> multi_graded_basis(const Multiarrangement2& m, int d);
ExponentPair multi_exponents(const Multiarrangement2& m);
ExponentPair ziegler_exponents(const Arrangement& a, std::size_t h);

struct FreenessVerdict {
  bool free = false;
  int d2 = 0;  // exponents (1, d2, d3) when free
  int d3 = 0;
  ExponentPair ziegler{0, 0};
  std::optional<std::pair<std::int64_t, std::int64_t>> chi_roots;
  std::size_t witness_line = 0;

  std::string str() const;
};

/// Characteristic-zero freeness decision: free iff chi_0 factors with the
/// Ziegler exponents of the first line (Yoshinaga's criterion), checked
/// against a second line.
FreenessVerdict is_free(const Arrangement& a);

bool is_log_deriv(const Arrangement& a, const Derivation& theta);

enum class SaitoReason {
  ok,
  field_mismatch,
  not_logarithmic,
  degree_sum,
  determinant_zero,
  determinant_mismatch,
};

const char* to_string(SaitoReason r);

struct SaitoResult {
  bool ok;
  SaitoReason reason;
  explicit operator bool() const { return ok; }
};

/// Certifies (theta_E, theta2, theta3) as a free basis of D(A).
SaitoResult saito_check(const Arrangement& a, const Derivation& theta2, const Derivation& theta3);

/// Searches D_H(A) at degrees d2 <= d3 for a pair passing saito_check. Works in
/// any characteristic.
std::optional<std::pair<Derivation, Derivation>> certify_free(const Arrangement& a, int d2, int d3);

}  // namespace arrangelab
