#pragma once

#include "arrangelab/projgeom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrangelab {

using Point1 = std::array<Scalar, 2>;

/// Lines through the origin of K^2 with positive multiplicities. A point
/// [s:t] of P^1 stands for the line spanned by (s, t).
struct Multiarrangement2 {
  Field field;
  std::vector<Point1> points;
  std::vector<int> mult;
  std::optional<std::size_t> origin_line;

  /// Normalizes points, rejects duplicates and nonpositive multiplicities.
  static Multiarrangement2 make(const Field& field, std::vector<Point1> points,
                                std::vector<int> mult);

  int total() const;
  std::vector<int> sorted_multiplicities() const;
};

/// t^2 + c1 t + c0.
struct CharPoly {
  std::int64_t c1 = 0;
  std::int64_t c0 = 0;

  std::int64_t operator()(std::int64_t t) const { return t * t + c1 * t + c0; }
  /// Integer roots (r1 <= r2) when the polynomial splits over Z.
  std::optional<std::pair<std::int64_t, std::int64_t>> integer_roots() const;
  std::string str() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

int mu(const LatticeL2& lat, const ProjPoint& p);
int n2(const Arrangement& a);
int n2_on_line(const Arrangement& a, std::size_t h);
int n2_on_line(const Arrangement& a, const Line& h);
/// |A^H|: number of lattice points on the line with index h.
int restriction_size(const Arrangement& a, std::size_t h);

CharPoly char_poly0(const Arrangement& a);

struct ModularPoint {
  ProjPoint point;
  int m;  // number of lines through the point
};

/// All modular points, in canonical point order.
std::vector<ModularPoint> modular_points(const Arrangement& a);

/// The literal definition: every meet of two lines missing p lies on exactly
/// one line through p. p must be a lattice point.
bool is_modular_by_definition(const Arrangement& a, const ProjPoint& p);

struct SupersolvableWitness {
  ProjPoint point;
  int m;
  int k;
  std::vector<std::size_t> pencil_lines;  // indices of A_p
};

std::optional<SupersolvableWitness> is_supersolvable(const Arrangement& a);
/// Witness data for a specific modular point; nullopt if p is not modular.
std::optional<SupersolvableWitness> supersolvable_at(const Arrangement& a, const ProjPoint& p);

Multiarrangement2 restriction(const Arrangement& a, std::size_t h);
Multiarrangement2 restriction(const Arrangement& a, const Line& h);

struct DivisionalFreeness {
  bool holds;
  std::optional<std::size_t> witness;
};

DivisionalFreeness is_divisionally_free(const Arrangement& a);

std::optional<std::pair<std::int64_t, std::int64_t>> terao_exponents(const Arrangement& a);

}  // namespace arrangelab
