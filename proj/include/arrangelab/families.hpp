#pragma once

#include "arrangelab/projgeom.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Randomized families draw from std::mt19937_64 seeded with the given seed.
// An integer in [lo, hi] is lo + (draw mod (hi - lo + 1)), one draw per
// coefficient, with coefficients in [-9, 9] unless a family needs more room.

namespace arrangelab {

/// Named constructor plus its integer parameters, as used by `generate`.
struct FamilySpec {
  std::string name;  // near_pencil, grid, monomial, full_monomial, finite_plane, generic,
                     // random_supersolvable, random
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t p = 0;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& family_names();
Arrangement make_family(const FamilySpec& spec);

/// n-1 lines through (0:0:1) (x, y, x-j*y) plus the line z.
Arrangement near_pencil(int n);

/// x - i*z (i = 0..a-1), y - j*z (j = 0..b-1) and z over Q.
Arrangement grid(int a, int b);

/// Lines of (x^n - y^n)(y^n - z^n)(x^n - z^n), plus x, y, z when full. The field
/// is Q for n <= 2, Q(sqrt(-3)) for n = 3 and Q(sqrt(-1)) for n = 4.
Arrangement monomial(int n, bool full);

/// All p^2 + p + 1 lines of P^2 over F_p, p <= 7.
Arrangement finite_plane(int p);

/// Random lines over Q with every intersection point double.
Arrangement generic(int n, std::uint64_t seed);

/// Supersolvable arrangement with m lines through (0:1:0) and k further lines
/// through a second point q on one of them.
Arrangement random_supersolvable(int m, int k, std::uint64_t seed);

/// Essential arrangement over Q mixing random lines and joins of existing
/// intersection points.
Arrangement random_arrangement(int n, std::uint64_t seed);

Arrangement delete_line(const Arrangement& a, std::size_t h);
Arrangement delete_line(const Arrangement& a, const Line& h);
Arrangement add_line(const Arrangement& a, const Line& l);

/// A random line over Q not in a: for even seeds the join of two points of
/// L2(a) when one is available, otherwise a line avoiding every point of L2(a).
Line random_new_line(const Arrangement& a, std::uint64_t seed);

}  // namespace arrangelab
