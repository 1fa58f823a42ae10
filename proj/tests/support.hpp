#pragma once

#include "arrangelab/families.hpp"
#include "arrangelab/gradedla.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace arrangelab;

inline Field QQ() { return Field(FieldDescriptor::rational()); }
inline Field GF(std::int64_t p) { return Field(FieldDescriptor::prime(p)); }
inline Field QW(std::int64_t d) { return Field(FieldDescriptor::quadratic(d)); }

inline Arrangement from_rows(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Triple> t;
  for (const auto& r : rows) t.push_back({f.parse(r[0]), f.parse(r[1]), f.parse(r[2])});
  return Arrangement::from_triples(f, t);
}

inline Arrangement braid() {
  return from_rows(QQ(), {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"},
                          {"1", "-1", "0"}, {"0", "1", "-1"}, {"1", "0", "-1"}});
}

inline Arrangement triangle() { return from_rows(QQ(), {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}); }

/// All seven lines of P^2(F_2) except x = 0.
inline Arrangement fano_minus_x() {
  Arrangement fano = finite_plane(2);
  const Field f = fano.field();
  return delete_line(fano, Line::from_coeffs({f.one(), f.zero(), f.zero()}));
}


}  // namespace testsupport

namespace testsupport {

/// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t mpq_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < nc && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < nc; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::array<mpq_class, 3> rational_coeffs(const Line& l) {
  return {l[0].rational_part().to_mpq(), l[1].rational_part().to_mpq(), l[2].rational_part().to_mpq()};
}

/// Arrangements over Q used by the structural property tests.
inline std::vector<Arrangement> rational_corpus() {
  std::vector<Arrangement> out{braid(), triangle(), near_pencil(5), grid(2, 2), grid(3, 3), monomial(2, false),
                               monomial(2, true)};
  for (std::uint64_t s = 0; s < 6; ++s) {
    out.push_back(random_arrangement(5 + static_cast<int>(s), s));
    out.push_back(random_supersolvable(3 + static_cast<int>(s % 3), 2 + static_cast<int>(s % 3), s));
    out.push_back(generic(4 + static_cast<int>(s % 3), s));
  }
  return out;
}

}  // namespace testsupport
