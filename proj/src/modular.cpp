// Multi-modular nullspace over Q.
//
// The matrix is scaled row-wise to integers. For each prime p the reduced
// echelon form mod p gives rank_p <= rank_Q and the pivot columns; the pivot
// entries at free columns are combined by CRT and lifted by rational
// reconstruction. The lifted kernel vectors are then checked exactly against
// the integer matrix: n - rank_p independent verified kernel vectors force
// rank_Q = rank_p, so the result is exact and equals the canonical basis.

#include "arrangelab/matrix.hpp"

#include <cstdint>

namespace arrangelab::detail {

namespace {

constexpr std::size_t kMaxPrimes = 64;

const std::vector<std::uint64_t>& primes() {
  static const std::vector<std::uint64_t> ps = [] {
    std::vector<std::uint64_t> out;
    for (std::int64_t c = (std::int64_t{1} << 31) - 1; out.size() < kMaxPrimes; c -= 2)
      if (is_prime(c)) out.push_back(static_cast<std::uint64_t>(c));
    return out;
  }();
  return ps;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t0);
}

using IntRow = std::vector<mpz_class>;

std::vector<IntRow> integer_rows(const Matrix& m) {
  std::vector<IntRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c).rational_part();
      if (q.is_zero()) continue;
      nonzero = true;
      if (!q.is_integer()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());
    }
    if (!nonzero) continue;
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c).rational_part();
      if (q.is_zero()) continue;
      row[c] = q.numerator() * (q.is_integer() ? lcm : mpz_class(lcm / q.denominator()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct ModEchelon {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  // values[i * free_cols.size() + j] = reduced row i at free column j.
  std::vector<std::uint64_t> values;
};

ModEchelon mod_echelon(const std::vector<IntRow>& a, std::size_t cols, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> w(a.size(), std::vector<std::uint64_t>(cols, 0));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(a[r][c]) != 0) w[r][c] = mpz_fdiv_ui(a[r][c].get_mpz_t(), p);

  ModEchelon out;
  std::size_t next = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < cols && next < w.size(); ++col) {
    std::size_t pick = w.size();
    for (std::size_t r = next; r < w.size(); ++r)
      if (w[r][col] != 0) {
        pick = r;
        break;
      }
    if (pick == w.size()) continue;
    std::swap(w[next], w[pick]);
    auto& prow = w[next];
    const std::uint64_t inv = inv_mod(prow[col], p);
    support.clear();
    for (std::size_t c = col; c < cols; ++c)
      if (prow[c] != 0) {
        prow[c] = prow[c] * inv % p;
        support.push_back(c);
      }
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (r == next || w[r][col] == 0) continue;
      auto& row = w[r];
      const std::uint64_t f = p - row[col];
      for (std::size_t c : support) row[c] = (row[c] + f * prow[c]) % p;
    }
    out.pivots.push_back(col);
    ++next;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : out.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.free_cols.push_back(c);
  out.values.reserve(out.pivots.size() * out.free_cols.size());
  for (std::size_t i = 0; i < out.pivots.size(); ++i)
    for (std::size_t f : out.free_cols) out.values.push_back(w[i][f]);
  return out;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& modulus, const mpz_class& bound,
                          mpq_class& out) {
  mpz_class r0 = modulus, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

struct Lifted {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  std::vector<mpq_class> values;  // same layout as ModEchelon::values
};

bool verify(const std::vector<IntRow>& a, const Lifted& l) {
  const std::size_t nf = l.free_cols.size();
  for (std::size_t j = 0; j < nf; ++j) {
    // Integer multiple of the kernel vector: 1 at free column j, -value at pivots.
    mpz_class den = 1;
    for (std::size_t i = 0; i < l.pivots.size(); ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.values[i * nf + j].get_den_mpz_t());
    std::vector<std::pair<std::size_t, mpz_class>> w;
    w.emplace_back(l.free_cols[j], den);
    for (std::size_t i = 0; i < l.pivots.size(); ++i) {
      const mpq_class& v = l.values[i * nf + j];
      if (sgn(v) == 0) continue;
      w.emplace_back(l.pivots[i], -v.get_num() * (den / v.get_den()));
    }
    mpz_class acc;
    for (const IntRow& row : a) {
      acc = 0;
      for (const auto& [c, x] : w)
        if (sgn(row[c]) != 0) mpz_addmul(acc.get_mpz_t(), row[c].get_mpz_t(), x.get_mpz_t());
      if (sgn(acc) != 0) return false;
    }
  }
  return true;
}

std::optional<Lifted> lift(const std::vector<IntRow>& a, std::size_t cols, bool rank_only,
                           std::size_t& rank_out) {
  const auto& ps = primes();
  std::optional<ModEchelon> base;
  std::vector<mpz_class> residues;
  mpz_class modulus;
  for (std::uint64_t p : ps) {
    ModEchelon e = mod_echelon(a, cols, p);
    if (base && e.pivots.size() < base->pivots.size()) continue;  // unlucky prime
    if (!base || e.pivots != base->pivots) {
      base = std::move(e);
      residues.assign(base->values.begin(), base->values.end());
      modulus = static_cast<unsigned long>(p);
    } else {
      mpz_class pz = static_cast<unsigned long>(p);
      mpz_class minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t i = 0; i < residues.size(); ++i) {
        // x = r + M * ((v - r) * M^-1 mod p)
        mpz_class t = (static_cast<unsigned long>(e.values[i]) - residues[i]) * minv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        residues[i] += modulus * t;
      }
      modulus *= pz;
    }
    const std::size_t r = base->pivots.size();
    if (r == cols || (rank_only && r == a.size())) {
      rank_out = r;
      return Lifted{base->pivots, base->free_cols, {}};
    }
    mpz_class bound;
    mpz_class half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Lifted l{base->pivots, base->free_cols, std::vector<mpq_class>(residues.size())};
    bool ok = true;
    for (std::size_t i = 0; i < residues.size() && ok; ++i)
      ok = rational_reconstruct(residues[i], modulus, bound, l.values[i]);
    if (ok && verify(a, l)) {
      rank_out = r;
      return l;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vector>> modular_nullspace(const Matrix& m) {
  const Field& f = m.field();
  auto a = integer_rows(m);
  std::size_t r = 0;
  auto l = lift(a, m.cols(), false, r);
  if (!l) return std::nullopt;
  std::vector<Vector> basis;
  const std::size_t nf = l->free_cols.size();
  for (std::size_t j = 0; j < nf; ++j) {
    Vector v(m.cols(), f.zero());
    v[l->free_cols[j]] = f.one();
    for (std::size_t i = 0; i < l->pivots.size(); ++i)
      v[l->pivots[i]] = f.from_rational(-l->values[i * nf + j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::size_t> modular_rank(const Matrix& m) {
  auto a = integer_rows(m);
  std::size_t r = 0;
  if (!lift(a, m.cols(), true, r)) return std::nullopt;
  return r;
}

}  // namespace arrangelab::detail
