#pragma once

#include "arrangelab/field.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrangelab {

using Triple = std::array<Scalar, 3>;

namespace detail {
/// Scales a nonzero triple so that its first nonzero entry is 1.
Triple normalize(Triple t);
int compare(const Triple& a, const Triple& b);
std::size_t hash(const Triple& t);
}  // namespace detail

/// The linear form a*x + b*y + c*z of a line in P^2, normalized so the first
/// nonzero coefficient is 1.
class Line {
 public:
  static Line from_coeffs(const Triple& coeffs);

  const Triple& coeffs() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const Field& field() const { return c_[0].field(); }

  /// Linear form rendering such as "x-2*y+z".
  std::string form() const;

  friend bool operator==(const Line& a, const Line& b) { return a.c_ == b.c_; }
  friend bool operator<(const Line& a, const Line& b) { return detail::compare(a.c_, b.c_) < 0; }

 private:
  explicit Line(Triple c) : c_(std::move(c)) {}
  Triple c_;
};

/// A point (x:y:z) of P^2, normalized like Line.
class ProjPoint {
 public:
  static ProjPoint from_coords(const Triple& coords);

  const Triple& coords() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const Field& field() const { return c_[0].field(); }

  /// "(x:y:z)" in the scalar grammar.
  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return detail::compare(a.c_, b.c_) < 0;
  }

 private:
  explicit ProjPoint(Triple c) : c_(std::move(c)) {}
  Triple c_;
};

struct ProjPointHash {
  std::size_t operator()(const ProjPoint& p) const { return detail::hash(p.coords()); }
};
struct LineHash {
  std::size_t operator()(const Line& l) const { return detail::hash(l.coeffs()); }
};

Line line_from_coeffs(const Field& field, const Triple& coeffs);
ProjPoint meet(const Line& l1, const Line& l2);
/// The line through two distinct points.
Line join(const ProjPoint& p, const ProjPoint& q);
bool incident(const ProjPoint& p, const Line& l);

/// A point of L2 with the (sorted) indices of the lines through it.
struct LatticePoint {
  ProjPoint point;
  std::vector<std::size_t> lines;
  int mu() const { return static_cast<int>(lines.size()) - 1; }
};

/// Rank-2 part of the intersection lattice: all points on at least two lines,
/// in canonical point order.
class LatticeL2 {
 public:
  explicit LatticeL2(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const LatticePoint* find(const ProjPoint& p) const;

 private:
  std::vector<LatticePoint> points_;
  std::unordered_map<ProjPoint, std::size_t, ProjPointHash> index_;
};

class DuplicateLineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered set of distinct lines over one field. Immutable; copies share
/// state, and the lattice is computed once on first use.
class Arrangement {
 public:
  Arrangement(Field field, std::vector<Line> lines);
  static Arrangement from_triples(const Field& field, const std::vector<Triple>& triples);

  const Field& field() const;
  std::size_t size() const;
  const std::vector<Line>& lines() const;
  const Line& line(std::size_t i) const { return lines().at(i); }
  std::optional<std::size_t> index_of(const Line& l) const;

  const LatticeL2& lattice() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

LatticeL2 intersection_lattice(const Arrangement& a);
bool is_essential(const Arrangement& a);
bool is_pencil(const Arrangement& a);

}  // namespace arrangelab
