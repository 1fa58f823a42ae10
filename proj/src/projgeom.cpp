#include "arrangelab/projgeom.hpp"

#include "arrangelab/matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace arrangelab {

namespace detail {

Triple normalize(Triple t) {
  std::size_t lead = 0;
  while (lead < 3 && t[lead].is_zero()) ++lead;
  if (lead == 3) throw std::invalid_argument("zero triple does not define a projective object");
  if (!t[lead].is_one()) {
    Scalar inv = t[lead].inv();
    for (std::size_t i = lead; i < 3; ++i) t[i] *= inv;
  }
  return t;
}

int compare(const Triple& a, const Triple& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    int c = canonical_compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t hash(const Triple& t) {
  std::size_t h = 0;
  for (const Scalar& s : t) h = h * 1000003 ^ s.hash();
  return h;
}

}  // namespace detail

namespace {

void check_field(const Triple& t) {
  if (!(t[0].field() == t[1].field()) || !(t[0].field() == t[2].field()))
    throw FieldError("triple mixes fields");
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

Line Line::from_coeffs(const Triple& coeffs) {
  check_field(coeffs);
  return Line(detail::normalize(coeffs));
}

std::string Line::form() const {
  static const char* vars[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string s = c.str();
    bool compound = s.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (c.is_one()) {
      term = vars[i];
    } else if ((-c).is_one()) {
      term = std::string("-") + vars[i];
    } else if (compound) {
      term = "(" + s + ")*" + vars[i];
    } else {
      term = s + "*" + vars[i];
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

ProjPoint ProjPoint::from_coords(const Triple& coords) {
  check_field(coords);
  return ProjPoint(detail::normalize(coords));
}

std::string ProjPoint::str() const {
  return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
}

Line line_from_coeffs(const Field& field, const Triple& coeffs) {
  for (const Scalar& s : coeffs)
    if (!(s.field() == field)) throw FieldError("coefficient outside " + field.name());
  return Line::from_coeffs(coeffs);
}

ProjPoint meet(const Line& l1, const Line& l2) {
  if (l1 == l2) throw std::invalid_argument("meet of identical lines " + l1.form());
  return ProjPoint::from_coords(cross(l1.coeffs(), l2.coeffs()));
}

Line join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw std::invalid_argument("join of identical points " + p.str());
  return Line::from_coeffs(cross(p.coords(), q.coords()));
}

bool incident(const ProjPoint& p, const Line& l) {
  return dot(p.coords(), l.coeffs()).is_zero();
}

LatticeL2::LatticeL2(std::vector<LatticePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.point < b.point; });
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i].point, i);
}

const LatticePoint* LatticeL2::find(const ProjPoint& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? nullptr : &points_[it->second];
}

struct Arrangement::Impl {
  Field field;
  std::vector<Line> lines;
  std::unordered_map<Line, std::size_t, LineHash> index;
  mutable std::once_flag lattice_once;
  mutable std::optional<LatticeL2> lattice;
};

Arrangement::Arrangement(Field field, std::vector<Line> lines) {
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!(lines[i].field() == field))
      throw FieldError("line " + std::to_string(i) + " is not over " + field.name());
    if (!impl->index.emplace(lines[i], i).second)
      throw DuplicateLineError("duplicate line " + lines[i].form() + " at index " +
                               std::to_string(i));
  }
  impl->lines = std::move(lines);
  impl_ = std::move(impl);
}

Arrangement Arrangement::from_triples(const Field& field, const std::vector<Triple>& triples) {
  std::vector<Line> lines;
  lines.reserve(triples.size());
  for (const Triple& t : triples) lines.push_back(line_from_coeffs(field, t));
  return Arrangement(field, std::move(lines));
}

const Field& Arrangement::field() const { return impl_->field; }
std::size_t Arrangement::size() const { return impl_->lines.size(); }
const std::vector<Line>& Arrangement::lines() const { return impl_->lines; }

std::optional<std::size_t> Arrangement::index_of(const Line& l) const {
  auto it = impl_->index.find(l);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

const LatticeL2& Arrangement::lattice() const {
  std::call_once(impl_->lattice_once, [this] { impl_->lattice.emplace(intersection_lattice(*this)); });
  return *impl_->lattice;
}

LatticeL2 intersection_lattice(const Arrangement& a) {
  if (a.size() < 2) throw std::invalid_argument("intersection lattice needs at least 2 lines");
  std::unordered_map<ProjPoint, std::vector<std::size_t>, ProjPointHash> incidence;
  const auto& lines = a.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& on = incidence[meet(lines[i], lines[j])];
      for (std::size_t k : {i, j})
        if (std::find(on.begin(), on.end(), k) == on.end()) on.push_back(k);
    }
  }
  std::vector<LatticePoint> points;
  points.reserve(incidence.size());
  for (auto& [p, on] : incidence) {
    std::sort(on.begin(), on.end());
    points.push_back({p, std::move(on)});
  }
  return LatticeL2(std::move(points));
}

bool is_essential(const Arrangement& a) {
  Matrix m(a.field(), 0, 3);
  for (const Line& l : a.lines()) m.append_row({l[0], l[1], l[2]});
  return rank(m) == 3;
}

bool is_pencil(const Arrangement& a) {
  if (a.size() < 2) throw std::invalid_argument("is_pencil needs at least 2 lines");
  const auto& lat = a.lattice();
  return lat.size() == 1 && lat.points()[0].lines.size() == a.size();
}

}  // namespace arrangelab
