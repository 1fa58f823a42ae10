#include "arrangelab/field.hpp"

#include <cctype>
#include <ostream>

namespace arrangelab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t q = 3; q <= n / q; q += 2)
    if (n % q == 0) return false;
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : n;
  for (std::uint64_t q = 2; q <= m / q; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return false;
    }
  }
  return true;
}

Field::Field(FieldDescriptor desc) : desc_(desc) {
  switch (desc.kind) {
    case FieldKind::rational:
      desc_.param = 0;
      break;
    case FieldKind::quadratic:
      if (desc.param == 0 || desc.param == 1 || !is_squarefree(desc.param))
        throw FieldError("quadratic field needs a squarefree d other than 0 and 1, got " +
                         std::to_string(desc.param));
      break;
    case FieldKind::prime:
      if (!is_prime(desc.param))
        throw FieldError("composite modulus " + std::to_string(desc.param));
      if (desc.param >= (std::int64_t{1} << 31))
        throw FieldError("prime modulus too large: " + std::to_string(desc.param));
      break;
  }
}

Field make_field(FieldDescriptor desc) { return Field(desc); }

Scalar Field::zero() const {
  Scalar s;
  s.field_ = *this;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s = zero();
  if (desc_.kind == FieldKind::prime) {
    std::int64_t r = v % desc_.param;
    if (r < 0) r += desc_.param;
    s.r_ = r;
  } else {
    s.a_ = Rational(v);
  }
  return s;
}

Scalar Field::from_rational(const Rational& q) const {
  if (desc_.kind != FieldKind::prime) {
    Scalar s = zero();
    s.a_ = q;
    return s;
  }
  return from_rational(q.to_mpq());
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (desc_.kind != FieldKind::prime) {
    Scalar s = zero();
    s.a_ = Rational(q);
    return s;
  }
  Scalar num = zero();
  Scalar den = zero();
  mpz_class p = static_cast<long>(desc_.param);
  mpz_class rn = q.get_num() % p;
  mpz_class rd = q.get_den() % p;
  if (rn < 0) rn += p;
  num.r_ = rn.get_si();
  den.r_ = rd.get_si();
  if (den.is_zero()) throw ParseError("denominator divisible by the characteristic");
  return num / den;
}

Scalar Field::from_parts(const Rational& a, const Rational& b) const {
  if (desc_.kind != FieldKind::quadratic)
    throw FieldError("from_parts needs a quadratic field");
  Scalar s = zero();
  s.a_ = a;
  s.b_ = b;
  return s;
}

Scalar Field::sqrt_d() const { return from_parts(0, 1); }

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

bool parse_integer(std::string_view t, mpz_class& out) {
  if (t.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (t[0] == '+' || t[0] == '-') {
    neg = t[0] == '-';
    i = 1;
  }
  if (i == t.size()) return false;
  for (std::size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
  out.set_str(std::string(t.substr(i)), 10);
  if (neg) out = -out;
  return true;
}

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  text = trim(text);
  mpz_class num, den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok) throw ParseError("malformed scalar '" + std::string(whole) + "'");
  if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
  std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  switch (desc_.kind) {
    case FieldKind::rational:
      return from_rational(parse_rational(text, whole));
    case FieldKind::prime: {
      mpz_class v;
      if (!parse_integer(text, v)) throw ParseError("malformed residue '" + std::string(whole) + "'");
      mpz_class p = static_cast<long>(desc_.param);
      v %= p;
      if (v < 0) v += p;
      return from_int(v.get_si());
    }
    case FieldKind::quadratic:
      break;
  }
  if (text.back() != 'w') return from_rational(parse_rational(text, whole));
  std::string_view head = text.substr(0, text.size() - 1);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  // Split "a+b" / "a-b" at the last sign that is not part of a fraction or a
  // doubled sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    char c = head[i];
    char prev = head[i - 1];
    if ((c == '+' || c == '-') && prev != '/' && prev != '+' && prev != '-') {
      split = i;
      break;
    }
  }
  mpq_class a = 0;
  std::string_view coeff = head;
  bool negate = false;
  if (split != std::string_view::npos) {
    a = parse_rational(head.substr(0, split), whole);
    negate = head[split] == '-';
    coeff = head.substr(split + 1);
  }
  coeff = trim(coeff);
  mpq_class b;
  if (coeff.empty() || coeff == "+")
    b = 1;
  else if (coeff == "-")
    b = -1;
  else
    b = parse_rational(coeff, whole);
  if (negate) b = -b;
  return from_parts(Rational(a), Rational(b));
}

std::string Field::render(const Scalar& s) const {
  switch (desc_.kind) {
    case FieldKind::rational:
      return s.a_.str();
    case FieldKind::prime:
      return std::to_string(s.r_);
    case FieldKind::quadratic:
      break;
  }
  if (s.b_.is_zero()) return s.a_.str();
  std::string out = s.a_.str();
  if (s.b_.sign() < 0)
    out += "-" + (-s.b_).str();
  else
    out += "+" + s.b_.str();
  return out + "*w";
}

std::string Field::name() const {
  switch (desc_.kind) {
    case FieldKind::rational:
      return "QQ";
    case FieldKind::quadratic:
      return "QQ(sqrt(" + std::to_string(desc_.param) + "))";
    case FieldKind::prime:
      return "GF(" + std::to_string(desc_.param) + ")";
  }
  return "?";
}

// --- Scalar ---------------------------------------------------------------

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldError("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
  if (field_.kind() == FieldKind::prime) return r_ == 0;
  return a_.is_zero() && b_.is_zero();
}

bool Scalar::is_one() const {
  if (field_.kind() == FieldKind::prime) return r_ == 1;
  return a_.is_one() && b_.is_zero();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind() == FieldKind::prime) {
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  } else {
    s.a_ = -a_;
    s.b_ = -b_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind() == FieldKind::prime) {
    r_ += o.r_;
    if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
  } else {
    a_ += o.a_;
    if (field_.kind() == FieldKind::quadratic) b_ += o.b_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind() == FieldKind::prime) {
    r_ -= o.r_;
    if (r_ < 0) r_ += field_.characteristic();
  } else {
    a_ -= o.a_;
    if (field_.kind() == FieldKind::quadratic) b_ -= o.b_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  switch (field_.kind()) {
    case FieldKind::prime:
      r_ = static_cast<std::int64_t>((static_cast<__int128>(r_) * o.r_) % field_.characteristic());
      break;
    case FieldKind::rational:
      a_ *= o.a_;
      break;
    case FieldKind::quadratic: {
      Rational a = a_ * o.a_ + b_ * o.b_ * Rational(field_.descriptor().param);
      Rational b = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(a);
      b_ = std::move(b);
      break;
    }
  }
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  switch (field_.kind()) {
    case FieldKind::prime: {
      // Fermat inverse.
      std::int64_t p = field_.characteristic();
      std::int64_t base = r_, e = p - 2, acc = 1;
      while (e > 0) {
        if (e & 1) acc = static_cast<std::int64_t>((static_cast<__int128>(acc) * base) % p);
        base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
        e >>= 1;
      }
      s.r_ = acc;
      break;
    }
    case FieldKind::rational:
      s.a_ = a_.inv();
      break;
    case FieldKind::quadratic: {
      Rational norm = a_ * a_ - b_ * b_ * Rational(field_.descriptor().param);
      s.a_ = a_ / norm;
      s.b_ = -b_ / norm;
      break;
    }
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind() == FieldKind::rational) {
    if (o.a_.is_zero()) throw std::domain_error("division by zero");
    a_ /= o.a_;
    return *this;
  }
  return *this *= o.inv();
}

void Scalar::sub_mul(const Scalar& f, const Scalar& x) {
  switch (field_.kind()) {
    case FieldKind::rational:
      a_.sub_mul(f.a_, x.a_);
      return;
    case FieldKind::prime: {
      std::int64_t p = field_.characteristic();
      std::int64_t prod = static_cast<std::int64_t>((static_cast<__int128>(f.r_) * x.r_) % p);
      r_ -= prod;
      if (r_ < 0) r_ += p;
      return;
    }
    case FieldKind::quadratic:
      *this -= f * x;
      return;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.kind() == FieldKind::prime) return a.r_ == b.r_;
  return a.a_ == b.a_ && a.b_ == b.b_;
}

int canonical_compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.kind() == FieldKind::prime) return a.r_ < b.r_ ? -1 : (a.r_ > b.r_ ? 1 : 0);
  int c = compare(a.a_, b.a_);
  return c != 0 ? c : compare(a.b_, b.b_);
}

std::size_t Scalar::hash() const {
  if (field_.kind() == FieldKind::prime) return std::hash<std::int64_t>{}(r_);
  return a_.hash() * 1000003 + b_.hash();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace arrangelab
