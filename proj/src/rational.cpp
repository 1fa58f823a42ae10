#include "arrangelab/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace arrangelab {

namespace {

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(std::gcd(uabs(a), uabs(b)));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (n == INT64_MIN || d == INT64_MIN) {
    mpq_class q(static_cast<long>(n), static_cast<long>(d));
    q.canonicalize();
    assign_big(std::move(q));
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = gcd64(n, d);
  num_ = g > 1 ? n / g : n;
  den_ = g > 1 ? d / g : d;
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    if (big_)
      *big_ = *o.big_;
    else
      big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_big(mpq_class q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
        num_ = s;
        return *this;
      }
    } else {
      std::int64_t g = gcd64(den_, o.den_);
      std::int64_t b1 = den_ / g, d1 = o.den_ / g;
      std::int64_t t1, t2, t, den;
      if (!__builtin_mul_overflow(num_, d1, &t1) && !__builtin_mul_overflow(o.num_, b1, &t2) &&
          !__builtin_add_overflow(t1, t2, &t) && t != INT64_MIN) {
        std::int64_t g2 = gcd64(t, g);
        if (!__builtin_mul_overflow(b1, o.den_ / g2, &den)) {
          num_ = t / g2;
          den_ = den;
          if (num_ == 0) den_ = 1;
          return *this;
        }
      }
    }
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, o.den_), g2 = gcd64(o.num_, den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
        !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) && n != INT64_MIN) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inv(); }

void Rational::sub_mul(const Rational& f, const Rational& x) {
  if (f.is_zero() || x.is_zero()) return;
  Rational t = f;
  t *= x;
  *this -= t;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

int compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return (c > 0) - (c < 0);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 31 + std::hash<std::int64_t>{}(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace arrangelab
