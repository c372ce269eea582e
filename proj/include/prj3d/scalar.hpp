#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "error.hpp"

namespace prj3d {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int igcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int ilcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "n" or "n/d" (optional sign, decimal).
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    Int v;
    if (t.empty() || v.set_str(t, 10) != 0) throw Error(Errc::ParseError, "bad rational '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  return make_rat(num, den);
}

inline bool is_perfect_square(const Int& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

inline Int isqrt(const Int& x) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

/// Writes x = s^2 * d with d free of squares of primes below the trial bound and
/// d not a perfect square unless d == 1.
inline std::pair<Int, Int> square_decompose(const Int& x) {
  if (x <= 0) throw Error(Errc::NegativeRadicand, "square_decompose of nonpositive value");
  Int s = 1, d = x;
  if (is_perfect_square(d)) return {isqrt(d), Int(1)};
  constexpr unsigned long kTrialBound = 20000;
  for (unsigned long p = 2; p < kTrialBound; p += (p == 2 ? 1 : 2)) {
    Int pp = Int(p) * p;
    if (pp > d) break;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p * p)) {
      d /= pp;
      s *= p;
    }
  }
  if (is_perfect_square(d)) {
    s *= isqrt(d);
    d = 1;
  }
  return {s, d};
}

/// Element a + b*sqrt(d) of a real quadratic field, or a rational (b == 0, d == 1).
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(1) {}
  Scalar(long v) : a_(v), b_(0), d_(1) {}  // NOLINT
  Scalar(const Int& v) : a_(v), b_(0), d_(1) {}  // NOLINT
  Scalar(const Rat& v) : a_(v), b_(0), d_(1) {}  // NOLINT
  Scalar(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b), d_(d) {
    if (d_ <= 0) throw Error(Errc::NegativeRadicand, "extension radicand must be positive");
    if (b_ != 0 && is_perfect_square(d_)) {
      a_ += b_ * Rat(isqrt(d_));
      b_ = 0;
    }
    normalize();
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  /// Radicand of the ambient extension; 1 for rationals.
  const Int& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  const Rat& to_rat() const {
    if (!is_rational()) throw Error(Errc::MixedExtension, "irrational scalar used as rational");
    return a_;
  }

  Scalar conj() const { return b_ == 0 ? *this : Scalar(a_, -b_, d_); }
  /// a^2 - b^2 d.
  Rat norm() const { return a_ * a_ - b_ * b_ * d_; }

  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    int c = cmp(Rat(a_ * a_), Rat(b_ * b_ * d_));
    return c > 0 ? sa : (c < 0 ? sb : 0);
  }

  Scalar operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  Scalar& operator+=(const Scalar& y) {
    if (y.b_ == 0) {
      a_ += y.a_;
      return *this;
    }
    Rat yb = align(y);
    a_ += y.a_;
    b_ += yb;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& y) { return *this += -y; }

  Scalar& operator*=(const Scalar& y) {
    if (y.b_ == 0) {
      a_ *= y.a_;
      b_ *= y.a_;
      normalize();
      return *this;
    }
    if (b_ == 0) {
      Rat s = a_;
      *this = y;
      a_ *= s;
      b_ *= s;
      normalize();
      return *this;
    }
    Rat yb = align(y);
    Rat na = a_ * y.a_ + b_ * yb * d_;
    Rat nb = a_ * yb + b_ * y.a_;
    a_ = na;
    b_ = nb;
    normalize();
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (b_ == 0) return Scalar(Rat(1) / a_);
    Rat n = norm();
    return Scalar(a_ / n, -b_ / n, d_);
  }

  Scalar& operator/=(const Scalar& y) {
    if (y.b_ == 0) {
      if (y.a_ == 0) throw Error(Errc::DivisionByZero, "division by zero");
      a_ /= y.a_;
      b_ /= y.a_;
      return *this;
    }
    return *this *= y.inverse();
  }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
    if (x.b_ == 0 || y.b_ == 0) return false;
    return (x - y).is_zero();
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// True when both values can be combined without MixedExtension.
  bool compatible(const Scalar& y) const {
    if (b_ == 0 || y.b_ == 0) return true;
    return d_ == y.d_ || is_perfect_square(d_ * y.d_);
  }

  std::string str() const {
    if (b_ == 0) return to_string(a_);
    std::string s = a_ == 0 ? "" : to_string(a_) + (b_ > 0 ? "+" : "");
    return s + to_string(b_) + "*sqrt(" + to_string(d_) + ")";
  }

 private:
  // Coefficient of sqrt(d_) that represents y's irrational part.
  Rat align(const Scalar& y) {
    if (b_ == 0) {
      d_ = y.d_;
      return y.b_;
    }
    if (y.d_ == d_) return y.b_;
    Int prod = d_ * y.d_;
    if (!is_perfect_square(prod))
      throw Error(Errc::MixedExtension, "sqrt(" + to_string(d_) + ") vs sqrt(" + to_string(y.d_) + ")");
    // sqrt(d2) = sqrt(d1 d2) / d1 * sqrt(d1)
    return y.b_ * Rat(isqrt(prod)) / Rat(d_);
  }

  void normalize() {
    if (b_ == 0) d_ = 1;
  }

  Rat a_, b_;
  Int d_;
};

/// Exact square root of a nonnegative rational: rational when possible,
/// otherwise r*sqrt(d) with d > 1 not a perfect square.
inline Scalar try_sqrt(const Rat& x) {
  if (x < 0) throw Error(Errc::NegativeRadicand, "sqrt of " + to_string(x));
  if (x == 0) return Scalar();
  // sqrt(n/m) = sqrt(n m) / m
  Int nm = x.get_num() * x.get_den();
  auto [s, d] = square_decompose(nm);
  Rat r = make_rat(s, x.get_den());
  if (d == 1) return Scalar(r);
  return Scalar(Rat(0), r, d);
}

inline Scalar try_sqrt(const Int& x) { return try_sqrt(Rat(x)); }

/// Common radicand of two compatible values (1 when both rational).
inline Int common_radicand(const Scalar& x, const Scalar& y) {
  if (!x.compatible(y)) throw Error(Errc::MixedExtension, "incompatible extensions");
  return x.is_rational() ? y.d() : x.d();
}

}  // namespace prj3d
