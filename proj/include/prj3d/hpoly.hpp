#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "scalar.hpp"
#include "upoly.hpp"

namespace prj3d {

inline bool is_zero(const Int& x) { return x == 0; }
inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

namespace detail {

template <class T>
inline void addmul(T& acc, const T& x, const T& y) {
  if constexpr (std::is_same_v<T, Int>)
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  else
    acc += x * y;
}

template <class T>
inline void submul(T& acc, const T& x, const T& y) {
  if constexpr (std::is_same_v<T, Int>)
    mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  else
    acc -= x * y;
}

/// q = x / y when exact in T (always for fields).
template <class T>
inline bool div_coeff(const T& x, const T& y, T& q) {
  if constexpr (std::is_same_v<T, Int>) {
    if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return true;
  } else {
    q = x / y;
    return true;
  }
}

template <class T>
inline T falling(int top, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= (top - i);
  return T(r);
}

}  // namespace detail

/// Homogeneous polynomial sum_j c[j] t0^(m-j) t1^j. An empty coefficient
/// vector is the zero polynomial, whose degree is reported as -1.
template <class T>
class HPoly {
 public:
  HPoly() = default;
  HPoly(int degree, std::vector<T> coeffs) : deg_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || static_cast<int>(c_.size()) != degree + 1)
      throw Error(Errc::InvalidArgument, "HPoly needs degree+1 coefficients");
    canonicalize();
  }

  static HPoly constant(const T& c) { return HPoly(0, {c}); }
  /// c0 t0 + c1 t1.
  static HPoly linear(const T& c0, const T& c1) { return HPoly(1, {c0, c1}); }
  static HPoly monomial(int m, int j, const T& c) {
    std::vector<T> v(m + 1, T(0));
    v[j] = c;
    return HPoly(m, std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : deg_; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](int j) const { return c_[j]; }

  HPoly operator-() const {
    HPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  HPoly& operator+=(const HPoly& y) {
    if (y.is_zero()) return *this;
    if (is_zero()) return *this = y;
    if (deg_ != y.deg_) throw Error(Errc::DegreeMismatch, "adding degrees " + std::to_string(deg_) + " and " + std::to_string(y.deg_));
    for (int j = 0; j <= deg_; ++j) c_[j] += y.c_[j];
    canonicalize();
    return *this;
  }
  HPoly& operator-=(const HPoly& y) { return *this += -y; }
  friend HPoly operator+(HPoly x, const HPoly& y) { return x += y; }
  friend HPoly operator-(HPoly x, const HPoly& y) { return x -= y; }

  friend HPoly operator*(const HPoly& x, const HPoly& y) {
    if (x.is_zero() || y.is_zero()) return HPoly();
    std::vector<T> r(x.deg_ + y.deg_ + 1, T(0));
    for (int i = 0; i <= x.deg_; ++i) {
      if (prj3d::is_zero(x.c_[i])) continue;
      for (int j = 0; j <= y.deg_; ++j) detail::addmul(r[i + j], x.c_[i], y.c_[j]);
    }
    return HPoly(x.deg_ + y.deg_, std::move(r));
  }
  HPoly& operator*=(const HPoly& y) { return *this = *this * y; }

  friend HPoly operator*(const T& s, HPoly x) {
    if (prj3d::is_zero(s)) return HPoly();
    for (auto& v : x.c_) v *= s;
    return x;
  }

  friend bool operator==(const HPoly& x, const HPoly& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return x.deg_ == y.deg_ && x.c_ == y.c_;
  }
  friend bool operator!=(const HPoly& x, const HPoly& y) { return !(x == y); }

  /// k-th partial derivative in t0 (var 0) or t1 (var 1).
  HPoly diff(int var, int k = 1) const {
    if (k == 0 || is_zero()) return *this;
    if (k > deg_) return HPoly();
    int m = deg_ - k;
    std::vector<T> r(m + 1, T(0));
    for (int j = 0; j <= m; ++j) {
      if (var == 0)
        r[j] = c_[j] * detail::falling<T>(deg_ - j, k);
      else
        r[j] = c_[j + k] * detail::falling<T>(j + k, k);
    }
    return HPoly(m, std::move(r));
  }

  /// Value at (x0, x1) in any ring U containing T.
  template <class U>
  U eval(const U& x0, const U& x1) const {
    if (is_zero()) return U(0);
    std::vector<U> p0(deg_ + 1), p1(deg_ + 1);
    p0[0] = U(1);
    p1[0] = U(1);
    for (int i = 1; i <= deg_; ++i) {
      p0[i] = p0[i - 1] * x0;
      p1[i] = p1[i - 1] * x1;
    }
    U r(0);
    for (int j = 0; j <= deg_; ++j) {
      if (prj3d::is_zero(c_[j])) continue;
      r += U(c_[j]) * p0[deg_ - j] * p1[j];
    }
    return r;
  }

  template <class U>
  HPoly<U> cast() const {
    if (is_zero()) return HPoly<U>();
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(U(x));
    return HPoly<U>(deg_, std::move(v));
  }

  /// Multiplies by t0^e0 t1^e1.
  HPoly shift(int e0, int e1) const {
    if (is_zero()) return *this;
    std::vector<T> v(deg_ + e0 + e1 + 1, T(0));
    for (int j = 0; j <= deg_; ++j) v[j + e1] = c_[j];
    return HPoly(deg_ + e0 + e1, std::move(v));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int j = 0; j <= deg_; ++j) {
      if (prj3d::is_zero(c_[j])) continue;
      std::string cs;
      if constexpr (std::is_same_v<T, Scalar>)
        cs = c_[j].str();
      else
        cs = to_string(c_[j]);
      if (!s.empty()) s += " + ";
      s += "(" + cs + ")";
      if (deg_ - j) s += "*t0^" + std::to_string(deg_ - j);
      if (j) s += "*t1^" + std::to_string(j);
    }
    return s;
  }

 private:
  void canonicalize() {
    for (const auto& x : c_)
      if (!prj3d::is_zero(x)) return;
    c_.clear();
  }

  int deg_ = -1;
  std::vector<T> c_;
};

using IPoly = HPoly<Int>;
using QPoly = HPoly<Rat>;
using SPoly = HPoly<Scalar>;

/// Exponents (e0, e1) of the largest monomial t0^e0 t1^e1 dividing a.
template <class T>
std::pair<int, int> monomial_part(const HPoly<T>& a) {
  int m = a.degree(), lo = 0, hi = 0;
  while (is_zero(a[lo])) ++lo;
  while (is_zero(a[m - hi])) ++hi;
  return {hi, lo};
}

/// Primitive integer multiple with positive first nonzero coefficient.
inline IPoly normalize(const IPoly& a) {
  if (a.is_zero()) return a;
  Int g = upoly::content(a.coeffs());
  for (const auto& c : a.coeffs())
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  std::vector<Int> v = a.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IPoly(a.degree(), std::move(v));
}

/// Integer multiple of a rational polynomial (common denominator cleared).
inline IPoly clear_denominators(const QPoly& a) {
  if (a.is_zero()) return IPoly();
  Int l = 1;
  for (const auto& c : a.coeffs()) l = ilcm(l, c.get_den());
  std::vector<Int> v;
  for (const auto& c : a.coeffs()) v.push_back(Int(c * l));
  return IPoly(a.degree(), std::move(v));
}

inline QPoly normalize(const QPoly& a) { return normalize(clear_denominators(a)).cast<Rat>(); }

namespace detail {

template <class Gcd>
IPoly hp_gcd_with(const IPoly& a, const IPoly& b, Gcd ugcd) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "hp_gcd of two zero polynomials");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  auto [a0, a1] = monomial_part(a);
  auto [b0, b1] = monomial_part(b);
  auto dehom = [](const IPoly& p, int e0, int e1) {
    return upoly::ZPoly(p.coeffs().begin() + e1, p.coeffs().end() - e0);
  };
  upoly::ZPoly g = ugcd(dehom(a, a0, a1), dehom(b, b0, b1));
  IPoly h(upoly::deg(g), g);
  return normalize(h.shift(std::min(a0, b0), std::min(a1, b1)));
}

}  // namespace detail

/// Normalized gcd of homogeneous polynomials (modular univariate engine).
inline IPoly hp_gcd(const IPoly& a, const IPoly& b) {
  return detail::hp_gcd_with(a, b, [](auto x, auto y) { return upoly::gcd(std::move(x), std::move(y)); });
}

/// Same contract, via the primitive remainder sequence.
inline IPoly hp_gcd_prs(const IPoly& a, const IPoly& b) {
  return detail::hp_gcd_with(a, b, [](auto x, auto y) { return upoly::gcd_prs(std::move(x), std::move(y)); });
}

inline QPoly hp_gcd(const QPoly& a, const QPoly& b) {
  return hp_gcd(clear_denominators(a), clear_denominators(b)).cast<Rat>();
}

/// q with a = b*q. Over Int the quotient must be integral.
template <class T>
HPoly<T> hp_div_exact(const HPoly<T>& a, const HPoly<T>& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "hp_div_exact by zero polynomial");
  if (a.is_zero()) return a;
  int mq = a.degree() - b.degree();
  if (mq < 0) throw Error(Errc::NotDivisible, "divisor degree exceeds dividend degree");
  int j0 = 0;
  while (is_zero(b[j0])) ++j0;
  std::vector<T> r = a.coeffs(), q(mq + 1, T(0));
  for (int i = 0; i <= mq; ++i) {
    const T& top = r[i + j0];
    if (is_zero(top)) continue;
    if (!detail::div_coeff(top, b[j0], q[i])) throw Error(Errc::NotDivisible, "non-integral quotient");
    T qi = q[i];
    for (int j = j0; j <= b.degree(); ++j) detail::submul(r[i + j], qi, b[j]);
  }
  for (const auto& x : r)
    if (!is_zero(x)) throw Error(Errc::NotDivisible, "nonzero remainder");
  return HPoly<T>(mq, std::move(q));
}

template <class T>
bool hp_divides(const HPoly<T>& b, const HPoly<T>& a) {
  try {
    hp_div_exact(a, b);
    return true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    return false;
  }
}

/// h(a t0 + b t1, c t0 + d t1).
template <class T>
HPoly<T> hp_compose(const HPoly<T>& h, const std::type_identity_t<T>& a, const std::type_identity_t<T>& b,
                    const std::type_identity_t<T>& c, const std::type_identity_t<T>& d) {
  if (h.is_zero()) return h;
  int m = h.degree();
  HPoly<T> L1 = HPoly<T>::linear(a, b), L2 = HPoly<T>::linear(c, d);
  std::vector<HPoly<T>> P1(m + 1), P2(m + 1);
  P1[0] = P2[0] = HPoly<T>::constant(T(1));
  for (int i = 1; i <= m; ++i) {
    P1[i] = P1[i - 1] * L1;
    P2[i] = P2[i - 1] * L2;
  }
  HPoly<T> r;
  for (int j = 0; j <= m; ++j) {
    if (is_zero(h[j])) continue;
    HPoly<T> term = h[j] * (P1[m - j] * P2[j]);
    if (term.is_zero()) continue;
    r += term;
  }
  if (r.is_zero()) return r;
  return r;
}

/// Reduced quotient of homogeneous polynomials over Q. The denominator is kept
/// primitive integral with positive first nonzero coefficient.
struct RatFn {
  QPoly num, den;

  RatFn() : num(), den(QPoly::constant(Rat(1))) {}

  static RatFn make(const IPoly& n, const IPoly& d) {
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "RatFn with zero denominator");
    RatFn r;
    if (n.is_zero()) {
      r.num = QPoly();
      r.den = QPoly::constant(Rat(1));
      return r;
    }
    IPoly g = hp_gcd(n, d);
    IPoly nn = hp_div_exact(n, g), dd = hp_div_exact(d, g);
    IPoly dn = normalize(dd);
    // dd = lambda * dn; num / dd = (num / lambda) / dn
    Rat lambda;
    for (int j = 0; j <= dd.degree(); ++j)
      if (dd[j] != 0) {
        lambda = Rat(dd[j]) / Rat(dn[j]);
        break;
      }
    r.num = (Rat(1) / lambda) * nn.cast<Rat>();
    r.den = dn.cast<Rat>();
    return r;
  }

  static RatFn make(const QPoly& n, const QPoly& d) {
    // common scaling of numerator and denominator leaves the quotient unchanged
    Int l = 1;
    for (const auto& c : n.coeffs()) l = ilcm(l, c.get_den());
    for (const auto& c : d.coeffs()) l = ilcm(l, c.get_den());
    auto to_int = [&](const QPoly& p) {
      if (p.is_zero()) return IPoly();
      std::vector<Int> v;
      for (const auto& c : p.coeffs()) v.push_back(Int(c * l));
      return IPoly(p.degree(), std::move(v));
    };
    return make(to_int(n), to_int(d));
  }

  bool is_zero() const { return num.is_zero(); }

  /// Integer numerator/denominator pair with the same quotient.
  std::pair<IPoly, IPoly> integral() const {
    Int l = 1;
    for (const auto& c : num.coeffs()) l = ilcm(l, c.get_den());
    auto to_int = [&](const QPoly& p) {
      if (p.is_zero()) return IPoly();
      std::vector<Int> v;
      for (const auto& c : p.coeffs()) v.push_back(Int(c * l));
      return IPoly(p.degree(), std::move(v));
    };
    return {to_int(num), to_int(den)};
  }

  friend bool operator==(const RatFn& x, const RatFn& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator!=(const RatFn& x, const RatFn& y) { return !(x == y); }

  template <class U>
  U eval(const U& x0, const U& x1) const {
    U dv = den.eval(x0, x1);
    if (is_zero_value(dv)) throw Error(Errc::DivisionByZero, "RatFn pole");
    return num.eval(x0, x1) / dv;
  }

 private:
  template <class U>
  static bool is_zero_value(const U& v) {
    return prj3d::is_zero(v);
  }
};

/// True iff r is a constant (num = lambda * den).
inline bool is_constant(const RatFn& r, Rat* lambda = nullptr) {
  if (r.num.is_zero()) {
    if (lambda) *lambda = 0;
    return true;
  }
  if (r.den.degree() != 0) return false;
  if (lambda) *lambda = r.num[0] / r.den[0];
  return true;
}

/// r(phi) for phi = (a t0 + b t1, c t0 + d t1), reduced.
inline RatFn compose(const RatFn& r, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return RatFn::make(hp_compose(r.num, a, b, c, d), hp_compose(r.den, a, b, c, d));
}

}  // namespace prj3d
