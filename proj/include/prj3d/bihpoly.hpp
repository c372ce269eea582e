#pragma once

#include <array>
#include <string>
#include <vector>

#include "hpoly.hpp"
#include "modular.hpp"
#include "upoly.hpp"

namespace prj3d {

/// Bihomogeneous polynomial: entry (i, k) multiplies t0^(m1-i) t1^i u^(m2-k) v^k.
/// An empty coefficient table is the zero polynomial.
template <class T>
class BiHPoly {
 public:
  BiHPoly() = default;
  BiHPoly(int m1, int m2, std::vector<T> flat) : m1_(m1), m2_(m2), c_(std::move(flat)) {
    if (m1 < 0 || m2 < 0 || c_.size() != static_cast<std::size_t>((m1 + 1) * (m2 + 1)))
      throw Error(Errc::InvalidArgument, "BiHPoly needs (m1+1)(m2+1) coefficients");
    canonicalize();
  }
  static BiHPoly filled(int m1, int m2) { return BiHPoly(m1, m2, std::vector<T>((m1 + 1) * (m2 + 1), T(0)), 0); }

  bool is_zero() const { return c_.empty(); }
  int m1() const { return c_.empty() ? -1 : m1_; }
  int m2() const { return c_.empty() ? -1 : m2_; }
  std::pair<int, int> bidegree() const { return {m1(), m2()}; }
  const T& operator()(int i, int k) const { return c_[i * (m2_ + 1) + k]; }
  T& at(int i, int k) { return c_[i * (m2_ + 1) + k]; }
  const std::vector<T>& flat() const { return c_; }

  BiHPoly operator-() const {
    BiHPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  BiHPoly& operator+=(const BiHPoly& y) {
    if (y.is_zero()) return *this;
    if (is_zero()) return *this = y;
    if (m1_ != y.m1_ || m2_ != y.m2_) throw Error(Errc::BidegreeMismatch, "adding different bidegrees");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    canonicalize();
    return *this;
  }
  BiHPoly& operator-=(const BiHPoly& y) { return *this += -y; }
  friend BiHPoly operator+(BiHPoly x, const BiHPoly& y) { return x += y; }
  friend BiHPoly operator-(BiHPoly x, const BiHPoly& y) { return x -= y; }

  friend BiHPoly operator*(const BiHPoly& x, const BiHPoly& y) {
    if (x.is_zero() || y.is_zero()) return BiHPoly();
    BiHPoly r = filled(x.m1_ + y.m1_, x.m2_ + y.m2_);
    for (int i = 0; i <= x.m1_; ++i)
      for (int k = 0; k <= x.m2_; ++k) {
        const T& a = x(i, k);
        if (prj3d::is_zero(a)) continue;
        for (int j = 0; j <= y.m1_; ++j)
          for (int l = 0; l <= y.m2_; ++l) detail::addmul(r.at(i + j, k + l), a, y(j, l));
      }
    r.canonicalize();
    return r;
  }
  friend BiHPoly operator*(const T& s, BiHPoly x) {
    if (prj3d::is_zero(s)) return BiHPoly();
    for (auto& v : x.c_) v *= s;
    return x;
  }

  friend bool operator==(const BiHPoly& x, const BiHPoly& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return x.m1_ == y.m1_ && x.m2_ == y.m2_ && x.c_ == y.c_;
  }
  friend bool operator!=(const BiHPoly& x, const BiHPoly& y) { return !(x == y); }

  template <class U>
  BiHPoly<U> cast() const {
    if (is_zero()) return BiHPoly<U>();
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(U(x));
    return BiHPoly<U>(m1_, m2_, std::move(v));
  }

  /// Exchanges the roles of (t0,t1) and (u,v).
  BiHPoly swap_sides() const {
    if (is_zero()) return *this;
    BiHPoly r = filled(m2_, m1_);
    for (int i = 0; i <= m1_; ++i)
      for (int k = 0; k <= m2_; ++k) r.at(k, i) = (*this)(i, k);
    return r;
  }

  /// Multiplies by t0^e0 t1^e1 u^f0 v^f1.
  BiHPoly shift(int e0, int e1, int f0, int f1) const {
    if (is_zero()) return *this;
    BiHPoly r = filled(m1_ + e0 + e1, m2_ + f0 + f1);
    for (int i = 0; i <= m1_; ++i)
      for (int k = 0; k <= m2_; ++k) r.at(i + e1, k + f1) = (*this)(i, k);
    return r;
  }

  /// Sub-block [i_lo, i_hi] x [k_lo, k_hi] as a new polynomial.
  BiHPoly block(int i_lo, int i_hi, int k_lo, int k_hi) const {
    BiHPoly r = filled(i_hi - i_lo, k_hi - k_lo);
    for (int i = i_lo; i <= i_hi; ++i)
      for (int k = k_lo; k <= k_hi; ++k) r.at(i - i_lo, k - k_lo) = (*this)(i, k);
    r.canonicalize();
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= m1_; ++i)
      for (int k = 0; k <= m2_; ++k) {
        const T& c = (*this)(i, k);
        if (prj3d::is_zero(c)) continue;
        std::string cs;
        if constexpr (std::is_same_v<T, Scalar>)
          cs = c.str();
        else
          cs = to_string(c);
        if (!s.empty()) s += " + ";
        s += "(" + cs + ")";
        auto pw = [&](const char* v, int e) {
          if (e) s += std::string("*") + v + (e > 1 ? "^" + std::to_string(e) : "");
        };
        pw("t0", m1_ - i);
        pw("t1", i);
        pw("u", m2_ - k);
        pw("v", k);
      }
    return s;
  }

 private:
  BiHPoly(int m1, int m2, std::vector<T> flat, int) : m1_(m1), m2_(m2), c_(std::move(flat)) {}
  void canonicalize() {
    for (const auto& x : c_)
      if (!prj3d::is_zero(x)) return;
    c_.clear();
  }
  template <class>
  friend class BiHPoly;

  int m1_ = -1, m2_ = -1;
  std::vector<T> c_;
};

using IBiPoly = BiHPoly<Int>;
using SBiPoly = BiHPoly<Scalar>;

/// a(t0,t1) * b(u,v).
template <class T>
BiHPoly<T> bh_outer(const HPoly<T>& a, const HPoly<T>& b) {
  if (a.is_zero() || b.is_zero()) return BiHPoly<T>();
  std::vector<T> v((a.degree() + 1) * (b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i)
    for (int k = 0; k <= b.degree(); ++k) v[i * (b.degree() + 1) + k] = a[i] * b[k];
  return BiHPoly<T>(a.degree(), b.degree(), std::move(v));
}

enum class Side { T, U };

/// Substitutes the given pair on one side, leaving a polynomial in the other pair.
template <class U, class T>
HPoly<U> bh_specialize(const BiHPoly<T>& a, Side side, const U& x0, const U& x1) {
  if (a.is_zero()) return HPoly<U>();
  int m1 = a.m1(), m2 = a.m2();
  int ms = side == Side::T ? m1 : m2, mo = side == Side::T ? m2 : m1;
  std::vector<U> p0(ms + 1), p1(ms + 1);
  p0[0] = p1[0] = U(1);
  for (int e = 1; e <= ms; ++e) {
    p0[e] = p0[e - 1] * x0;
    p1[e] = p1[e - 1] * x1;
  }
  std::vector<U> out(mo + 1, U(0));
  for (int i = 0; i <= m1; ++i)
    for (int k = 0; k <= m2; ++k) {
      const T& c = a(i, k);
      if (is_zero(c)) continue;
      if (side == Side::T)
        out[k] += U(c) * (p0[m1 - i] * p1[i]);
      else
        out[i] += U(c) * (p0[m2 - k] * p1[k]);
    }
  return HPoly<U>(mo, std::move(out));
}

template <class U, class T>
U bh_eval(const BiHPoly<T>& a, const U& t0, const U& t1, const U& u, const U& v) {
  return bh_specialize<U>(a, Side::T, t0, t1).eval(u, v);
}

/// Exponents (t0, t1, u, v) of the largest monomial dividing a (a nonzero).
template <class T>
std::array<int, 4> monomial_part(const BiHPoly<T>& a) {
  int m1 = a.m1(), m2 = a.m2();
  auto row_zero = [&](int i) {
    for (int k = 0; k <= m2; ++k)
      if (!is_zero(a(i, k))) return false;
    return true;
  };
  auto col_zero = [&](int k) {
    for (int i = 0; i <= m1; ++i)
      if (!is_zero(a(i, k))) return false;
    return true;
  };
  std::array<int, 4> e{0, 0, 0, 0};
  while (row_zero(m1 - e[0])) ++e[0];
  while (row_zero(e[1])) ++e[1];
  while (col_zero(m2 - e[2])) ++e[2];
  while (col_zero(e[3])) ++e[3];
  return e;
}

template <class T>
BiHPoly<T> strip_monomial(const BiHPoly<T>& a, std::array<int, 4>* exps = nullptr) {
  auto e = monomial_part(a);
  if (exps) *exps = e;
  return a.block(e[1], a.m1() - e[0], e[3], a.m2() - e[2]);
}

/// Primitive integer multiple with positive first nonzero coefficient (row-major order).
inline IBiPoly normalize(const IBiPoly& a) {
  if (a.is_zero()) return a;
  Int g = upoly::content(a.flat());
  for (const auto& c : a.flat())
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  std::vector<Int> v = a.flat();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IBiPoly(a.m1(), a.m2(), std::move(v));
}

/// q with a = b*q. Over Int the quotient must be integral.
template <class T>
BiHPoly<T> bh_div_exact(const BiHPoly<T>& a, const BiHPoly<T>& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "bh_div_exact by zero polynomial");
  if (a.is_zero()) return a;
  int q1 = a.m1() - b.m1(), q2 = a.m2() - b.m2();
  if (q1 < 0 || q2 < 0) throw Error(Errc::NotDivisible, "divisor bidegree exceeds dividend");
  int i0 = -1, k0 = -1;
  for (int i = 0; i <= b.m1() && i0 < 0; ++i)
    for (int k = 0; k <= b.m2(); ++k)
      if (!is_zero(b(i, k))) {
        i0 = i;
        k0 = k;
        break;
      }
  BiHPoly<T> r = a, q = BiHPoly<T>::filled(q1, q2);
  const T& lead = b(i0, k0);
  T c;
  for (int i = 0; i <= q1; ++i)
    for (int k = 0; k <= q2; ++k) {
      const T& top = r(i + i0, k + k0);
      if (is_zero(top)) continue;
      if (!detail::div_coeff(top, lead, c)) throw Error(Errc::NotDivisible, "non-integral quotient");
      for (int j = i0; j <= b.m1(); ++j)
        for (int l = (j == i0 ? k0 : 0); l <= b.m2(); ++l) {
          const T& bj = b(j, l);
          if (is_zero(bj)) continue;
          detail::submul(r.at(i + j, k + l), c, bj);
        }
      q.at(i, k) = c;
    }
  for (const auto& x : r.flat())
    if (!is_zero(x)) throw Error(Errc::NotDivisible, "nonzero remainder");
  return BiHPoly<T>(q1, q2, q.flat());
}

template <class T>
bool bh_divides(const BiHPoly<T>& b, const BiHPoly<T>& a) {
  try {
    bh_div_exact(a, b);
    return true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    return false;
  }
}

namespace detail {

// Column k of a as a polynomial in s = t1/t0 (dehomogenized at t0 = 1).
inline upoly::ZPoly column(const IBiPoly& a, int k) {
  upoly::ZPoly c(a.m1() + 1);
  for (int i = 0; i <= a.m1(); ++i) c[i] = a(i, k);
  upoly::trim(c);
  return c;
}

inline IBiPoly from_columns(const std::vector<upoly::ZPoly>& cols) {
  int m1 = 0;
  for (const auto& c : cols) m1 = std::max(m1, upoly::deg(c));
  int m2 = static_cast<int>(cols.size()) - 1;
  IBiPoly r = IBiPoly::filled(m1, m2);
  for (int k = 0; k <= m2; ++k)
    for (int i = 0; i <= upoly::deg(cols[k]); ++i) r.at(i, k) = cols[k][i];
  return IBiPoly(m1, m2, r.flat());
}

// Content in Z[s] of a as a polynomial in y = v/u.
template <class UGcd>
upoly::ZPoly y_content(const IBiPoly& a, UGcd ugcd) {
  upoly::ZPoly g;
  for (int k = 0; k <= a.m2(); ++k) {
    upoly::ZPoly c = column(a, k);
    if (c.empty()) continue;
    g = g.empty() ? (c.back() < 0 ? upoly::scale(c, Int(-1)) : c) : ugcd(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

inline std::vector<upoly::ZPoly> divide_columns(const IBiPoly& a, const upoly::ZPoly& c) {
  std::vector<upoly::ZPoly> cols(a.m2() + 1);
  for (int k = 0; k <= a.m2(); ++k) {
    upoly::ZPoly q;
    if (!upoly::divide_exact(column(a, k), c, q)) throw Error(Errc::NotDivisible, "content division");
    cols[k] = std::move(q);
  }
  return cols;
}

struct ModBiv {
  int dy = -1;                 // y-degree of the image gcd
  std::vector<mod::Poly> cols;  // coefficient of y^k as polynomial in s
};

// gcd of a, b mod p, scaled so its leading y-coefficient is gamma(s).
inline ModBiv brown_image(const mod::Field& F, const std::vector<mod::Poly>& A, const std::vector<mod::Poly>& B,
                          const mod::Poly& gamma, int bound_s, bool early) {
  ModBiv H;
  mod::Poly M{1};  // product of (s - s_i)
  int npts = 0, stable_run = 0;
  const mod::Poly& lcA = A.back();
  const mod::Poly& lcB = B.back();
  for (mod::u64 s0 = 1;; ++s0) {
    if (mod::eval(F, lcA, s0) == 0 || mod::eval(F, lcB, s0) == 0) continue;
    mod::Poly a0(A.size()), b0(B.size());
    for (std::size_t k = 0; k < A.size(); ++k) a0[k] = mod::eval(F, A[k], s0);
    for (std::size_t k = 0; k < B.size(); ++k) b0[k] = mod::eval(F, B[k], s0);
    mod::trim(a0);
    mod::trim(b0);
    mod::Poly g = mod::gcd(F, a0, b0);
    int d = mod::deg(g);
    if (d == 0) {
      H.dy = 0;
      H.cols.assign(1, mod::Poly{1});
      return H;
    }
    if (H.dy >= 0 && d > H.dy) continue;
    if (H.dy < 0 || d < H.dy) {
      H.dy = d;
      H.cols.assign(d + 1, mod::Poly{});
      M = mod::Poly{1};
      npts = 0;
      stable_run = 0;
    }
    g = mod::scale(F, g, mod::eval(F, gamma, s0));
    // Newton step: H += (g - H(s0)) / M(s0) * M
    mod::u64 minv = F.inv(mod::eval(F, M, s0));
    bool changed = false;
    for (int k = 0; k <= d; ++k) {
      mod::u64 cur = mod::eval(F, H.cols[k], s0);
      mod::u64 gk = k < static_cast<int>(g.size()) ? g[k] : 0;
      mod::u64 diff = F.mul(F.sub(gk, cur), minv);
      if (diff) {
        changed = true;
        H.cols[k] = mod::add(F, H.cols[k], mod::scale(F, M, diff));
      }
    }
    M = mod::mul(F, M, mod::Poly{F.neg(s0 % F.p), 1});
    ++npts;
    stable_run = changed ? 0 : stable_run + 1;
    if (npts > bound_s) return H;
    if (early && stable_run >= 2) return H;
  }
}

}  // namespace detail

/// gcd of bihomogeneous integer polynomials, normalized primitive. Modular
/// (Brown) engine over images mod word primes, certified by exact division.
inline IBiPoly bh_gcd(const IBiPoly& a_in, const IBiPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) throw Error(Errc::BothZero, "bh_gcd of two zero polynomials");
  if (a_in.is_zero()) return normalize(b_in);
  if (b_in.is_zero()) return normalize(a_in);
  std::array<int, 4> ea, eb, e;
  IBiPoly a = strip_monomial(a_in, &ea), b = strip_monomial(b_in, &eb);
  for (int j = 0; j < 4; ++j) e[j] = std::min(ea[j], eb[j]);
  auto ugcd = [](const upoly::ZPoly& x, const upoly::ZPoly& y) { return upoly::gcd(x, y); };

  upoly::ZPoly ca = detail::y_content(a, ugcd), cb = detail::y_content(b, ugcd);
  upoly::ZPoly c = upoly::gcd(ca, cb);
  auto finish = [&](const IBiPoly& g) { return normalize(g.shift(e[0], e[1], e[2], e[3])); };
  auto content_only = [&]() {
    IBiPoly g = detail::from_columns({c});
    return finish(g);
  };
  std::vector<upoly::ZPoly> A = detail::divide_columns(a, ca), B = detail::divide_columns(b, cb);
  if (A.size() == 1 || B.size() == 1) return content_only();
  upoly::ZPoly gamma = upoly::gcd(A.back(), B.back());
  int dsA = 0, dsB = 0;
  for (const auto& x : A) dsA = std::max(dsA, upoly::deg(x));
  for (const auto& x : B) dsB = std::max(dsB, upoly::deg(x));
  int bound_s = upoly::deg(gamma) + std::min(dsA, dsB);
  IBiPoly Ap = detail::from_columns(A), Bp = detail::from_columns(B);

  for (bool early : {true, false}) {
    int best = static_cast<int>(std::min(A.size(), B.size()));
    std::vector<upoly::ZPoly> H;  // nonnegative residues mod P
    Int P = 0;
    int failures = 0;
    for (std::size_t pi = 0; (!early || failures < 3) && pi < 1000; ++pi) {
      mod::Field F{mod::prime(pi)};
      if (F.reduce(A.back().back()) == 0 || F.reduce(B.back().back()) == 0) continue;
      std::vector<mod::Poly> Am(A.size()), Bm(B.size());
      for (std::size_t k = 0; k < A.size(); ++k) Am[k] = mod::reduce(F, A[k]);
      for (std::size_t k = 0; k < B.size(); ++k) Bm[k] = mod::reduce(F, B[k]);
      detail::ModBiv img = detail::brown_image(F, Am, Bm, mod::reduce(F, gamma), bound_s, early);
      if (img.dy == 0) return content_only();
      if (img.dy > best) continue;
      if (img.dy < best) {
        best = img.dy;
        H.assign(img.dy + 1, upoly::ZPoly());
        for (int k = 0; k <= img.dy; ++k)
          for (auto x : img.cols[k]) H[k].push_back(Int(static_cast<unsigned long>(x)));
        P = Int(static_cast<unsigned long>(F.p));
        continue;
      }
      std::vector<upoly::ZPoly> sym(H.size());
      bool stable = true;
      for (int k = 0; k <= best; ++k) {
        sym[k].resize(H[k].size());
        for (std::size_t i = 0; i < H[k].size(); ++i) sym[k][i] = mod::symmetric(H[k][i], P);
        upoly::trim(sym[k]);
        if (stable && mod::reduce(F, sym[k]) != img.cols[k]) stable = false;
      }
      if (stable) {
        IBiPoly cand = detail::from_columns(sym);
        upoly::ZPoly cc = detail::y_content(cand, ugcd);
        cand = detail::from_columns(detail::divide_columns(cand, cc));
        if (bh_divides(cand, Ap) && bh_divides(cand, Bp)) {
          std::vector<upoly::ZPoly> cols(cand.m2() + 1);
          for (int k = 0; k <= cand.m2(); ++k) cols[k] = upoly::mul(detail::column(cand, k), c);
          return finish(detail::from_columns(cols));
        }
        ++failures;
      }
      mod::u64 pinv = F.inv(F.reduce(P));
      for (int k = 0; k <= best; ++k) {
        std::size_t len = std::max(H[k].size(), img.cols[k].size());
        H[k].resize(len, Int(0));
        for (std::size_t i = 0; i < len; ++i)
          mod::crt_step(H[k][i], P, i < img.cols[k].size() ? img.cols[k][i] : 0, F, pinv);
      }
      P *= Int(static_cast<unsigned long>(F.p));
    }
  }
  throw Error(Errc::NotDivisible, "bh_gcd failed to certify a candidate");
}

/// Reference gcd via a primitive remainder sequence over Z[s][y].
inline IBiPoly bh_gcd_prs(const IBiPoly& a_in, const IBiPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) throw Error(Errc::BothZero, "bh_gcd of two zero polynomials");
  if (a_in.is_zero()) return normalize(b_in);
  if (b_in.is_zero()) return normalize(a_in);
  std::array<int, 4> ea, eb, e;
  IBiPoly a = strip_monomial(a_in, &ea), b = strip_monomial(b_in, &eb);
  for (int j = 0; j < 4; ++j) e[j] = std::min(ea[j], eb[j]);
  auto ugcd = [](const upoly::ZPoly& x, const upoly::ZPoly& y) { return upoly::gcd_prs(x, y); };
  using Cols = std::vector<upoly::ZPoly>;
  auto trimc = [](Cols& x) {
    while (!x.empty() && x.back().empty()) x.pop_back();
  };
  auto content = [&](const Cols& x) {
    upoly::ZPoly g;
    for (const auto& c : x) {
      if (c.empty()) continue;
      g = g.empty() ? upoly::primitive(c) : ugcd(g, c);
    }
    return g;
  };
  auto prim = [&](const Cols& x) {
    upoly::ZPoly g = content(x);
    Cols r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) upoly::divide_exact(x[k], g, r[k]);
    // sign: leading y-coefficient has positive leading s-coefficient
    if (!r.empty() && r.back().back() < 0)
      for (auto& c : r) c = upoly::scale(c, Int(-1));
    return r;
  };
  auto to_cols = [](const IBiPoly& x) {
    Cols r(x.m2() + 1);
    for (int k = 0; k <= x.m2(); ++k) r[k] = detail::column(x, k);
    return r;
  };
  Cols A = to_cols(a), B = to_cols(b);
  upoly::ZPoly c = ugcd(content(A), content(B));
  A = prim(A);
  B = prim(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    // pseudo-remainder of A by B in y
    Cols R = A;
    const upoly::ZPoly& lb = B.back();
    while (R.size() >= B.size()) {
      upoly::ZPoly lr = R.back();
      std::size_t shift = R.size() - B.size();
      for (auto& x : R) x = upoly::mul(x, lb);
      for (std::size_t j = 0; j < B.size(); ++j) R[shift + j] = upoly::sub(R[shift + j], upoly::mul(lr, B[j]));
      trimc(R);
      if (R.empty()) break;
    }
    A = std::move(B);
    B = R.empty() ? Cols{} : prim(R);
  }
  for (auto& x : A) x = upoly::mul(x, c);
  return normalize(detail::from_columns(A).shift(e[0], e[1], e[2], e[3]));
}

}  // namespace prj3d
