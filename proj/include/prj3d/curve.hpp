#pragma once

#include <array>
#include <string>
#include <vector>

#include "bihpoly.hpp"
#include "hpoly.hpp"
#include "matrix.hpp"
#include "random.hpp"

namespace prj3d {

/// Four homogeneous components of a parametrization into P^3.
template <class T>
using Param = std::array<HPoly<T>, 4>;

/// "x t0 + y t1" with unit coefficients and zero terms dropped.
inline std::string linear_str(const Scalar& x, const Scalar& y) {
  std::string r;
  auto term = [&](const Scalar& k, const char* var) {
    if (k.is_zero()) return;
    bool neg = k.is_rational() && k.sign() < 0;
    Scalar m = neg ? -k : k;
    std::string coef = m == Scalar(1L) ? "" : (m.is_rational() ? m.str() : "(" + m.str() + ")") + " ";
    if (r.empty())
      r = (neg ? "-" : "") + coef + var;
    else
      r += (neg ? " - " : " + ") + coef + var;
  };
  term(x, "t0");
  term(y, "t1");
  return r.empty() ? "0" : r;
}

/// phi(t0, t1) = (a t0 + b t1, c t0 + d t1), ad - bc != 0, kept up to scale.
class Moebius {
 public:
  Moebius() : Moebius(Scalar(1L), Scalar(0L), Scalar(0L), Scalar(1L)) {}
  Moebius(Scalar a, Scalar b, Scalar c, Scalar d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) throw Error(Errc::SingularMoebius, "ad - bc = 0");
    normalize();
  }
  static Moebius identity() { return Moebius(); }

  const Scalar& a() const { return m_[0]; }
  const Scalar& b() const { return m_[1]; }
  const Scalar& c() const { return m_[2]; }
  const Scalar& d() const { return m_[3]; }
  Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  bool is_rational() const {
    for (const auto& x : m_)
      if (!x.is_rational()) return false;
    return true;
  }
  /// Radicand of the coefficient field (1 for Q).
  Int field() const {
    for (const auto& x : m_)
      if (!x.is_rational()) return x.d();
    return Int(1);
  }

  /// Matrix product this * psi, i.e. the map t -> this(psi(t)).
  Moebius operator*(const Moebius& psi) const {
    return Moebius(a() * psi.a() + b() * psi.c(), a() * psi.b() + b() * psi.d(), c() * psi.a() + d() * psi.c(),
                   c() * psi.b() + d() * psi.d());
  }
  Moebius inverse() const { return Moebius(d(), -b(), -c(), a()); }

  friend bool operator==(const Moebius& x, const Moebius& y) { return x.m_ == y.m_; }
  friend bool operator!=(const Moebius& x, const Moebius& y) { return !(x == y); }

  std::string str() const { return "(" + linear_str(a(), b()) + ", " + linear_str(c(), d()) + ")"; }

 private:
  void normalize() {
    int first = 0;
    while (m_[first].is_zero()) ++first;
    if (is_rational()) {
      Int l = 1, g = 0;
      for (const auto& x : m_) l = ilcm(l, x.to_rat().get_den());
      for (const auto& x : m_) g = igcd(g, Int(x.to_rat() * l));
      Rat s = Rat(l) / Rat(g);
      if (m_[first].sign() < 0) s = -s;
      for (auto& x : m_) x *= Scalar(s);
    } else {
      Scalar s = m_[first].inverse();
      for (auto& x : m_) x *= s;
    }
  }

  std::array<Scalar, 4> m_;
};

/// Rational parametrization of degree n; rows[i][j] multiplies t0^(n-j) t1^j in component i.
class Curve {
 public:
  Curve() = default;
  Curve(int n, std::vector<std::vector<Rat>> rows) : n_(n), rows_(std::move(rows)) {
    if (rows_.size() != 4) throw Error(Errc::InvalidArgument, "a curve has four components");
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) != n + 1) throw Error(Errc::InvalidArgument, "component row length must be n+1");
  }
  static Curve from_components(const Param<Rat>& p) {
    int n = -1;
    for (const auto& c : p) n = std::max(n, c.degree());
    std::vector<std::vector<Rat>> rows(4, std::vector<Rat>(n + 1, Rat(0)));
    for (int i = 0; i < 4; ++i) {
      if (p[i].is_zero()) continue;
      if (p[i].degree() != n) throw Error(Errc::DegreeMismatch, "components of different degree");
      rows[i] = p[i].coeffs();
    }
    return Curve(n, rows);
  }
  static Curve from_ints(int n, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return Curve(n, r);
  }

  int degree() const { return n_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

  Param<Rat> components() const {
    Param<Rat> p;
    for (int i = 0; i < 4; ++i) p[i] = QPoly(n_, rows_[i]);
    return p;
  }

  /// Components scaled by one common integer so all coefficients are integral.
  Param<Int> integral() const {
    Int l = 1;
    for (const auto& r : rows_)
      for (const auto& c : r) l = ilcm(l, c.get_den());
    Param<Int> p;
    for (int i = 0; i < 4; ++i) {
      std::vector<Int> v;
      for (const auto& c : rows_[i]) v.push_back(Int(c * l));
      p[i] = IPoly(n_, v);
    }
    return p;
  }

  friend bool operator==(const Curve& x, const Curve& y) { return x.n_ == y.n_ && x.rows_ == y.rows_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Rat>> rows_;
};

struct ValidationReport {
  bool degree_ok = false;
  bool reduced = false;
  int rank = 0;
  bool c0_nonzero = false;

  bool ok() const { return degree_ok && reduced && rank == 4 && c0_nonzero; }
  /// First violated hypothesis as an error code.
  Errc failure() const {
    if (!degree_ok) return Errc::DegreeTooLow;
    if (!reduced) return Errc::NotReduced;
    return Errc::RankDeficient;
  }
  std::string message() const {
    if (!degree_ok) return "degree must be at least 4";
    if (!reduced) return "components share a common factor (not in reduced form)";
    if (rank != 4) return "coefficient matrix has rank " + std::to_string(rank) + " < 4 (curve lies in a plane)";
    if (!c0_nonzero) return "leading coefficient vector vanishes";
    return "ok";
  }
};

inline ValidationReport validate(const Curve& c) {
  ValidationReport r;
  r.degree_ok = c.degree() >= 4;
  Param<Int> p = c.integral();
  IPoly g;
  for (const auto& comp : p) {
    if (comp.is_zero()) continue;
    g = g.is_zero() ? normalize(comp) : hp_gcd(g, comp);
  }
  r.reduced = !g.is_zero() && g.degree() == 0;
  std::vector<std::vector<Rat>> rows = c.rows();
  r.rank = prj3d::rank(rows);
  for (int i = 0; i < 4; ++i)
    if (c.rows()[i][0] != 0) r.c0_nonzero = true;
  return r;
}

inline void validate_or_throw(const Curve& c) {
  ValidationReport r = validate(c);
  if (!r.ok()) throw Error(r.failure(), r.message());
}

struct ProperReport {
  bool proper = false;
  int tracing_index = 0;
};

/// Tracing index: (s0,s1)-degree of gcd_{i<j} (p_i(t) p_j(s) - p_j(t) p_i(s)).
inline ProperReport check_proper(const Curve& c) {
  Param<Int> p = c.integral();
  IBiPoly H;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      IBiPoly e = bh_outer(p[i], p[j]) - bh_outer(p[j], p[i]);
      if (e.is_zero()) continue;
      H = H.is_zero() ? normalize(e) : bh_gcd(H, e);
      if (H.m2() <= 1) break;
    }
  ProperReport r;
  r.tracing_index = H.is_zero() ? 0 : H.m2();
  r.proper = r.tracing_index == 1;
  return r;
}

template <class T>
Param<T> compose(const Param<T>& p, const std::type_identity_t<T>& a, const std::type_identity_t<T>& b,
                 const std::type_identity_t<T>& c, const std::type_identity_t<T>& d) {
  Param<T> r;
  for (int i = 0; i < 4; ++i) r[i] = hp_compose(p[i], a, b, c, d);
  return r;
}

/// q o phi over the coefficient field of phi.
inline Param<Scalar> compose_moebius(const Param<Scalar>& q, const Moebius& phi) {
  return compose(q, phi.a(), phi.b(), phi.c(), phi.d());
}

template <class T>
Param<Scalar> to_scalar(const Param<T>& p) {
  Param<Scalar> r;
  for (int i = 0; i < 4; ++i) r[i] = p[i].template cast<Scalar>();
  return r;
}

inline Curve compose_moebius(const Curve& c, const Moebius& phi) {
  if (!phi.is_rational()) throw Error(Errc::MixedExtension, "rational curve result requires a rational Moebius map");
  Param<Rat> r = compose(c.components(), phi.a().to_rat(), phi.b().to_rat(), phi.c().to_rat(), phi.d().to_rat());
  return Curve::from_components(r);
}

/// M * p, componentwise linear combination.
template <class T>
Param<T> apply_matrix(const Mat4<T>& M, const Param<T>& p) {
  Param<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(M[i][j])) r[i] += M[i][j] * p[j];
  return r;
}

/// Columns p_t0, p_t1, p_t0t0, p_t0t0t0 (entry [i][k] = column k of component i).
template <class T>
Mat4<HPoly<T>> d_frame(const Param<T>& p) {
  Mat4<HPoly<T>> D;
  for (int i = 0; i < 4; ++i) {
    D[i][0] = p[i].diff(0, 1);
    D[i][1] = p[i].diff(1, 1);
    D[i][2] = p[i].diff(0, 2);
    D[i][3] = p[i].diff(0, 3);
  }
  return D;
}

template <class U, class T>
Mat4<U> d_frame_eval(const Param<T>& p, const U& x0, const U& x1) {
  Mat4<HPoly<T>> D = d_frame(p);
  Mat4<U> r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) r[i][k] = D[i][k].eval(x0, x1);
  return r;
}

// ---------------------------------------------------------------- generators

struct GenStats {
  int resamples = 0;
};

namespace detail {

inline bool acceptable(const Curve& c) { return validate(c).ok() && check_proper(c).proper; }

template <class Draw>
Curve sample_curve(Draw draw, GenStats* stats) {
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Curve c = draw();
    if (acceptable(c)) return c;
    if (stats) ++stats->resamples;
  }
  throw Error(Errc::GenerationExhausted, "no valid curve after 64 samples");
}

}  // namespace detail

/// Random curve with integer coefficients of bitsize at most tau.
inline Curve gen_random(int n, int tau, std::uint64_t seed, GenStats* stats = nullptr) {
  if (n < 4) throw Error(Errc::DegreeTooLow, "degree must be at least 4");
  if (tau < 2) throw Error(Errc::InvalidArgument, "bitsize must be at least 2");
  Pcg32 rng(seed);
  return detail::sample_curve(
      [&] {
        std::vector<std::vector<Rat>> rows(4, std::vector<Rat>(n + 1));
        for (auto& r : rows)
          for (auto& c : r) c = Rat(rng.bits(tau));
        return Curve(n, rows);
      },
      stats);
}

/// Fixed planted transformation of the equivalent-pair generator.
inline Mat4<Rat> planted_matrix() {
  return {{{1, -1, 1, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}}};
}
inline Moebius planted_moebius() { return Moebius(Scalar(-1L), Scalar(1L), Scalar(2L), Scalar(0L)); }

struct EquivalentPair {
  Curve p, q;
  Mat4<Rat> M;  // p = M (q o phi)
  Moebius phi;
};

inline EquivalentPair gen_equivalent_pair(int n, int tau, std::uint64_t seed, GenStats* stats = nullptr) {
  EquivalentPair e;
  e.q = gen_random(n, tau, seed, stats);
  e.M = planted_matrix();
  e.phi = planted_moebius();
  Curve qphi = compose_moebius(e.q, e.phi);
  e.p = Curve::from_components(apply_matrix(e.M, qphi.components()));
  return e;
}

/// Even-degree curve with p(t1, t0) = (p0, -p1, -p2, -p3).
inline Curve gen_central_inversion(int m, int tau, std::uint64_t seed, GenStats* stats = nullptr) {
  if (m < 4) throw Error(Errc::DegreeTooLow, "degree must be at least 4");
  if (m % 2 != 0) throw Error(Errc::InvalidArgument, "central-inversion curves need even degree");
  // the antisymmetric triple lives in an (m/2)-dimensional space, so rank 4 needs m >= 6
  if (m < 6) throw Error(Errc::InvalidArgument, "central-inversion curves need degree at least 6");
  if (tau < 2) throw Error(Errc::InvalidArgument, "bitsize must be at least 2");
  Pcg32 rng(seed);
  return detail::sample_curve(
      [&] {
        std::vector<std::vector<Rat>> rows(4, std::vector<Rat>(m + 1, Rat(0)));
        for (int j = 0; j <= m / 2; ++j) {
          Rat c(rng.bits(tau));
          rows[0][j] = rows[0][m - j] = c;
        }
        for (int i = 1; i < 4; ++i)
          for (int j = 0; j < m / 2; ++j) {
            Rat c(rng.bits(tau));
            rows[i][j] = c;
            rows[i][m - j] = -c;
          }
        return Curve(m, rows);
      },
      stats);
}

}  // namespace prj3d
