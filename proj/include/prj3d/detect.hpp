#pragma once

#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bihpoly.hpp"
#include "curve.hpp"
#include "invariants.hpp"
#include "lowfactor.hpp"
#include "matrix.hpp"

namespace prj3d {

/// Bidegree-(1,1) factor u (c t0 + d t1) - v (a t0 + b t1) of G, i.e. the
/// Moebius map phi = (a t0 + b t1, c t0 + d t1).
struct MoebiusFactor {
  Moebius phi;
  Int field = 1;  // radicand of the coefficient field, 1 for Q
};

inline SBiPoly factor_poly(const Moebius& phi) {
  return SBiPoly(1, 1, {phi.c(), -phi.a(), phi.d(), -phi.b()});
}

struct ExtractionLog {
  std::vector<long> samples;       // t = (1, tau) values used
  std::vector<std::string> discarded;
  int candidates = 0;              // fitted maps reaching exact division
  bool unsupported_degree = false;
};

struct Pair {
  Moebius phi;
  Mat4<Scalar> M;  // M p = lambda (q o phi)
  Int field = 1;
};

enum class Status { Equivalent, NotEquivalent, Undecided };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Equivalent: return "equivalent";
    case Status::NotEquivalent: return "not_equivalent";
    case Status::Undecided: return "undecided";
  }
  return "?";
}

struct Diagnostics {
  std::array<int, 2> e1_bidegree{-1, -1}, e2_bidegree{-1, -1}, g_bidegree{-1, -1};
  ExtractionLog extraction;
  std::vector<std::array<long, 2>> sample_points;  // t* used for matrix reconstruction
  double seconds = 0;
};

struct DetectionReport {
  Status status = Status::NotEquivalent;
  std::vector<Pair> pairs;
  Diagnostics diagnostics;
};

struct DetectOptions {
  bool force = false;  // skip the properness rejection
};

// ---------------------------------------------------------------- E and G

inline std::pair<IBiPoly, IBiPoly> build_E(const Curvatures& kp, const Curvatures& kq) {
  auto term = [](const RatFn& a, const RatFn& b) {
    auto [U, V] = a.integral();
    auto [Ub, Vb] = b.integral();
    if (U.is_zero() && Ub.is_zero()) return IBiPoly();
    IBiPoly r = bh_outer(U, Vb);
    r -= bh_outer(V, Ub);
    return r;
  };
  return {term(kp.k1, kq.k1), term(kp.k2, kq.k2)};
}

inline bool constant_curvatures(const Curvatures& k) { return is_constant(k.k1) && is_constant(k.k2); }

inline std::pair<IBiPoly, IBiPoly> build_E(const Curve& p, const Curve& q) {
  if (p.degree() != q.degree()) throw Error(Errc::DegreeMismatch, "curves of different degree");
  Curvatures kp = compute_curvatures(p), kq = compute_curvatures(q);
  if (constant_curvatures(kp) || constant_curvatures(kq))
    throw Error(Errc::ConstantCurvatures, "both projective curvatures are constant");
  return build_E(kp, kq);
}

inline IBiPoly compute_G(const IBiPoly& E1, const IBiPoly& E2) {
  if (E1.is_zero() && E2.is_zero()) throw Error(Errc::BothZero, "E1 and E2 both vanish");
  return bh_gcd(E1, E2);
}

// ---------------------------------------------------------------- factors

namespace detail {

inline upoly::ZPoly sample_poly(const IBiPoly& G, long tau) {
  IPoly h = bh_specialize<Int>(G, Side::T, Int(1), Int(tau));
  int m2 = G.m2();
  upoly::ZPoly w(m2 + 1);
  for (int j = 0; j <= m2; ++j) w[j] = h.is_zero() ? Int(0) : h[m2 - j];
  upoly::trim(w);
  return w;
}

inline Scalar eval_poly(const upoly::ZPoly& f, const Scalar& x) {
  Scalar r;
  for (int j = upoly::deg(f); j >= 0; --j) r = r * x + Scalar(f[j]);
  return r;
}

// Real roots of f that are rational or quadratic over Q.
inline std::vector<Scalar> low_roots(const upoly::ZPoly& f, int* leftover, std::vector<std::string>& log) {
  std::vector<Scalar> roots;
  lowfactor::LowFactors lf = lowfactor::low_degree_factors(f);
  for (const auto& l : lf.linear) roots.emplace_back(make_rat(-l[0], l[1]));
  for (const auto& q : lf.quadratic) {
    Rat disc = Rat(q[1] * q[1] - 4 * q[0] * q[2]);
    if (disc < 0) {
      log.push_back("complex quadratic root pair discarded");
      continue;
    }
    Scalar s = try_sqrt(disc);
    Scalar den(Rat(2 * q[2]));
    roots.push_back((Scalar(Rat(-q[1])) + s) / den);
    roots.push_back((Scalar(Rat(-q[1])) - s) / den);
  }
  *leftover = lf.leftover_degree;
  return roots;
}

// Nullspace of the 3x4 system a + b tau_i - c w_i - d tau_i w_i = 0.
inline std::optional<Moebius> fit(const std::array<long, 3>& tau, const std::array<Scalar, 3>& w) {
  std::vector<std::vector<Scalar>> A;
  for (int i = 0; i < 3; ++i) A.push_back({Scalar(1L), Scalar(tau[i]), -w[i], -(Scalar(tau[i]) * w[i])});
  auto ns = nullspace(A, 4);
  if (ns.size() != 1) return std::nullopt;
  const auto& v = ns[0];
  if ((v[0] * v[3] - v[1] * v[2]).is_zero()) return std::nullopt;
  return Moebius(v[0], v[1], v[2], v[3]);
}

inline bool divides_G(const IBiPoly& G, const Moebius& phi) {
  if (phi.is_rational()) {
    SBiPoly s = factor_poly(phi);
    std::vector<Int> f;
    for (const auto& x : s.flat()) f.push_back(x.to_rat().get_num());  // normalized maps are integral
    return bh_divides(IBiPoly(1, 1, f), G);
  }
  return bh_divides(factor_poly(phi), G.cast<Scalar>());
}

}  // namespace detail

/// All bidegree-(1,1) factors of G with nonzero determinant over Q or a real quadratic field.
inline std::vector<MoebiusFactor> extract_moebius_factors(const IBiPoly& G_in, ExtractionLog* log_out = nullptr) {
  ExtractionLog log;
  std::vector<MoebiusFactor> out;
  auto done = [&] {
    if (log_out) *log_out = log;
    return out;
  };
  if (G_in.is_zero()) return done();
  IBiPoly G = strip_monomial(G_in);
  if (G.m1() < 1 || G.m2() < 1) return done();

  // samples where the u^m2 coefficient survives, so no root escapes to infinity
  const int K = G.m2() + 2;
  constexpr long kMaxTau = 4096;
  std::vector<long> taus;
  for (long tau = 1; static_cast<int>(taus.size()) < K; ++tau) {
    if (tau > kMaxTau) throw Error(Errc::SampleExhaustion, "no admissible sample values");
    upoly::ZPoly h = detail::sample_poly(G, tau);
    if (upoly::deg(h) == G.m2()) taus.push_back(tau);
  }
  log.samples = taus;

  std::array<std::vector<Scalar>, 3> roots;
  int unsupported = 0;
  for (int s = 0; s < 3; ++s) {
    int leftover = 0;
    roots[s] = detail::low_roots(detail::sample_poly(G, taus[s]), &leftover, log.discarded);
    if (leftover > 0) ++unsupported;
  }
  log.unsupported_degree = unsupported == 3;
  if (log.unsupported_degree) log.discarded.push_back("irreducible factors of degree > 2 at every root-finding sample");

  std::vector<upoly::ZPoly> check;
  for (int s = 3; s < K; ++s) check.push_back(detail::sample_poly(G, taus[s]));

  std::array<long, 3> t3 = {taus[0], taus[1], taus[2]};
  for (const auto& w0 : roots[0])
    for (const auto& w1 : roots[1])
      for (const auto& w2 : roots[2]) {
        if (!w0.compatible(w1) || !w0.compatible(w2) || !w1.compatible(w2)) continue;
        std::optional<Moebius> phi;
        try {
          phi = detail::fit(t3, {w0, w1, w2});
        } catch (const Error& e) {
          if (e.code() != Errc::MixedExtension) throw;
        }
        if (!phi) continue;
        bool dup = false;
        for (const auto& f : out) dup |= f.phi == *phi;
        if (dup) continue;
        // prune on the remaining samples: h(w(tau)) = 0
        bool ok = true;
        for (std::size_t s = 0; s < check.size() && ok; ++s) {
          Scalar tau(taus[s + 3]);
          Scalar den = phi->c() + phi->d() * tau;
          if (den.is_zero()) {
            ok = false;
            break;
          }
          ok = detail::eval_poly(check[s], (phi->a() + phi->b() * tau) / den).is_zero();
        }
        if (!ok) continue;
        ++log.candidates;
        if (!detail::divides_G(G, *phi)) {
          log.discarded.push_back("candidate " + phi->str() + " failed exact division");
          continue;
        }
        out.push_back({*phi, phi->field()});
      }
  return done();
}

// ---------------------------------------------------------------- matrices

inline Mat4<Scalar> normalize_matrix(Mat4<Scalar> M) {
  const Scalar* first = nullptr;
  bool rational = true;
  for (const auto& r : M)
    for (const auto& x : r) {
      if (!first && !x.is_zero()) first = &x;
      rational &= x.is_rational();
    }
  if (!first) throw Error(Errc::SingularMatrix, "zero matrix");
  if (rational) {
    Int l = 1, g = 0;
    for (const auto& r : M)
      for (const auto& x : r) l = ilcm(l, x.to_rat().get_den());
    for (const auto& r : M)
      for (const auto& x : r) g = igcd(g, Int(x.to_rat() * l));
    Rat s = Rat(l) / Rat(g);
    if (first->sign() < 0) s = -s;
    for (auto& r : M)
      for (auto& x : r) x = x * Scalar(s);
  } else {
    Scalar s = first->inverse();
    for (auto& r : M)
      for (auto& x : r) x = x * s;
  }
  return M;
}

/// Sample points t* tried in order for matrix reconstruction.
inline std::vector<std::array<long, 2>> sample_points(int count) {
  std::vector<std::array<long, 2>> pts;
  for (long s = 2; static_cast<int>(pts.size()) < count; ++s)
    for (long a = 1; a < s && static_cast<int>(pts.size()) < count; ++a) {
      long b = s - a;
      if (std::gcd(a, b) == 1) pts.push_back({a, b});
    }
  return pts;
}

/// M = D(q o phi)(t*) D(p)(t*)^{-1} at the first t* where both frames are invertible.
inline Mat4<Scalar> reconstruct_matrix(const Curve& p, const Curve& q, const Moebius& phi,
                                       std::array<long, 2>* used = nullptr) {
  Param<Scalar> ps = to_scalar(p.components());
  Param<Scalar> qphi = compose_moebius(to_scalar(q.components()), phi);
  Mat4<HPoly<Scalar>> Dp = d_frame(ps), Dq = d_frame(qphi);
  // both determinants are nonzero polynomials, so a good point exists among deg+1 of them
  int budget = 2 * (4 * p.degree()) + 4;
  for (const auto& t : sample_points(budget)) {
    Scalar t0(t[0]), t1(t[1]);
    Mat4<Scalar> A, B;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        A[i][k] = Dq[i][k].eval(t0, t1);
        B[i][k] = Dp[i][k].eval(t0, t1);
      }
    if (det4(A).is_zero() || det4(B).is_zero()) continue;
    if (used) *used = t;
    return normalize_matrix(A * mat4_inverse(B));
  }
  throw Error(Errc::SingularSamplePoint, "no sample point with invertible frames");
}

/// M p and q o phi proportional with a nonzero constant.
inline bool verify_projectivity(const Curve& p, const Curve& q, const Moebius& phi, const Mat4<Scalar>& M) {
  if (det4(M).is_zero()) return false;
  Param<Scalar> mp = apply_matrix(M, to_scalar(p.components()));
  Param<Scalar> qphi = compose_moebius(to_scalar(q.components()), phi);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (mp[i] * qphi[j] != mp[j] * qphi[i]) return false;
  return true;
}

// ---------------------------------------------------------------- pipeline

inline void check_input(const Curve& c, const DetectOptions& opt) {
  validate_or_throw(c);
  if (!opt.force) {
    ProperReport pr = check_proper(c);
    if (!pr.proper)
      throw Error(Errc::NotProper, "parametrization is not proper (tracing index " + std::to_string(pr.tracing_index) + ")");
  }
}

inline DetectionReport detect_equivalences(const Curve& p, const Curve& q, const DetectOptions& opt = {}) {
  check_input(p, opt);
  if (!(p == q)) check_input(q, opt);
  auto start = std::chrono::steady_clock::now();
  DetectionReport rep;
  auto [E1, E2] = build_E(p, q);
  rep.diagnostics.e1_bidegree = {E1.m1(), E1.m2()};
  rep.diagnostics.e2_bidegree = {E2.m1(), E2.m2()};
  IBiPoly G = compute_G(E1, E2);
  E1 = IBiPoly();
  E2 = IBiPoly();
  rep.diagnostics.g_bidegree = {G.m1(), G.m2()};
  std::vector<MoebiusFactor> factors = extract_moebius_factors(G, &rep.diagnostics.extraction);
  for (const auto& f : factors) {
    std::array<long, 2> t{};
    Mat4<Scalar> M;
    try {
      M = reconstruct_matrix(p, q, f.phi, &t);
    } catch (const Error& e) {
      if (e.code() != Errc::SingularSamplePoint && e.code() != Errc::SingularMatrix) throw;
      rep.diagnostics.extraction.discarded.push_back("no invertible frame for " + f.phi.str());
      continue;
    }
    rep.diagnostics.sample_points.push_back(t);
    if (!verify_projectivity(p, q, f.phi, M)) {
      rep.diagnostics.extraction.discarded.push_back("frame matrix for " + f.phi.str() + " is not a projectivity");
      continue;
    }
    rep.pairs.push_back({f.phi, M, f.field});
  }
  if (!rep.pairs.empty())
    rep.status = Status::Equivalent;
  else
    rep.status = rep.diagnostics.extraction.unsupported_degree ? Status::Undecided : Status::NotEquivalent;
  rep.diagnostics.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline DetectionReport detect_symmetries(const Curve& p, const DetectOptions& opt = {}) {
  return detect_equivalences(p, p, opt);
}

/// Equality up to a nonzero scalar.
inline bool proportional(const Mat4<Scalar>& A, const Mat4<Scalar>& B) {
  try {
    return normalize_matrix(A) == normalize_matrix(B);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace prj3d
