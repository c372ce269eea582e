#pragma once

#include <array>

#include "curve.hpp"
#include "hpoly.hpp"
#include "matrix.hpp"

namespace prj3d {

/// Determinant invariants of a parametrization. A[k] is the frame determinant
/// with column k replaced by the fourth t0-derivative.
template <class T>
struct Determinants {
  HPoly<T> delta;
  std::array<HPoly<T>, 4> A;
};

namespace detail {

template <class T>
HPoly<T> replaced_det(Mat4<HPoly<T>> D, int col, const Param<T>& repl) {
  for (int i = 0; i < 4; ++i) D[i][col] = repl[i];
  return det4(D);
}

template <class T>
Param<T> t0_derivative(const Param<T>& p, int k) {
  Param<T> r;
  for (int i = 0; i < 4; ++i) r[i] = p[i].diff(0, k);
  return r;
}

}  // namespace detail

template <class T>
Determinants<T> compute_determinants(const Param<T>& p) {
  Mat4<HPoly<T>> D = d_frame(p);
  Param<T> p4 = detail::t0_derivative(p, 4);
  Determinants<T> r;
  r.delta = det4(D);
  for (int k = 0; k < 4; ++k) r.A[k] = detail::replaced_det(D, k, p4);
  return r;
}

/// A5,j: column j of the frame replaced by the fifth t0-derivative.
template <class T>
std::array<HPoly<T>, 4> compute_a5(const Param<T>& p) {
  Mat4<HPoly<T>> D = d_frame(p);
  Param<T> p5 = detail::t0_derivative(p, 5);
  std::array<HPoly<T>, 4> r;
  for (int k = 0; k < 4; ++k) r[k] = detail::replaced_det(D, k, p5);
  return r;
}

inline std::array<IPoly, 4> compute_a5(const Curve& c) { return compute_a5(c.integral()); }

/// Invariants of the integral representative of a curve.
struct InvariantSet {
  int n = 0;
  IPoly delta;
  std::array<IPoly, 4> A;
  std::array<RatFn, 4> I;  // I[k] = A[k] / delta
  RatFn I0;                // t1 I1 - t0 I2
};

inline std::array<int, 5> expected_degrees(int n) { return {4 * n - 7, 4 * n - 10, 4 * n - 10, 4 * n - 9, 4 * n - 8}; }

inline InvariantSet compute_invariants(const Curve& c) {
  InvariantSet s;
  s.n = c.degree();
  Determinants<Int> d = compute_determinants(c.integral());
  if (d.delta.is_zero()) throw Error(Errc::DeltaIdenticallyZero, "frame determinant vanishes identically");
  s.delta = d.delta;
  s.A = d.A;
  auto deg = expected_degrees(s.n);
  if (s.delta.degree() != deg[0]) throw Error(Errc::DegreeMismatch, "unexpected degree of the frame determinant");
  for (int k = 0; k < 4; ++k) {
    if (!s.A[k].is_zero() && s.A[k].degree() != deg[k + 1])
      throw Error(Errc::DegreeMismatch, "unexpected degree of A" + std::to_string(k + 1));
    s.I[k] = RatFn::make(s.A[k], s.delta);
  }
  IPoly t0 = IPoly::linear(1, 0), t1 = IPoly::linear(0, 1);
  IPoly num;
  if (!s.A[0].is_zero()) num += t1 * s.A[0];
  if (!s.A[1].is_zero()) num -= t0 * s.A[1];
  s.I0 = RatFn::make(num, s.delta);
  return s;
}

/// Numerator/denominator pieces of the curvatures before reduction.
struct CurvatureParts {
  IPoly P, Q, R;
};

inline CurvatureParts curvature_parts(const InvariantSet& s) {
  const Int n = s.n;
  const IPoly& D = s.delta;
  const IPoly &A1 = s.A[0], &A2 = s.A[1], &A3 = s.A[2], &A4 = s.A[3];
  IPoly t0 = IPoly::linear(1, 0), t1 = IPoly::linear(0, 1);
  IPoly L = t1 * A1 - t0 * A2;
  IPoly D2 = D * D, A42 = A4 * A4;
  Int n1 = n - 1, n2 = n - 2, n3 = n - 3;
  CurvatureParts c;
  c.P = Int(8 * n3 * n3) * (L * D2) + Int(4 * n1 * n3) * (t1 * A3 * A4 * D) + Int(n1 * n2) * (t1 * A42 * A4);
  c.Q = Int(8 * n3) * (A3 * D) + Int(3 * n2) * A42;
  c.R = Int(256 * n3 * n3 * n3) * (A2 * D2 * D) + Int(64 * n3 * n3) * (L * A4 * D2) +
        Int(16 * n1 * n3) * (t1 * A3 * A42 * D) + Int(3 * n1 * n2) * (t1 * A42 * A42);
  return c;
}

struct Curvatures {
  RatFn k1, k2;
};

/// Projective curvatures k1 = P^2 / (t1^2 Q^3), k2 = R / (t1 Q^2), reduced.
inline Curvatures compute_curvatures(const InvariantSet& s) {
  CurvatureParts c = curvature_parts(s);
  if (c.Q.is_zero()) throw Error(Errc::CurvatureDenominatorZero, "curvature denominator vanishes identically");
  IPoly t1 = IPoly::linear(0, 1);
  IPoly Q2 = c.Q * c.Q;
  Curvatures k;
  // Reduce P/(t1 Q) and R/(t1 Q^2) on smaller operands first, then square/cube the reduced pieces.
  k.k2 = RatFn::make(c.R, t1 * Q2);
  RatFn base = RatFn::make(c.P, t1 * c.Q);
  auto [bn, bd] = base.integral();
  // P^2/(t1^2 Q^3) = base^2 / Q
  IPoly num = bn * bn, den = bd * bd * c.Q;
  k.k1 = RatFn::make(num, den);
  auto homogeneous0 = [](const RatFn& r) { return r.num.is_zero() || r.num.degree() == r.den.degree(); };
  if (!homogeneous0(k.k1) || !homogeneous0(k.k2))
    throw Error(Errc::DegreeMismatch, "curvature is not homogeneous of degree 0");
  return k;
}

inline Curvatures compute_curvatures(const Curve& c) { return compute_curvatures(compute_invariants(c)); }

}  // namespace prj3d
