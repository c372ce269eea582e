#pragma once

#include <vector>

#include "prj3d/detect.hpp"

namespace fixtures {

using prj3d::Curve;
using prj3d::QPoly;
using prj3d::Rat;

inline QPoly pw(const QPoly& x, int k) {
  QPoly r = QPoly::constant(Rat(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

inline QPoly T0() { return QPoly::linear(1, 0); }
inline QPoly T1() { return QPoly::linear(0, 1); }
inline QPoly L() { return QPoly::linear(1, -1); }  // t0 - t1
inline QPoly c(long v) { return QPoly::constant(Rat(v)); }

/// Worked example pair with four projective equivalences.
inline Curve example_p() {
  QPoly t0 = T0(), l = L();
  prj3d::Param<Rat> p = {pw(l, 4) + c(16) * pw(t0, 4) - c(8) * pw(t0, 3) * l + c(4) * pw(t0, 2) * pw(l, 2),
                         c(4) * pw(t0, 2) * pw(l, 2), c(8) * pw(t0, 3) * l,
                         c(2) * t0 * l * (pw(l, 2) + c(4) * pw(t0, 2))};
  return Curve::from_components(p);
}

inline Curve example_q() {
  QPoly t0 = T0(), l = L();
  prj3d::Param<Rat> q = {pw(l, 4) + c(16) * pw(t0, 4), c(2) * t0 * l * (pw(l, 2) + c(4) * pw(t0, 2)),
                         c(2) * pw(l, 3) * t0, c(4) * pw(t0, 2) * pw(l, 2)};
  return Curve::from_components(q);
}

/// (t0^4 + t1^4, 4 t0^3 t1, -8 t0^2 t1^2, t0 t1^3 - 2 t1^4).
inline Curve display_curve() {
  return Curve::from_ints(4, {{1, 0, 0, 0, 1}, {0, 4, 0, 0, 0}, {0, 0, -8, 0, 0}, {0, 0, 0, 1, -2}});
}

/// Reference curvatures of example_p, in lowest terms.
inline std::pair<prj3d::RatFn, prj3d::RatFn> golden_curvatures() {
  QPoly t0 = T0(), t1 = T1(), l = L();
  QPoly quart = c(17) * pw(t0, 4) - c(4) * pw(t0, 3) * t1 + c(6) * pw(t0, 2) * pw(t1, 2) - c(4) * t0 * pw(t1, 3) +
                pw(t1, 4);
  QPoly den = pw(t0, 4) * pw(l, 4);
  QPoly n2 = (c(3) * pw(t0, 2) + pw(t1, 2)) * (c(7) * pw(t0, 2) - c(4) * t0 * t1 + pw(t1, 2)) *
             (c(13) * pw(t0, 4) + c(4) * pw(t0, 3) * t1 + c(2) * pw(t0, 2) * pw(t1, 2) - c(4) * t0 * pw(t1, 3) + pw(t1, 4));
  return {prj3d::RatFn::make(pw(quart, 2), c(384) * den), prj3d::RatFn::make(n2, c(96) * den)};
}

/// k t0^e0 t1^e1 u^e2 v^e3
inline prj3d::IBiPoly mono(long k, int e0, int e1, int e2, int e3) {
  prj3d::IBiPoly r = prj3d::IBiPoly::filled(e0 + e1, e2 + e3);
  r.at(e1, e3) = prj3d::Int(k);
  return r;
}

inline prj3d::IBiPoly sum(std::initializer_list<prj3d::IBiPoly> terms) {
  prj3d::IBiPoly r;
  for (const auto& t : terms) r += t;
  return r;
}

/// Reference six-factor gcd of E1, E2 for the example pair.
inline prj3d::IBiPoly golden_gcd() {
  std::vector<prj3d::IBiPoly> f = {
      sum({mono(1, 1, 0, 0, 1), mono(-1, 0, 1, 1, 0)}),
      sum({mono(3, 1, 0, 1, 0), mono(1, 1, 0, 0, 1), mono(1, 0, 1, 1, 0), mono(-1, 0, 1, 0, 1)}),
      sum({mono(5, 1, 0, 1, 0), mono(-1, 1, 0, 0, 1), mono(-1, 0, 1, 1, 0), mono(1, 0, 1, 0, 1)}),
      sum({mono(2, 1, 0, 1, 0), mono(-1, 1, 0, 0, 1), mono(-1, 0, 1, 1, 0)}),
      sum({mono(2, 2, 0, 2, 0), mono(-2, 2, 0, 1, 1), mono(1, 2, 0, 0, 2), mono(-2, 1, 1, 2, 0), mono(1, 0, 2, 2, 0)}),
      sum({mono(17, 2, 0, 2, 0), mono(-2, 2, 0, 1, 1), mono(1, 2, 0, 0, 2), mono(-2, 1, 1, 2, 0), mono(4, 1, 1, 1, 1),
           mono(-2, 1, 1, 0, 2), mono(1, 0, 2, 2, 0), mono(-2, 0, 2, 1, 1), mono(1, 0, 2, 0, 2)}),
  };
  prj3d::IBiPoly g = f[0];
  for (std::size_t i = 1; i < f.size(); ++i) g = g * f[i];
  return g;
}

inline prj3d::Mat4<prj3d::Scalar> mat(std::initializer_list<std::initializer_list<long>> rows) {
  prj3d::Mat4<prj3d::Scalar> m;
  int i = 0;
  for (auto r : rows) {
    int k = 0;
    for (long x : r) m[i][k++] = prj3d::Scalar(x);
    ++i;
  }
  return m;
}

inline prj3d::Moebius mob(long a, long b, long c, long d) {
  return prj3d::Moebius{prj3d::Scalar(a), prj3d::Scalar(b), prj3d::Scalar(c), prj3d::Scalar(d)};
}

struct GoldenPair {
  prj3d::Moebius phi;
  prj3d::Mat4<prj3d::Scalar> M;
};

/// The four reference (phi_i, M_i) of the example pair, M2 and M4 scaled by 16.
inline std::vector<GoldenPair> golden_pairs() {
  return {
      {mob(1, 0, 2, -1), mat({{1, -1, 1, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}, {0, 1, 0, 0}})},
      {mob(-1, 1, 3, 1), mat({{16, -16, 16, 0}, {0, 0, 0, 16}, {0, 0, 16, 0}, {0, 16, 0, 0}})},
      {prj3d::Moebius::identity(), mat({{1, -1, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, 1}, {0, 1, 0, 0}})},
      {mob(1, -1, 5, -1), mat({{16, -16, 16, 0}, {0, 0, 0, -16}, {0, 0, -16, 0}, {0, 16, 0, 0}})},
  };
}

struct Benchmark {
  int degree;
  Curve curve;
  int symmetries;  // number of symmetries, identity included
};

inline std::vector<Benchmark> table_curves() {
  std::vector<Benchmark> r;
  r.push_back({4, Curve::from_ints(4, {{1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}}), 4});
  r.push_back({6,
               Curve::from_ints(6, {{125, 450, 690, 576, 276, 72, 8},
                                    {-27, -54, -36, -8, 0, 0, 0},
                                    {64, 288, 528, 504, 264, 72, 8},
                                    {21, 122, 216, 168, 60, 8, 0}}),
               4});
  r.push_back({8,
               Curve::from_ints(8, {{625, 3000, 6400, 7920, 6216, 3168, 1024, 192, 16},
                                    {-2027, -8392, -14344, -12768, -5960, -1056, 224, 128, 16},
                                    {1664, 7744, 16288, 20528, 17040, 9472, 3392, 704, 64},
                                    {405, 1080, 1080, 480, 80, 0, 0, 0, 0}}),
               2});
  r.push_back({9,
               Curve::from_ints(9, {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                                    {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                                    {0, 0, 0, 1, 0, 1, 0, 0, 0, 0}}),
               2});
  r.push_back({10,
               Curve::from_ints(10, {{49, -22, 87, 84, 75, -96, -28, -76, -36, -55, 27},
                                     {97, -97, -73, 57, 73, 64, -20, 85, 99, 57, 96},
                                     {74, -69, -9, 47, 44, -62, 8, -84, 38, -1, 55},
                                     {-35, -35, 63, 41, 16, -77, 76, 95, 56, -16, -95}}),
               1});
  r.push_back({11,
               Curve::from_ints(11, {{-62, -16, 68, -15, -31, 62, -14, 67, 49, 52, -20, -74},
                                     {-19, -68, -48, 45, 59, -96, -6, 89, 41, 20, 25, 0},
                                     {-80, 42, -67, 63, -81, 76, -44, -59, -11, -75, -84, 47},
                                     {-27, -34, 96, 82, -58, 59, 36, 33, 35, 27, 46, 19}}),
               1});
  r.push_back({12,
               Curve::from_ints(12, {{-62, -26, 46, 65, -51, 60, -56, -46, 86, -31, 84, 5, 25},
                                     {-17, 79, 73, -78, 13, 93, 64, -70, -71, -51, -71, 10, 0},
                                     {-76, -25, 38, 89, -92, -84, -77, -34, -20, 73, -94, 99, 18},
                                     {39, -77, -70, -49, -46, 34, -84, 98, 41, -46, 13, -3, 8}}),
               1});
  return r;
}

}  // namespace fixtures
