#include <gtest/gtest.h>

#include "prj3d/bihpoly.hpp"
#include "prj3d/hpoly.hpp"
#include "prj3d/random.hpp"

using namespace prj3d;

namespace {

IPoly P(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return IPoly(static_cast<int>(v.size()) - 1, v);
}

IPoly random_ipoly(Pcg32& rng, int m, int tau = 6) {
  for (;;) {
    std::vector<Int> v;
    for (int j = 0; j <= m; ++j) v.push_back(rng.bits(tau));
    IPoly p(m, v);
    if (!p.is_zero() && p[0] != 0 && p[m] != 0) return p;
  }
}

// independent convolution oracle
std::vector<Int> convolve(const IPoly& a, const IPoly& b) {
  std::vector<Int> r(a.degree() + b.degree() + 1, Int(0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

Rat monomial_sum(const IPoly& a, const Rat& x0, const Rat& x1) {
  Rat s = 0;
  int m = a.degree();
  for (int j = 0; j <= m; ++j) {
    Rat t = Rat(a[j]);
    for (int k = 0; k < m - j; ++k) t *= x0;
    for (int k = 0; k < j; ++k) t *= x1;
    s += t;
  }
  return s;
}

}  // namespace

TEST(HPoly, Arithmetic) {
  EXPECT_EQ(P({1, 1}) * P({1, -1}), P({1, 0, -1}));
  EXPECT_EQ(P({1, 0, 0}) + P({0, 1, 0}), P({1, 1, 0}));
  EXPECT_EQ((P({1, 0, 0}) + P({0, 1, 0})).degree(), 2);
  try {
    (void)(P({1, 0}) + P({1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeMismatch);
  }
  EXPECT_TRUE((P({1, 2}) - P({1, 2})).is_zero());
  EXPECT_EQ((P({1, 2}) - P({1, 2})).degree(), -1);
}

TEST(HPoly, MulMatchesConvolutionOracle) {
  Pcg32 rng(5);
  for (int it = 0; it < 50; ++it) {
    IPoly a = random_ipoly(rng, rng.range(0, 6)), b = random_ipoly(rng, rng.range(0, 6));
    EXPECT_EQ((a * b).coeffs(), convolve(a, b));
  }
}

TEST(HPoly, Derivatives) {
  IPoly x = P({0, 1, 0});  // t0 t1 ... as degree 2: coefficient of t0 t1
  EXPECT_EQ(x.diff(0), P({0, 1}));
  IPoly t0sq_t1 = P({0, 1, 0, 0});  // t0^2 t1
  EXPECT_EQ(t0sq_t1.diff(0), P({0, 2, 0}));
  EXPECT_TRUE(t0sq_t1.diff(0, 3).is_zero());
  EXPECT_EQ(t0sq_t1.diff(1), P({1, 0, 0}));
}

TEST(HPoly, EulerIdentity) {
  Pcg32 rng(9);
  IPoly t0 = P({1, 0}), t1 = P({0, 1});
  for (int it = 0; it < 30; ++it) {
    int n = rng.range(1, 12);
    IPoly a = random_ipoly(rng, n);
    EXPECT_EQ(t0 * a.diff(0) + t1 * a.diff(1), Int(n) * a);
  }
}

TEST(HPoly, Eval) {
  IPoly a = P({1, 0, -1});
  EXPECT_EQ(a.eval(Int(1), Int(1)), 0);
  EXPECT_EQ(a.eval(Int(2), Int(1)), 3);
  Pcg32 rng(2);
  for (int it = 0; it < 30; ++it) {
    IPoly b = random_ipoly(rng, rng.range(0, 9));
    Rat x0 = make_rat(rng.range(-9, 9), rng.range(1, 5)), x1 = make_rat(rng.range(-9, 9), rng.range(1, 5));
    EXPECT_EQ(b.eval(x0, x1), monomial_sum(b, x0, x1));
  }
}

TEST(HPoly, GcdExamples) {
  EXPECT_EQ(hp_gcd(P({1, 0, -1}), P({1, -2, 1})), P({1, -1}));
  EXPECT_EQ(hp_gcd(P({-2, 4, 6}), IPoly()), P({1, -2, -3}));
  try {
    hp_gcd(IPoly(), IPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
  // monomial factors are handled outside the dehomogenized gcd
  EXPECT_EQ(hp_gcd(P({0, 0, 1, 1}), P({0, 1, 0, 0})), P({0, 1}));
  EXPECT_EQ(hp_gcd(P({1, 0, 0}), P({1, 1, 0})), P({1}).shift(1, 0));
}

TEST(HPoly, GcdPlantedRandom) {
  Pcg32 rng(13);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    IPoly A = random_ipoly(rng, rng.range(1, 6)), B = random_ipoly(rng, rng.range(1, 6)),
          C = random_ipoly(rng, rng.range(1, 6));
    if (hp_gcd(B, C).degree() != 0) continue;
    ++checked;
    IPoly g = hp_gcd(A * B, A * C);
    EXPECT_EQ(g, normalize(A));
    EXPECT_EQ(hp_gcd_prs(A * B, A * C), g);
    // swap and scaling invariance
    EXPECT_EQ(hp_gcd(Int(-6) * (A * C), Int(4) * (A * B)), g);
    // cofactors coprime
    EXPECT_EQ(hp_gcd(hp_div_exact(A * B, g), hp_div_exact(A * C, g)).degree(), 0);
  }
  EXPECT_GT(checked, 20);
}

TEST(HPoly, GcdModularAgreesWithPrsOnHighDegree) {
  Pcg32 rng(21);
  for (int it = 0; it < 5; ++it) {
    IPoly A = random_ipoly(rng, 25, 40), B = random_ipoly(rng, 30, 40), C = random_ipoly(rng, 28, 40);
    IPoly a = A * B, b = A * C;
    EXPECT_EQ(hp_gcd(a, b), hp_gcd_prs(a, b));
  }
}

TEST(HPoly, ExactDivision) {
  EXPECT_EQ(hp_div_exact(P({1, 0, -1}), P({1, -1})), P({1, 1}));
  try {
    hp_div_exact(P({1, 0, 1}), P({1, -1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
  Pcg32 rng(17);
  for (int it = 0; it < 30; ++it) {
    IPoly A = random_ipoly(rng, rng.range(0, 7)), B = random_ipoly(rng, rng.range(0, 7));
    EXPECT_EQ(hp_div_exact(A * B, A), B);
    QPoly Aq = A.cast<Rat>(), Bq = make_rat(1, 3) * B.cast<Rat>();
    EXPECT_EQ(hp_div_exact(Aq * Bq, Aq), Bq);
  }
}

TEST(HPoly, ComposeRoundTrip) {
  Pcg32 rng(19);
  for (int it = 0; it < 20; ++it) {
    QPoly a = random_ipoly(rng, rng.range(1, 8)).cast<Rat>();
    Rat A = rng.range(-5, 5), B = rng.range(-5, 5), C = rng.range(-5, 5), D = rng.range(-5, 5);
    Rat det = A * D - B * C;
    if (det == 0) continue;
    QPoly b = hp_compose(a, A, B, C, D);
    // inverse map by the adjugate; composition gives a scaled by det^m
    QPoly back = hp_compose(b, D, -B, -C, A);
    Rat s = 1;
    for (int k = 0; k < a.degree(); ++k) s *= det;
    EXPECT_EQ(back, s * a);
  }
}

TEST(RatFn, ReductionAndConstants) {
  IPoly f = P({1, -1}), g = P({2, 1});
  RatFn r = RatFn::make(Int(6) * (f * g), Int(-4) * (g * g));
  EXPECT_EQ(r.den, normalize(g).cast<Rat>());
  EXPECT_EQ(r.num, make_rat(-3, 2) * f.cast<Rat>());
  EXPECT_FALSE(is_constant(r));
  Rat lambda;
  EXPECT_TRUE(is_constant(RatFn::make(Int(2) * g, g), &lambda));
  EXPECT_EQ(lambda, 2);
  EXPECT_TRUE(is_constant(RatFn::make(g, g), &lambda));
  EXPECT_EQ(lambda, 1);
}

namespace {

IBiPoly random_bipoly(Pcg32& rng, int m1, int m2, int tau = 5) {
  for (;;) {
    std::vector<Int> v;
    for (int i = 0; i < (m1 + 1) * (m2 + 1); ++i) v.push_back(rng.bits(tau));
    IBiPoly p(m1, m2, v);
    if (!p.is_zero()) return p;
  }
}

// bilinear F = u(c t0 + d t1) - v(a t0 + b t1)
IBiPoly bilinear(long a, long b, long c, long d) { return IBiPoly(1, 1, {Int(c), Int(-a), Int(d), Int(-b)}); }

// four-variable expansion oracle: sum over monomials at a point
Rat expand_eval(const IBiPoly& p, const Rat& t0, const Rat& t1, const Rat& u, const Rat& v) {
  Rat s = 0;
  for (int i = 0; i <= p.m1(); ++i)
    for (int k = 0; k <= p.m2(); ++k) {
      Rat term = Rat(p(i, k));
      for (int e = 0; e < p.m1() - i; ++e) term *= t0;
      for (int e = 0; e < i; ++e) term *= t1;
      for (int e = 0; e < p.m2() - k; ++e) term *= u;
      for (int e = 0; e < k; ++e) term *= v;
      s += term;
    }
  return s;
}

}  // namespace

TEST(BiHPoly, OuterProduct) {
  IBiPoly t0u = bh_outer(P({1, 0}), P({1, 0}));
  EXPECT_EQ(t0u, IBiPoly(1, 1, {Int(1), Int(0), Int(0), Int(0)}));
  EXPECT_EQ(t0u - Int(0) * bh_outer(P({0, 1}), P({0, 1})), t0u);
  try {
    (void)(t0u + bh_outer(P({1, 0, 0}), P({1, 0})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BidegreeMismatch);
  }
}

TEST(BiHPoly, MulMatchesExpansionOracle) {
  Pcg32 rng(23);
  for (int it = 0; it < 20; ++it) {
    IBiPoly a = random_bipoly(rng, rng.range(0, 3), rng.range(0, 3));
    IBiPoly b = random_bipoly(rng, rng.range(0, 3), rng.range(0, 3));
    Rat t0 = rng.range(-4, 4), t1 = make_rat(rng.range(-4, 4), 3), u = rng.range(-4, 4), v = make_rat(1, rng.range(1, 4));
    EXPECT_EQ(expand_eval(a * b, t0, t1, u, v), expand_eval(a, t0, t1, u, v) * expand_eval(b, t0, t1, u, v));
  }
}

TEST(BiHPoly, Specialize) {
  IBiPoly f = IBiPoly(1, 1, {Int(0), Int(1), Int(-1), Int(0)});  // t0 v - t1 u
  EXPECT_EQ(bh_specialize<Int>(f, Side::T, Int(1), Int(2)), P({-2, 1}));
  EXPECT_EQ(bh_specialize<Int>(f, Side::U, Int(0), Int(1)), P({1, 0}));
  Pcg32 rng(29);
  for (int it = 0; it < 20; ++it) {
    IBiPoly a = random_bipoly(rng, rng.range(0, 4), rng.range(0, 4));
    Rat x0 = rng.range(-3, 3), x1 = make_rat(rng.range(-5, 5), 2), y0 = rng.range(-3, 3), y1 = rng.range(-3, 3);
    EXPECT_EQ(bh_specialize<Rat>(a, Side::T, x0, x1).eval(y0, y1), expand_eval(a, x0, x1, y0, y1));
    EXPECT_EQ(bh_specialize<Rat>(a, Side::U, y0, y1).eval(x0, x1), expand_eval(a, x0, x1, y0, y1));
  }
}

TEST(BiHPoly, ExactDivision) {
  Pcg32 rng(31);
  for (int it = 0; it < 20; ++it) {
    IBiPoly a = random_bipoly(rng, rng.range(0, 4), rng.range(0, 4)), b = random_bipoly(rng, rng.range(0, 3), rng.range(0, 3));
    EXPECT_EQ(bh_div_exact(a * b, b), a);
  }
  IBiPoly f = bilinear(1, 0, 0, 1);
  EXPECT_EQ(bh_div_exact(f, f), IBiPoly(0, 0, {Int(1)}));
  try {
    bh_div_exact(bilinear(1, 2, 3, 4) * bilinear(2, 1, 1, 1) + IBiPoly(2, 2, std::vector<Int>(9, Int(1))), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
}

TEST(BiHPoly, GcdPlanted) {
  Pcg32 rng(37);
  for (int it = 0; it < 15; ++it) {
    IBiPoly F = bilinear(rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5), rng.range(1, 5));
    IBiPoly R1 = random_bipoly(rng, rng.range(1, 5), rng.range(1, 5)), R2 = random_bipoly(rng, rng.range(1, 5), rng.range(1, 5));
    IBiPoly g = bh_gcd(F * R1, F * R2);
    EXPECT_TRUE(bh_divides(normalize(F), g)) << g.str();
    EXPECT_TRUE(bh_divides(g, F * R1));
    EXPECT_TRUE(bh_divides(g, F * R2));
    EXPECT_EQ(bh_gcd_prs(F * R1, F * R2), g);
    EXPECT_EQ(bh_gcd(F * R2, Int(-3) * (F * R1)), g);
    IBiPoly c1 = bh_div_exact(F * R1, g), c2 = bh_div_exact(F * R2, g);
    IBiPoly h = bh_gcd(c1, c2);
    EXPECT_EQ(h.bidegree(), std::make_pair(0, 0));
  }
}

TEST(BiHPoly, GcdMonomialsAndEdgeCases) {
  IBiPoly t0 = bh_outer(P({1, 0}), P({1})), v = bh_outer(P({1}), P({0, 1}));
  IBiPoly F = bilinear(1, 2, 3, 4);
  EXPECT_EQ(bh_gcd(t0 * v * F, v * v * F), normalize(v * F));
  EXPECT_EQ(bh_gcd(F, IBiPoly()), normalize(F));
  EXPECT_EQ(bh_gcd(Int(6) * F, Int(6) * F), normalize(F));
  try {
    bh_gcd(IBiPoly(), IBiPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
  // content in one variable pair only
  IBiPoly ct = bh_outer(P({1, 1}), P({1}));
  EXPECT_EQ(bh_gcd(ct * F, ct * bilinear(2, 1, 1, 1)), normalize(ct));
}

TEST(BiHPoly, GcdLargerCommonFactor) {
  Pcg32 rng(41);
  for (int it = 0; it < 4; ++it) {
    IBiPoly C = random_bipoly(rng, 3, 4, 20), R1 = random_bipoly(rng, 6, 5, 20), R2 = random_bipoly(rng, 5, 6, 20);
    IBiPoly g = bh_gcd(C * R1, C * R2);
    EXPECT_EQ(g, bh_gcd_prs(C * R1, C * R2));
    EXPECT_TRUE(bh_divides(g, C * R1));
    EXPECT_TRUE(bh_divides(normalize(strip_monomial(C)), g));
  }
}

// Cofactor content in Z[s] must include integer content, otherwise the candidate keeps a factor of 2.
TEST(BiHPoly, GcdIntegerContentRegression) {
  IPoly p0 = IPoly(4, {Int(-2), Int(1), Int(1), Int(-1), Int(-2)});
  IPoly p2 = IPoly(4, {Int(-2), Int(-2), Int(1), Int(0), Int(-2)});
  IPoly p1 = IPoly(4, {Int(-2), Int(0), Int(-2), Int(-2), Int(0)});
  IBiPoly a = bh_outer(p0, p1) - bh_outer(p1, p0);
  IBiPoly b = bh_outer(p0, p2) - bh_outer(p2, p0);
  IBiPoly g = bh_gcd(a, b);
  EXPECT_EQ(g, bh_gcd_prs(a, b));
  EXPECT_EQ(g, IBiPoly(1, 1, {Int(0), Int(1), Int(-1), Int(0)}));
}
