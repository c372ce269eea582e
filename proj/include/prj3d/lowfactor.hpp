#pragma once

// Factors of degree at most two of an integer polynomial, over Q.
// Modular splitting (distinct- and equal-degree) followed by Hensel lifting
// and trial division; everything reported is an exact divisor.

#include <vector>

#include "modular.hpp"
#include "random.hpp"
#include "upoly.hpp"

namespace prj3d::lowfactor {

using upoly::ZPoly;

namespace detail {

// Polynomials over Z / m with nonnegative residues.
inline ZPoly mod_reduce(ZPoly a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  upoly::trim(a);
  return a;
}

inline ZPoly mod_mul(const ZPoly& a, const ZPoly& b, const Int& m) { return mod_reduce(upoly::mul(a, b), m); }

// Division by a monic b over Z / m.
inline void mod_divrem(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
  r = mod_reduce(a, m);
  int db = upoly::deg(b);
  if (upoly::deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, Int(0));
  for (int i = upoly::deg(r); i >= db; --i) {
    Int c = r[i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  r = mod_reduce(r, m);
  q = mod_reduce(q, m);
}

inline ZPoly to_z(const mod::Poly& a) {
  ZPoly r;
  for (auto x : a) r.push_back(Int(static_cast<unsigned long>(x)));
  return r;
}

// s a + t b = 1 mod p for coprime a, b.
inline void xgcd(const mod::Field& F, const mod::Poly& a, const mod::Poly& b, mod::Poly& s, mod::Poly& t) {
  mod::Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    mod::Poly q, r;
    mod::divrem(F, r0, r1, q, r);
    mod::Poly s2 = mod::sub(F, s0, mod::mul(F, q, s1));
    mod::Poly t2 = mod::sub(F, t0, mod::mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant
  mod::u64 inv = F.inv(r0[0]);
  s = mod::scale(F, s0, inv);
  t = mod::scale(F, t0, inv);
}

// Lift f = g h (mod p), h monic, to f = G H (mod p^k) with p^k > bound. Returns H.
inline ZPoly hensel_lift(const ZPoly& f, const mod::Field& F, const mod::Poly& g_p, const mod::Poly& h_p,
                         const Int& bound) {
  mod::Poly s_p, t_p;
  xgcd(F, g_p, h_p, s_p, t_p);
  const Int p = Int(static_cast<unsigned long>(F.p));
  ZPoly g = to_z(g_p), h = to_z(h_p), s = to_z(s_p), t = to_z(t_p);
  Int m = p;
  while (m <= bound) {
    Int m2 = m * m;
    ZPoly e = mod_reduce(upoly::sub(f, upoly::mul(g, h)), m2);
    ZPoly q, r;
    mod_divrem(upoly::mul(s, e), h, m2, q, r);
    ZPoly g2 = mod_reduce(upoly::add(upoly::add(g, upoly::mul(t, e)), upoly::mul(q, g)), m2);
    ZPoly h2 = mod_reduce(upoly::add(h, r), m2);
    ZPoly b = mod_reduce(upoly::sub(upoly::add(upoly::mul(s, g2), upoly::mul(t, h2)), ZPoly{Int(1)}), m2);
    ZPoly c, d;
    mod_divrem(upoly::mul(s, b), h2, m2, c, d);
    s = mod_reduce(upoly::sub(s, d), m2);
    t = mod_reduce(upoly::sub(upoly::sub(t, upoly::mul(t, b)), upoly::mul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  // symmetric range is applied by the caller after multiplying by lc(f)
  h.resize(h_p.size(), Int(0));
  return h;
}

// Equal-degree splitting of a squarefree product of monic irreducibles of degree k.
inline void split_equal_degree(const mod::Field& F, const mod::Poly& g, int k, Pcg32& rng,
                               std::vector<mod::Poly>& out) {
  int d = mod::deg(g);
  if (d == k) {
    out.push_back(g);
    return;
  }
  mod::u128 q = 1;
  for (int i = 0; i < k; ++i) q *= F.p;
  mod::u128 e = (q - 1) / 2;
  for (;;) {
    mod::Poly a(d);
    for (auto& x : a) x = (static_cast<mod::u64>(rng()) << 32 | rng()) % F.p;
    mod::trim(a);
    if (mod::deg(a) < 1) continue;
    mod::Poly b = mod::powmod(F, a, e, g);
    b = mod::sub(F, b, mod::Poly{1});
    mod::Poly h = mod::gcd(F, g, b);
    int dh = mod::deg(h);
    if (dh <= 0 || dh == d) continue;
    mod::Poly q2, r;
    mod::divrem(F, g, h, q2, r);
    split_equal_degree(F, h, k, rng, out);
    split_equal_degree(F, mod::monic(F, q2), k, rng, out);
    return;
  }
}

inline Int norm2_ceil(const ZPoly& f) {
  Int s = 0;
  for (const auto& c : f) s += c * c;
  Int r = isqrt(s);
  if (r * r < s) r += 1;
  return r;
}

}  // namespace detail

struct LowFactors {
  std::vector<ZPoly> linear;     // primitive, positive leading coefficient
  std::vector<ZPoly> quadratic;  // irreducible over Q
  int leftover_degree = 0;       // degree not accounted for by factors of degree <= 2
};

/// All distinct irreducible factors of degree 1 and 2 of f over Q.
inline LowFactors low_degree_factors(const ZPoly& f_in) {
  LowFactors out;
  ZPoly f = upoly::primitive(f_in);
  if (upoly::deg(f) < 1) return out;
  f = upoly::primitive(upoly::squarefree_part(f));
  int n = upoly::deg(f);

  // a prime keeping the degree and squarefreeness
  mod::Field F{0};
  mod::Poly fp;
  for (std::size_t i = 0;; ++i) {
    F = mod::Field{mod::prime(i)};
    if (F.reduce(f.back()) == 0) continue;
    fp = mod::reduce(F, f);
    if (mod::deg(mod::gcd(F, fp, mod::derivative(F, fp))) == 0) break;
  }
  mod::Poly fm = mod::monic(F, fp);
  mod::Poly x{0, 1};

  // distinct-degree parts for degrees 1 and 2
  mod::Poly xp = mod::powmod(F, x, F.p, fm);
  mod::Poly g1 = mod::gcd(F, fm, mod::sub(F, xp, x));
  mod::Poly rest, r;
  mod::divrem(F, fm, g1, rest, r);
  mod::Poly g2{1};
  if (mod::deg(rest) >= 2) {
    mod::Poly xpp = mod::powmod(F, xp, F.p, rest);  // x^(p^2) mod rest
    g2 = mod::gcd(F, rest, mod::sub(F, xpp, mod::rem(F, x, rest)));
  }

  Pcg32 rng(0x6c6f77u);
  std::vector<mod::Poly> lin, quad;
  if (mod::deg(g1) >= 1) detail::split_equal_degree(F, g1, 1, rng, lin);
  if (mod::deg(g2) >= 2) detail::split_equal_degree(F, g2, 2, rng, quad);

  const Int lc = abs(f.back());
  const Int bound = 2 * lc * 4 * detail::norm2_ceil(f);
  const Int p = Int(static_cast<unsigned long>(F.p));

  auto lift = [&](const mod::Poly& h) {
    mod::Poly g, rr;
    mod::divrem(F, fp, h, g, rr);
    return detail::hensel_lift(f, F, g, h, bound);
  };
  // modulus reached by hensel_lift for this bound
  Int pk = p;
  while (pk <= bound) pk *= pk;

  auto accept = [&](const ZPoly& monic_lift) -> ZPoly {
    ZPoly c = detail::mod_reduce(upoly::scale(monic_lift, f.back()), pk);
    for (auto& x : c) x = mod::symmetric(x, pk);
    c = upoly::primitive(c);
    if (upoly::deg(c) < 1 || !upoly::divides(c, f)) return {};
    return c;
  };

  std::vector<ZPoly> lifted_lin;
  for (const auto& l : lin) lifted_lin.push_back(lift(l));
  std::vector<bool> used(lin.size(), false);
  int found_degree = 0;
  for (std::size_t i = 0; i < lin.size(); ++i) {
    ZPoly c = accept(lifted_lin[i]);
    if (!c.empty()) {
      out.linear.push_back(c);
      used[i] = true;
      found_degree += 1;
    }
  }
  // rational quadratics splitting into two linear factors mod p
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < lin.size(); ++j) {
      if (used[j] || used[i]) continue;
      ZPoly prod = detail::mod_mul(lifted_lin[i], lifted_lin[j], pk);
      ZPoly c = accept(prod);
      if (!c.empty()) {
        out.quadratic.push_back(c);
        used[i] = used[j] = true;
        found_degree += 2;
      }
    }
  }
  for (const auto& q : quad) {
    ZPoly c = accept(lift(q));
    if (!c.empty()) {
      out.quadratic.push_back(c);
      found_degree += 2;
    }
  }
  out.leftover_degree = n - found_degree;
  return out;
}

}  // namespace prj3d::lowfactor
