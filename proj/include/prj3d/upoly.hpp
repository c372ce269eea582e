#pragma once

// Dense univariate integer polynomials (ascending coefficient vectors) with
// a modular gcd and a primitive-PRS reference gcd.

#include <algorithm>
#include <vector>

#include "modular.hpp"
#include "scalar.hpp"

namespace prj3d::upoly {

using ZPoly = std::vector<Int>;

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline Int content(const ZPoly& a) {
  Int g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides by the content and makes the leading coefficient positive.
inline ZPoly primitive(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Int g = content(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly scale(ZPoly a, const Int& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

inline ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  return r;
}

inline Int eval(const ZPoly& a, const Int& x) {
  Int r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

/// Exact division over Z; returns false when b does not divide a.
inline bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  q.clear();
  if (a.empty()) return true;
  int da = deg(a), db = deg(b);
  if (da < db) return false;
  ZPoly r = a;
  q.assign(da - db + 1, Int(0));
  const Int& lc = b.back();
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return false;
    Int c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[i - db] = std::move(c);
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(q);
  return true;
}

inline bool divides(const ZPoly& b, const ZPoly& a) {
  ZPoly q;
  return divide_exact(a, b, q);
}

/// Pseudo-remainder lc(b)^(da-db+1) a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
  int db = deg(b);
  const Int& lc = b.back();
  while (!a.empty() && deg(a) >= db) {
    Int c = a.back();
    int shift = deg(a) - db;
    for (auto& x : a) x *= lc;
    for (int j = 0; j <= db; ++j) mpz_submul(a[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  return a;
}

/// Reference gcd by the primitive remainder sequence.
inline ZPoly gcd_prs(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  Int c = igcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return scale(primitive(a), c);
}

/// gcd over Z by images modulo word primes, certified by exact division.
inline ZPoly gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  Int ca = content(a), cb = content(b);
  Int c = igcd(ca, cb);
  a = primitive(a);
  b = primitive(b);
  if (deg(a) == 0 || deg(b) == 0) return {c};
  Int gamma = igcd(a.back(), b.back());

  int best = std::min(deg(a), deg(b)) + 1;
  ZPoly H;
  Int P = 0;
  for (std::size_t i = 0;; ++i) {
    mod::Field F{mod::prime(i)};
    if (F.reduce(a.back()) == 0 || F.reduce(b.back()) == 0) continue;
    mod::Poly g = mod::gcd(F, mod::reduce(F, a), mod::reduce(F, b));
    int dg = mod::deg(g);
    if (dg == 0) return {c};
    if (dg > best) continue;
    g = mod::scale(F, g, F.reduce(gamma));
    if (dg < best) {
      best = dg;
      H.assign(g.size(), Int(0));
      for (std::size_t k = 0; k < g.size(); ++k) H[k] = Int(static_cast<unsigned long>(g[k]));
      P = Int(static_cast<unsigned long>(F.p));
      continue;
    }
    bool stable = true;
    for (std::size_t k = 0; k < g.size() && stable; ++k) stable = F.reduce(mod::symmetric(H[k], P)) == g[k];
    if (stable) {
      ZPoly cand(H.size());
      for (std::size_t k = 0; k < H.size(); ++k) cand[k] = mod::symmetric(H[k], P);
      cand = primitive(cand);
      if (divides(cand, a) && divides(cand, b)) return scale(cand, c);
    }
    mod::u64 pinv = F.inv(F.reduce(P));
    for (std::size_t k = 0; k < g.size(); ++k) mod::crt_step(H[k], P, g[k], F, pinv);
    P *= Int(static_cast<unsigned long>(F.p));
  }
}

inline ZPoly squarefree_part(const ZPoly& a) {
  ZPoly g = gcd(a, derivative(a));
  ZPoly q;
  divide_exact(a, g, q);
  return primitive(q);
}

}  // namespace prj3d::upoly
