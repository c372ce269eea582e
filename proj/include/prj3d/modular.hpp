#pragma once

// Word-size prime field arithmetic and dense univariate polynomials over Z/p,
// the image domain of the modular gcd and factoring routines.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace prj3d::mod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// i-th prime above 2^61 (cached, thread-safe).
inline u64 prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= i) {
    Int p = cache.empty() ? Int(1) << 61 : Int(static_cast<unsigned long>(cache.back()));
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    cache.push_back(p.get_ui());
  }
  return cache[i];
}

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p ? r - p : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u128 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Int& x) const {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    return r.get_ui();
  }
  u64 reduce(const Rat& x) const {
    return mul(reduce(x.get_num()), inv(reduce(x.get_den())));
  }
  u64 from_signed(long v) const { return v >= 0 ? static_cast<u64>(v) % p : neg(static_cast<u64>(-v) % p); }
};

/// Dense polynomial, ascending powers, no trailing zeros (empty = 0).
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly reduce(const Field& F, const std::vector<Int>& a) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.reduce(a[i]);
  trim(r);
  return r;
}

inline u64 eval(const Field& F, const Poly& a, u64 x) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

inline Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

inline Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

inline Poly scale(const Field& F, const Poly& a, u64 c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  // accumulate in 128 bits, reducing every few terms
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  Poly r(acc.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<u128>(a[i]) * b[j];
      if (acc[i + j] >= (static_cast<u128>(1) << 126)) acc[i + j] %= F.p;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % F.p);
  trim(r);
  return r;
}

/// a = q*b + r; b nonzero.
inline void divrem(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  int db = deg(b);
  if (deg(a) < db) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  u64 ilc = F.inv(b.back());
  for (int i = deg(r); i >= db; --i) {
    u64 c = F.mul(r[i], ilc);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

inline Poly rem(const Field& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(F, a, b, q, r);
  return r;
}

inline Poly monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

/// Monic gcd (0 if both zero).
inline Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

inline Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

/// base^e mod m.
inline Poly powmod(const Field& F, Poly base, u128 e, const Poly& m) {
  Poly r{1};
  base = rem(F, base, m);
  while (e) {
    if (e & 1) r = rem(F, mul(F, r, base), m);
    e >>= 1;
    if (e) base = rem(F, mul(F, base, base), m);
  }
  return r;
}

/// Garner step: combine x (mod P, symmetric range not required) with residue r mod p.
inline void crt_step(Int& x, const Int& P, u64 r, const Field& F, u64 P_inv_mod_p) {
  u64 xm = F.reduce(x);
  u64 t = F.mul(F.sub(r, xm), P_inv_mod_p);
  if (t) x += P * Int(static_cast<unsigned long>(t));
}

/// Symmetric representative of x modulo P.
inline Int symmetric(const Int& x, const Int& P) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
  if (2 * r > P) r -= P;
  return r;
}

}  // namespace prj3d::mod
