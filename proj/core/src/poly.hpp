#pragma once

// Dense univariate polynomials over a finite field, parameterised by an
// arithmetic object exposing add/sub/mul/inv/order. Only what the modulus
// search needs: products, remainders, gcd and modular powering.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qfcodes/field.hpp"

namespace qfc::detail {

using Poly = std::vector<Elem>;  // coefficient of x^i at index i

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

template <class Ops>
Poly poly_sub(const Ops& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

template <class Ops>
Poly poly_mul(const Ops& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

// Remainder of a modulo a nonzero f.
template <class Ops>
Poly poly_mod(const Ops& F, Poly a, const Poly& f) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const Elem lead_inv = F.inv(f.back());
  while (a.size() > df) {
    const Elem factor = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = F.sub(a[shift + i], F.mul(factor, f[i]));
    }
    trim(a);
  }
  return a;
}

template <class Ops>
Poly poly_gcd(const Ops& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem lead_inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, lead_inv);
  }
  return a;
}

template <class Ops>
Poly poly_powmod(const Ops& F, Poly base, std::uint64_t exponent, const Poly& f) {
  Poly result{1};
  base = poly_mod(F, std::move(base), f);
  while (exponent != 0) {
    if (exponent & 1U) result = poly_mod(F, poly_mul(F, result, base), f);
    base = poly_mod(F, poly_mul(F, base, base), f);
    exponent >>= 1U;
  }
  return result;
}

// Distinct-degree test: f of degree d is irreducible iff it has no factor of
// degree k <= d/2, i.e. gcd(x^(q^k) - x, f) = 1 for every such k.
template <class Ops>
bool is_irreducible(const Ops& F, const Poly& f) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    h = poly_powmod(F, h, F.order(), f);
    Poly g = poly_gcd(F, poly_sub(F, h, x), f);
    if (g.size() > 1) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree d: the low
// coefficients c_0..c_{d-1} read as a base-q integer with c_0 least
// significant, searched upward from zero.
template <class Ops>
Poly smallest_irreducible(const Ops& F, unsigned d) {
  const std::uint64_t q = F.order();
  Poly f(d + 1, 0);
  f[d] = 1;
  for (;;) {
    if (is_irreducible(F, f)) return f;
    std::size_t i = 0;
    while (i < d) {
      if (++f[i] < q) break;
      f[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return {};  // unreachable: irreducibles of every degree exist
}

}  // namespace qfc::detail
