#pragma once

// Shared test helpers: seeded generators and oracles that do not reuse the
// library code paths they check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hurwitz/endomorphism.hpp"
#include "hurwitz/poly.hpp"

namespace hurwitz::testing {

inline RingContext ctx(const RingSpec& spec) { return make_ring(spec); }

inline std::vector<Elem> all_elements(const FiniteRing& r) {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < r.size(); ++i) out.push_back(Elem{i});
  return out;
}

/// Uniform random element.
inline Elem random_elem(std::mt19937_64& rng, const FiniteRing& r) {
  return Elem{std::uniform_int_distribution<std::uint32_t>(0, r.size() - 1)(rng)};
}

/// Random polynomial with support inside {0..max_degree}; about a third
/// of the coefficients are forced to zero so sparse shapes come up.
inline HPoly random_poly(std::mt19937_64& rng, const RingPtr& r, Degree max_degree) {
  std::vector<std::pair<Degree, Elem>> terms;
  for (Degree d = 0; d <= max_degree; ++d) {
    if (rng() % 3 == 0) continue;
    terms.emplace_back(d, random_elem(rng, *r));
  }
  return HPoly::make(r, std::move(terms));
}

/// Random nonempty subset of size at most k.
inline std::vector<Elem> random_subset(std::mt19937_64& rng, const FiniteRing& r, std::size_t k) {
  const std::size_t n = 1 + rng() % k;
  std::set<Elem> s;
  while (s.size() < n && s.size() < r.size()) s.insert(random_elem(rng, r));
  return {s.begin(), s.end()};
}

/// Exact C(n, k) for n <= 62.
inline std::uint64_t exact_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// c copies of x added together.
inline Elem repeat_add(const FiniteRing& r, std::uint64_t c, Elem x) {
  Elem acc = r.zero();
  for (std::uint64_t i = 0; i < c; ++i) acc = r.add(acc, x);
  return acc;
}

/// Dense evaluation of the product formula with exact integer binomials
/// and alpha^k applied by repetition.
inline HPoly naive_mul(const HPoly& f, const HPoly& g, const Endomorphism& alpha) {
  const FiniteRing& r = f.ring();
  if (f.is_zero() || g.is_zero()) return HPoly(f.ring_ptr());
  const Degree top = *f.degree() + *g.degree();
  std::vector<std::pair<Degree, Elem>> out;
  for (Degree n = 0; n <= top; ++n) {
    Elem acc = r.zero();
    for (Degree k = 0; k <= n; ++k) {
      Elem gk = g.coeff(n - k);
      for (Degree j = 0; j < k; ++j) gk = alpha.apply(gk);
      const Elem term = r.mul(f.coeff(k), gk);
      acc = r.add(acc, repeat_add(r, exact_binomial(n, k) % r.characteristic(), term));
    }
    out.emplace_back(n, acc);
  }
  return HPoly::make(f.ring_ptr(), std::move(out));
}

/// Left or right annihilator by scanning every element with ring.mul.
inline std::vector<Elem> brute_annihilator(const FiniteRing& r, const std::vector<Elem>& fs, bool left) {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    bool kills = true;
    for (Elem f : fs) kills = kills && r.is_zero(left ? r.mul(Elem{i}, f) : r.mul(f, Elem{i}));
    if (kills) out.push_back(Elem{i});
  }
  return out;
}

}  // namespace hurwitz::testing
