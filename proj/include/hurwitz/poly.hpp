#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/element_set.hpp"
#include "hurwitz/endomorphism.hpp"
#include "hurwitz/ring.hpp"

namespace hurwitz {

using Degree = std::uint32_t;

/// Largest degree a stored polynomial may carry; products stay below twice this.
inline constexpr Degree kMaxDegree = 2048;

struct Term {
  Degree degree;
  Elem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// A skew Hurwitz polynomial: a finitely supported map N -> R.
///
/// Terms are kept sorted by degree with no zero coefficients, so two
/// polynomials over the same ring are equal iff their term lists are.
class HPoly {
 public:
  explicit HPoly(RingPtr ring) : ring_(std::move(ring)) {}

  /// Throws InvalidArgument on a repeated degree; drops zero coefficients.
  static HPoly make(RingPtr ring, std::vector<std::pair<Degree, Elem>> pairs);
  /// h_n: the coefficient 1 at degree n-1 (n >= 1). h_1 is the unity.
  static HPoly basis(RingPtr ring, Degree n);
  /// h'_r: r at degree 0.
  static HPoly constant(RingPtr ring, Elem r);
  static HPoly monomial(RingPtr ring, Degree degree, Elem coeff);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Elem coeff(Degree d) const;
  /// Largest support degree; empty for the zero polynomial.
  std::optional<Degree> degree() const;

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }
  friend bool operator<(const HPoly& a, const HPoly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// supp, the minimal and maximal support degrees and the coefficient at the maximum.
struct SupportStats {
  std::vector<Degree> support;
  Degree pi = 0;
  Degree delta = 0;
  Elem leading;
};

HPoly hp_add(const HPoly& f, const HPoly& g);
HPoly hp_neg(const HPoly& f);
HPoly hp_sub(const HPoly& f, const HPoly& g);

/// (fg)(n) = sum_{k=0..n} C(n,k) f(k) alpha^k(g(n-k)).
HPoly hp_mul(const HPoly& f, const HPoly& g, const Endomorphism& alpha);

/// C(n,k) * 1_R via Pascal's rule reduced modulo the characteristic.
/// Rows are cached per thread.
Elem binom_reduced(std::uint64_t n, std::uint64_t k, const FiniteRing& ring);
/// C(n,k) mod m from the same cache.
std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t m);

/// Throws PreconditionFailed for the zero polynomial.
SupportStats hp_stats(const HPoly& f);

/// { h'_r : r in a }.
std::vector<HPoly> hp_embed_set(const RingPtr& ring, const ElementSet& a);

}  // namespace hurwitz
