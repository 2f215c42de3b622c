#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// reference implementation used by the tests, `parallel` is the OpenMP
// version the library calls. Both return identical results on identical
// input; parallel reductions always resolve ties toward the smallest index.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/endomorphism.hpp"
#include "hurwitz/ring.hpp"

namespace hurwitz::kernels {

/// Largest ring for which closed_masks enumerates every subset.
inline constexpr std::uint32_t kMaxMaskRing = 16;

/// Counts of exhaustive law violations over all pairs/triples.
struct LawViolations {
  std::uint64_t additive = 0;
  std::uint64_t associativity = 0;
  std::uint64_t distributivity = 0;
  std::uint64_t unity = 0;
  std::uint64_t total() const { return additive + associativity + distributivity + unity; }
};

namespace serial {

/// Candidates r with r*f = 0 (left) or f*r = 0 (right) for every f in fs,
/// in input order.
std::vector<Elem> annihilator_scan(const FiniteRing& ring, std::span<const Elem> candidates,
                                   std::span<const Elem> fs, Side side);
LawViolations ring_law_violations(const FiniteRing& ring);
std::uint64_t endo_law_violations(const Endomorphism& alpha);
/// Bitmasks of all subsets of a ring with at most kMaxMaskRing elements that
/// contain 0 and are closed under addition, left multiplication (if left),
/// right multiplication (if right) and alpha (if given). Ascending order.
std::vector<std::uint32_t> closed_masks(const FiniteRing& ring, bool left, bool right, const Endomorphism* alpha);

/// Smallest i in [0, n) with pred(i), if any.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

/// All i in [0, n) with pred(i), ascending.
template <class Pred>
std::vector<std::size_t> select(std::size_t n, Pred&& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Elem> annihilator_scan(const FiniteRing& ring, std::span<const Elem> candidates,
                                   std::span<const Elem> fs, Side side);
LawViolations ring_law_violations(const FiniteRing& ring);
std::uint64_t endo_law_violations(const Endomorphism& alpha);
std::vector<std::uint32_t> closed_masks(const FiniteRing& ring, bool left, bool right, const Endomorphism* alpha);

/// pred must be safe to call concurrently and must not throw.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t n, Pred&& pred) {
  const auto count = static_cast<std::int64_t>(n);
  std::int64_t best = count;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t current;
#pragma omp atomic read
    current = best;
    if (i >= current) continue;
    if (pred(static_cast<std::size_t>(i))) {
#pragma omp critical(hurwitz_first_match)
      best = std::min(best, i);
    }
  }
  if (best == count) return std::nullopt;
  return static_cast<std::size_t>(best);
}

template <class Pred>
std::vector<std::size_t> select(std::size_t n, Pred&& pred) {
  std::vector<std::uint8_t> hit(n, 0);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) hit[i] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

}  // namespace parallel

/// Sets the OpenMP team size used by the parallel kernels (0 keeps the default).
void set_threads(int threads);
int max_threads();

}  // namespace hurwitz::kernels
