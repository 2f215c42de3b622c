#include "hurwitz/kernels.hpp"

#include <omp.h>

namespace hurwitz::kernels {

namespace {

bool annihilates(const FiniteRing& ring, Elem r, std::span<const Elem> fs, Side side) {
  for (Elem f : fs) {
    const Elem p = side == Side::Left ? ring.mul(r, f) : ring.mul(f, r);
    if (!ring.is_zero(p)) return false;
  }
  return true;
}

LawViolations laws_for(const FiniteRing& ring, std::uint32_t a) {
  LawViolations v;
  const std::uint32_t n = ring.size();
  const Elem x{a};
  if (ring.mul(x, ring.one()) != x || ring.mul(ring.one(), x) != x) ++v.unity;
  if (ring.add(x, ring.neg(x)) != ring.zero() || ring.add(x, ring.zero()) != x) ++v.additive;
  for (std::uint32_t b = 0; b < n; ++b) {
    const Elem y{b};
    if (ring.add(x, y) != ring.add(y, x)) ++v.additive;
    const Elem xy = ring.mul(x, y);
    for (std::uint32_t c = 0; c < n; ++c) {
      const Elem z{c};
      if (ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z))) ++v.additive;
      if (ring.mul(xy, z) != ring.mul(x, ring.mul(y, z))) ++v.associativity;
      if (ring.mul(x, ring.add(y, z)) != ring.add(xy, ring.mul(x, z))) ++v.distributivity;
      if (ring.mul(ring.add(y, z), x) != ring.add(ring.mul(y, x), ring.mul(z, x))) ++v.distributivity;
    }
  }
  return v;
}

std::uint64_t endo_laws_for(const Endomorphism& alpha, std::uint32_t a) {
  const FiniteRing& ring = alpha.ring();
  std::uint64_t bad = 0;
  const Elem x{a};
  for (std::uint32_t b = 0; b < ring.size(); ++b) {
    const Elem y{b};
    if (alpha.apply(ring.add(x, y)) != ring.add(alpha.apply(x), alpha.apply(y))) ++bad;
    if (alpha.apply(ring.mul(x, y)) != ring.mul(alpha.apply(x), alpha.apply(y))) ++bad;
  }
  return bad;
}

struct MaskTables {
  std::uint32_t n = 0;
  std::uint32_t add[kMaxMaskRing][kMaxMaskRing];
  std::uint32_t mul[kMaxMaskRing][kMaxMaskRing];
  std::uint32_t alpha[kMaxMaskRing];
};

MaskTables mask_tables(const FiniteRing& ring, const Endomorphism* alpha) {
  if (ring.size() > kMaxMaskRing) {
    throw CapExceeded("subset enumeration needs |R| <= " + std::to_string(kMaxMaskRing));
  }
  MaskTables t;
  t.n = ring.size();
  for (std::uint32_t a = 0; a < t.n; ++a) {
    t.alpha[a] = alpha ? alpha->apply(Elem{a}).index() : a;
    for (std::uint32_t b = 0; b < t.n; ++b) {
      t.add[a][b] = ring.add(Elem{a}, Elem{b}).index();
      t.mul[a][b] = ring.mul(Elem{a}, Elem{b}).index();
    }
  }
  return t;
}

bool mask_closed(const MaskTables& t, std::uint32_t mask, bool left, bool right, bool use_alpha) {
  if (!(mask & 1u)) return false;
  for (std::uint32_t a = 0; a < t.n; ++a) {
    if (!(mask >> a & 1u)) continue;
    if (use_alpha && !(mask >> t.alpha[a] & 1u)) return false;
    for (std::uint32_t b = 0; b < t.n; ++b) {
      if ((mask >> b & 1u) && !(mask >> t.add[a][b] & 1u)) return false;
      if (left && !(mask >> t.mul[b][a] & 1u)) return false;
      if (right && !(mask >> t.mul[a][b] & 1u)) return false;
    }
  }
  return true;
}

void accumulate(LawViolations& into, const LawViolations& v) {
  into.additive += v.additive;
  into.associativity += v.associativity;
  into.distributivity += v.distributivity;
  into.unity += v.unity;
}

}  // namespace

namespace serial {

std::vector<Elem> annihilator_scan(const FiniteRing& ring, std::span<const Elem> candidates,
                                   std::span<const Elem> fs, Side side) {
  std::vector<Elem> out;
  for (Elem r : candidates) {
    if (annihilates(ring, r, fs, side)) out.push_back(r);
  }
  return out;
}

LawViolations ring_law_violations(const FiniteRing& ring) {
  LawViolations total;
  for (std::uint32_t a = 0; a < ring.size(); ++a) accumulate(total, laws_for(ring, a));
  return total;
}

std::uint64_t endo_law_violations(const Endomorphism& alpha) {
  std::uint64_t bad = alpha.apply(alpha.ring().one()) == alpha.ring().one() ? 0 : 1;
  for (std::uint32_t a = 0; a < alpha.ring().size(); ++a) bad += endo_laws_for(alpha, a);
  return bad;
}

std::vector<std::uint32_t> closed_masks(const FiniteRing& ring, bool left, bool right, const Endomorphism* alpha) {
  const MaskTables t = mask_tables(ring, alpha);
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1u << t.n;
  for (std::uint32_t mask = 1; mask < limit; mask += 2) {
    if (mask_closed(t, mask, left, right, alpha != nullptr)) out.push_back(mask);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Elem> annihilator_scan(const FiniteRing& ring, std::span<const Elem> candidates,
                                   std::span<const Elem> fs, Side side) {
  const auto idx = parallel::select(candidates.size(), [&](std::size_t i) {
    return annihilates(ring, candidates[i], fs, side);
  });
  std::vector<Elem> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(candidates[i]);
  return out;
}

LawViolations ring_law_violations(const FiniteRing& ring) {
  const auto n = static_cast<std::int64_t>(ring.size());
  std::uint64_t additive = 0, assoc = 0, distrib = 0, unity = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : additive, assoc, distrib, unity)
  for (std::int64_t a = 0; a < n; ++a) {
    const LawViolations v = laws_for(ring, static_cast<std::uint32_t>(a));
    additive += v.additive;
    assoc += v.associativity;
    distrib += v.distributivity;
    unity += v.unity;
  }
  return {additive, assoc, distrib, unity};
}

std::uint64_t endo_law_violations(const Endomorphism& alpha) {
  std::uint64_t bad = alpha.apply(alpha.ring().one()) == alpha.ring().one() ? 0 : 1;
  const auto n = static_cast<std::int64_t>(alpha.ring().size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : bad)
  for (std::int64_t a = 0; a < n; ++a) bad += endo_laws_for(alpha, static_cast<std::uint32_t>(a));
  return bad;
}

std::vector<std::uint32_t> closed_masks(const FiniteRing& ring, bool left, bool right, const Endomorphism* alpha) {
  const MaskTables t = mask_tables(ring, alpha);
  const std::size_t half = std::size_t{1} << (t.n - 1);  // odd masks only
  const auto idx = parallel::select(half, [&](std::size_t i) {
    return mask_closed(t, static_cast<std::uint32_t>(2 * i + 1), left, right, alpha != nullptr);
  });
  std::vector<std::uint32_t> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(static_cast<std::uint32_t>(2 * i + 1));
  return out;
}

}  // namespace parallel

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace hurwitz::kernels
