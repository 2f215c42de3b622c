#include "hurwitz/primetest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hurwitz/kernels.hpp"

namespace hurwitz {

const char* const kTruncationCaveat =
    "finite model: the generators are truncated to x0..x{G-1}, so shift sends x{G-1} to 0 and alpha is not "
    "injective, unlike the endomorphism of the infinite algebra. The left check is alpha-strong primeness of the "
    "coefficient ring (the condition equivalent to left strong primeness of the skew Hurwitz ring); the right "
    "check is r(a) meet alpha^n(R) = 0 with n = 1 + largest generator index of a, the element-wise condition "
    "for right strong primeness. The monomorphism requirement of that criterion is not met by the truncation.";

std::string closure_kind_name(ClosureKind k) {
  switch (k) {
    case ClosureKind::LeftIdeal: return "left-ideal";
    case ClosureKind::RightIdeal: return "right-ideal";
    case ClosureKind::Ideal: return "ideal";
    case ClosureKind::LeftAlphaIdeal: return "alpha-ideal";
  }
  return "?";
}

IdealClosure close(const FiniteRing& ring, const Endomorphism* alpha, std::span<const Elem> gens, ClosureKind kind) {
  if (gens.empty()) throw PreconditionFailed("closure needs at least one generator");
  if (kind == ClosureKind::LeftAlphaIdeal && alpha == nullptr) {
    throw PreconditionFailed("alpha-ideal closure needs an endomorphism");
  }
  const bool left = kind != ClosureKind::RightIdeal;
  const bool right = kind == ClosureKind::RightIdeal || kind == ClosureKind::Ideal;
  SubgroupBuilder s(ring);
  std::deque<Elem> work;
  auto push = [&](Elem x) {
    if (s.insert(x)) work.push_back(x);
  };
  for (Elem g : gens) push(g);
  const auto basis = ring.additive_generators();
  while (!work.empty()) {
    const Elem x = work.front();
    work.pop_front();
    for (Elem b : basis) {
      if (left) push(ring.mul(b, x));
      if (right) push(ring.mul(x, b));
    }
    if (kind == ClosureKind::LeftAlphaIdeal) push(alpha->apply(x));
  }
  static constexpr SetKind kinds[] = {SetKind::LeftIdeal, SetKind::RightIdeal, SetKind::Ideal, SetKind::LeftAlphaIdeal};
  IdealClosure out;
  out.generators.assign(gens.begin(), gens.end());
  out.kind = kind;
  out.set = s.finish(kinds[static_cast<int>(kind)]);
  return out;
}

// ---------------------------------------------------------------------------
// Strong primeness

namespace {

ElementSet set_from_mask(std::uint32_t mask, std::uint32_t n) {
  std::vector<Elem> elems;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) elems.push_back(Elem{i});
  }
  return ElementSet::from_elements(std::move(elems));
}

std::optional<Elem> first_nonzero(const ElementSet& s) {
  for (Elem e : s.elements()) {
    if (e.index() != 0) return e;
  }
  return std::nullopt;
}

std::span<const Elem> members_for_ann(const ElementSet& s) {
  return s.generators().empty() ? s.elements() : s.generators();
}

// Enumerates closures of every generator set of size <= bound, deduplicated,
// in order of first appearance.
std::vector<ElementSet> generated_ideals(const FiniteRing& ring, ClosureKind kind, std::size_t bound) {
  std::vector<Elem> nz;
  for (std::uint32_t i = 1; i < ring.size(); ++i) nz.push_back(Elem{i});
  std::vector<ElementSet> out;
  std::set<std::vector<Elem>> seen;
  std::vector<std::size_t> idx;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      std::vector<Elem> gens;
      for (std::size_t i : idx) gens.push_back(nz[i]);
      ElementSet s = close(ring, nullptr, gens, kind).set;
      std::vector<Elem> key(s.elements().begin(), s.elements().end());
      if (seen.insert(key).second) out.push_back(std::move(s));
    }
    if (idx.size() == bound) return;
    for (std::size_t j = start; j < nz.size(); ++j) {
      idx.push_back(j);
      self(self, j + 1);
      idx.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

}  // namespace

ModeVerdict strongly_prime_mode(const FiniteRing& ring, Side side, PrimeMode mode, std::size_t generator_bound) {
  ModeVerdict v;
  v.mode = mode;
  const ClosureKind one_sided = side == Side::Left ? ClosureKind::LeftIdeal : ClosureKind::RightIdeal;

  if (mode == PrimeMode::Principal) {
    const std::uint32_t n = ring.size();
    auto ideal_of = [&](std::size_t i) {
      const Elem a{static_cast<std::uint32_t>(i + 1)};
      return close(ring, nullptr, std::span<const Elem>(&a, 1), one_sided).set;
    };
    const auto bad = kernels::parallel::first_match(n - 1, [&](std::size_t i) {
      const ElementSet ideal = ideal_of(i);
      return !annihilator(ring, members_for_ann(ideal), side).is_zero();
    });
    v.exhaustive = true;
    v.ideals_checked = bad ? *bad + 1 : n - 1;
    if (bad) {
      IdealFailure f;
      f.generator = Elem{static_cast<std::uint32_t>(*bad + 1)};
      f.ideal = ideal_of(*bad);
      f.annihilator = *first_nonzero(annihilator(ring, members_for_ann(f.ideal), side));
      v.verdict = false;
      v.witness = std::move(f);
    }
    return v;
  }

  std::vector<ElementSet> ideals;
  if (ring.size() <= kernels::kMaxMaskRing) {
    const bool left = mode == PrimeMode::Ideals || side == Side::Left;
    const bool right = mode == PrimeMode::Ideals || side == Side::Right;
    for (std::uint32_t mask : kernels::parallel::closed_masks(ring, left, right, nullptr)) {
      if (mask != 1u) ideals.push_back(set_from_mask(mask, ring.size()));
    }
    v.exhaustive = true;
  } else {
    ideals = generated_ideals(ring, mode == PrimeMode::Ideals ? ClosureKind::Ideal : one_sided, generator_bound);
    v.exhaustive = false;
    v.generator_bound = generator_bound;
  }
  const auto bad = kernels::parallel::first_match(ideals.size(), [&](std::size_t i) {
    return !annihilator(ring, members_for_ann(ideals[i]), side).is_zero();
  });
  v.ideals_checked = bad ? *bad + 1 : ideals.size();
  if (bad) {
    IdealFailure f;
    f.ideal = ideals[*bad];
    f.annihilator = *first_nonzero(annihilator(ring, members_for_ann(f.ideal), side));
    v.verdict = false;
    v.witness = std::move(f);
  }
  return v;
}

StrongPrimeReport strongly_prime(const FiniteRing& ring, Side side, std::span<const PrimeMode> modes,
                                 std::size_t generator_bound) {
  StrongPrimeReport r;
  r.side = side;
  for (PrimeMode m : modes) r.modes.push_back(strongly_prime_mode(ring, side, m, generator_bound));
  if (!r.modes.empty()) {
    r.verdict = r.modes.front().verdict;
    for (const auto& m : r.modes) r.agreement = r.agreement && m.verdict == r.verdict;
  }
  return r;
}

bool verify_failure(const FiniteRing& ring, Side side, const IdealFailure& failure) {
  if (ring.is_zero(failure.annihilator) || failure.ideal.nonzero().empty()) return false;
  for (Elem x : failure.ideal.elements()) {
    const Elem p = side == Side::Left ? ring.mul(failure.annihilator, x) : ring.mul(x, failure.annihilator);
    if (!ring.is_zero(p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Alpha-strong primeness

std::vector<ElementSet> alpha_orbit(const Endomorphism& alpha, const ElementSet& s) {
  auto key = [](const ElementSet& e) { return std::vector<Elem>(e.elements().begin(), e.elements().end()); };
  std::vector<ElementSet> orbit{s};
  std::set<std::vector<Elem>> seen;
  seen.insert(key(s));
  while (true) {
    ElementSet next = alpha.map(orbit.back());
    if (!seen.insert(key(next)).second) break;
    orbit.push_back(std::move(next));
  }
  return orbit;
}

namespace {

struct OrbitOutcome {
  std::uint32_t length = 0;
  std::optional<std::uint32_t> first_bad;
};

OrbitOutcome check_orbit(const FiniteRing& ring, const std::vector<ElementSet>& orbit, bool k0_only) {
  OrbitOutcome o;
  o.length = static_cast<std::uint32_t>(orbit.size());
  const std::size_t limit = k0_only ? 1 : orbit.size();
  for (std::size_t k = 0; k < limit; ++k) {
    if (!annihilator(ring, members_for_ann(orbit[k]), Side::Left).is_zero()) {
      o.first_bad = static_cast<std::uint32_t>(k);
      break;
    }
  }
  return o;
}

ElementSet alpha_ideal_of(const Endomorphism& alpha, Elem a) {
  return close(alpha.ring(), &alpha, std::span<const Elem>(&a, 1), ClosureKind::LeftAlphaIdeal).set;
}

}  // namespace

AlphaPrimeReport alpha_strongly_prime(const Endomorphism& alpha, bool k0_only) {
  const FiniteRing& ring = alpha.ring();
  AlphaPrimeReport r;
  r.k0_only = k0_only;
  r.alpha_monomorphism = alpha.is_monomorphism();
  const std::size_t count = ring.size() - 1;
  std::vector<std::uint32_t> lengths(count, 0);
  const auto bad = kernels::parallel::first_match(count, [&](std::size_t i) {
    const auto orbit = alpha_orbit(alpha, alpha_ideal_of(alpha, Elem{static_cast<std::uint32_t>(i + 1)}));
    const OrbitOutcome o = check_orbit(ring, orbit, k0_only);
    lengths[i] = o.length;
    return o.first_bad.has_value();
  });
  r.elements_checked = bad ? *bad + 1 : count;
  r.max_orbit_length = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
  r.notes.push_back(
      "reduced to principal left alpha-ideals: every nonzero left alpha-ideal contains the one generated by any "
      "of its nonzero members, and a superset of an insulator family is one");
  r.notes.push_back(k0_only ? "k range: k = 0 only"
                            : "k range: the full orbit alpha^k(I), detected exactly by set repetition");
  if (bad) {
    AlphaWitness w;
    w.generator = Elem{static_cast<std::uint32_t>(*bad + 1)};
    w.ideal = alpha_ideal_of(alpha, w.generator);
    const auto orbit = alpha_orbit(alpha, w.ideal);
    w.orbit_length = static_cast<std::uint32_t>(orbit.size());
    // Prefer an element killing I itself: it kills every alpha^k(I) inside I.
    ElementSet ann = annihilator(ring, members_for_ann(orbit[0]), Side::Left);
    if (ann.is_zero()) {
      const auto o = check_orbit(ring, orbit, k0_only);
      ann = annihilator(ring, members_for_ann(orbit[*o.first_bad]), Side::Left);
    }
    w.annihilator = *first_nonzero(ann);
    const std::size_t limit = k0_only ? 1 : orbit.size();
    for (std::size_t k = 0; k < limit; ++k) {
      bool kills = true;
      for (Elem x : orbit[k].elements()) kills = kills && ring.is_zero(ring.mul(w.annihilator, x));
      if (kills) w.orbit_indices.push_back(static_cast<std::uint32_t>(k));
    }
    r.verdict = false;
    r.witness = std::move(w);
  }
  r.monomorphism_consistent = !r.verdict || r.alpha_monomorphism;
  if (ring.family() == Family::MonomialAlgebra && alpha.kind() == EndoKind::Shift) r.notes.push_back(kTruncationCaveat);
  return r;
}

bool alpha_strongly_prime_exhaustive(const Endomorphism& alpha) {
  const FiniteRing& ring = alpha.ring();
  const auto masks = kernels::parallel::closed_masks(ring, true, false, &alpha);
  const auto bad = kernels::parallel::first_match(masks.size(), [&](std::size_t i) {
    if (masks[i] == 1u) return false;
    const auto orbit = alpha_orbit(alpha, set_from_mask(masks[i], ring.size()));
    return check_orbit(ring, orbit, false).first_bad.has_value();
  });
  return !bad.has_value();
}

bool verify_witness(const Endomorphism& alpha, const AlphaWitness& w) {
  const FiniteRing& ring = alpha.ring();
  if (ring.is_zero(w.annihilator) || w.ideal.nonzero().empty() || w.orbit_indices.empty()) return false;
  const ElementSet recomputed = alpha_ideal_of(alpha, w.generator);
  if (!(recomputed == w.ideal)) return false;
  for (Elem x : w.ideal.elements()) {
    if (!w.ideal.contains(alpha.apply(x))) return false;
  }
  for (std::uint32_t k : w.orbit_indices) {
    for (Elem x : w.ideal.elements()) {
      if (!ring.is_zero(ring.mul(w.annihilator, alpha.apply(x, k)))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lifting and extracting left insulators

namespace {

std::vector<ElementSet> plain_orbit(const Endomorphism& alpha, std::span<const Elem> f) {
  return alpha_orbit(alpha, ElementSet::from_elements(std::vector<Elem>(f.begin(), f.end())));
}

}  // namespace

LiftedInsulator thm13_lift(const Endomorphism& alpha, std::span<const Elem> source, Degree u, Degree bound) {
  const FiniteRing& ring = alpha.ring();
  if (source.empty()) throw PreconditionFailed("lift needs a nonempty source set");
  const auto orbit = plain_orbit(alpha, source);
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const ElementSet ann = annihilator(ring, orbit[k].elements(), Side::Left);
    if (!ann.is_zero()) {
      throw PreconditionFailed("source set is not an alpha-insulator family: the left annihilator of alpha^" +
                               std::to_string(k) + "(F) contains the nonzero element with index " +
                               std::to_string(first_nonzero(ann)->index()));
    }
  }
  LiftedInsulator out;
  out.source = ElementSet::from_elements(std::vector<Elem>(source.begin(), source.end())).nonzero();
  out.degree = u;
  out.orbit_length = static_cast<std::uint32_t>(orbit.size());
  for (Elem a : out.source) out.lifted.push_back(HPoly::monomial(alpha.ring_ptr(), u, a));
  out.check = hp_ann_bounded(alpha, out.lifted, Side::Left, bound);
  out.insulated = out.check.trivial;
  return out;
}

ExtractReport thm13_extract(const Endomorphism& alpha, std::span<const HPoly> fhat, std::uint32_t sampled_shifts,
                            std::optional<Degree> bound) {
  if (fhat.empty()) throw PreconditionFailed("extract needs a nonempty polynomial set");
  const FiniteRing& ring = alpha.ring();
  const RingPtr& ringp = alpha.ring_ptr();
  std::vector<Elem> coeffs;
  Degree top = 0;
  for (const HPoly& f : fhat) {
    if (f.is_zero()) throw PreconditionFailed("extract needs nonzero polynomials");
    if (f.ring_ptr() != ringp) throw InvalidArgument("polynomial and endomorphism live over different rings");
    for (const Term& t : f.terms()) coeffs.push_back(t.coeff);
    top = std::max(top, *f.degree());
  }
  ExtractReport out;
  out.coefficients = ElementSet::from_elements(std::move(coeffs));
  out.verdict = true;
  const auto orbit = plain_orbit(alpha, out.coefficients.elements());
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    OrbitCheck c;
    c.k = static_cast<std::uint32_t>(k);
    c.image = orbit[k];
    const ElementSet ann = annihilator(ring, orbit[k].elements(), Side::Left);
    c.annihilator_zero = ann.is_zero();
    if (!c.annihilator_zero) c.witness = first_nonzero(ann);
    out.verdict = out.verdict && c.annihilator_zero;
    out.orbit.push_back(std::move(c));
  }

  auto shifted = [&](std::string reading, std::uint32_t shift) {
    ShiftCheck s;
    s.reading = std::move(reading);
    s.shift = shift;
    const HPoly h = HPoly::basis(ringp, shift + 1);
    std::vector<Elem> family_coeffs;
    for (const HPoly& f : fhat) {
      HPoly g = hp_mul(h, f, alpha);
      if (g.is_zero()) continue;
      for (const Term& t : g.terms()) family_coeffs.push_back(t.coeff);
      s.family.push_back(std::move(g));
    }
    std::vector<Elem> expected;
    for (Elem a : out.coefficients.elements()) expected.push_back(alpha.apply(a, shift));
    s.coefficients_match =
        ElementSet::from_elements(family_coeffs).nonzero() == ElementSet::from_elements(expected).nonzero();
    if (s.family.empty()) {
      s.skipped = "every shifted polynomial vanished";
      return s;
    }
    try {
      s.check = hp_ann_bounded(alpha, s.family, Side::Left, bound.value_or(default_degree_bound(s.family)));
    } catch (const CapExceeded& e) {
      s.skipped = e.what();
    }
    return s;
  };
  for (std::uint32_t k = 0; k < sampled_shifts; ++k) out.shifts.push_back(shifted("h_{k+1}", k));
  out.shifts.push_back(shifted("h_{n+1}", top));
  return out;
}

// ---------------------------------------------------------------------------
// The right-side element condition

namespace {

// alpha^j(a) alpha^(m+j)(R) as an explicit product set.
std::vector<Elem> term_products(const Endomorphism& alpha, Elem aj, std::uint64_t level) {
  std::vector<Elem> out;
  for (Elem x : alpha.image(level).elements()) out.push_back(alpha.ring().mul(aj, x));
  return out;
}

ElementSet meet_with(const Endomorphism& alpha, std::span<const Elem> fs, const ElementSet& image) {
  return annihilator_within(alpha.ring(), fs, Side::Right, image);
}

}  // namespace

Thm14Result thm14_condition_b(const Endomorphism& alpha, Elem a, std::uint32_t m, std::uint32_t extra_steps) {
  const FiniteRing& ring = alpha.ring();
  if (ring.is_zero(a)) throw PreconditionFailed("the element a must be nonzero");
  const std::uint32_t nstar = alpha.stabilization_index();
  const ElementSet& eventual = alpha.eventual_image();

  // Terms j = 0, 1, ... until alpha^j(a) repeats once the image chain is stable.
  const std::uint32_t stable_from = nstar > m ? nstar - m : 0;
  std::vector<Elem> powers;
  std::set<Elem> seen_after;
  Elem aj = a;
  for (std::uint32_t j = 0;; ++j) {
    if (j >= stable_from && !seen_after.insert(aj).second) break;
    powers.push_back(aj);
    aj = alpha.apply(aj);
  }
  Thm14Result result;
  result.chain_length = static_cast<std::uint32_t>(powers.size());
  for (std::uint32_t e = 0; e < extra_steps; ++e) {
    powers.push_back(aj);
    aj = alpha.apply(aj);
  }

  SubgroupBuilder sum(ring);
  std::optional<std::uint32_t> k_found;
  std::optional<ElementSet> sum_at_k;
  for (std::uint32_t j = 0; j < powers.size(); ++j) {
    for (Elem g : alpha.image(std::uint64_t{m} + j).generators()) sum.insert(ring.mul(powers[j], g));
    if (!k_found) {
      const ElementSet sk = sum.finish();
      if (meet_with(alpha, sk.generators().empty() ? sk.elements() : sk.generators(), eventual).is_zero()) {
        k_found = j;
        sum_at_k = sk;
      }
    }
  }

  if (!k_found) {
    Thm14Failure f;
    f.a = a;
    f.m = m;
    f.sum_limit = sum.finish();
    f.meet = meet_with(alpha, f.sum_limit.generators().empty() ? f.sum_limit.elements() : f.sum_limit.generators(),
                       eventual);
    f.witness = *first_nonzero(f.meet);
    result.failure = std::move(f);
    return result;
  }

  const std::uint32_t k = *k_found;
  // Candidates: alpha^j(a) first (each lies in its term since 1 is in every
  // image), then the remaining nonzero products in canonical order.
  std::vector<Elem> cands;
  std::set<Elem> used;
  for (std::uint32_t j = 0; j <= k; ++j) {
    if (!ring.is_zero(powers[j]) && used.insert(powers[j]).second) cands.push_back(powers[j]);
  }
  std::set<Elem> rest;
  for (std::uint32_t j = 0; j <= k; ++j) {
    for (Elem x : term_products(alpha, powers[j], std::uint64_t{m} + j)) {
      if (!ring.is_zero(x) && !used.contains(x)) rest.insert(x);
    }
  }
  cands.insert(cands.end(), rest.begin(), rest.end());

  std::vector<Elem> chosen;
  const auto single = kernels::parallel::first_match(cands.size(), [&](std::size_t i) {
    return meet_with(alpha, std::span<const Elem>(&cands[i], 1), eventual).is_zero();
  });
  if (single) {
    chosen = {cands[*single]};
  } else {
    chosen = cands;
    for (std::size_t i = cands.size(); i-- > 0;) {
      std::vector<Elem> trial;
      for (Elem x : chosen) {
        if (x != cands[i]) trial.push_back(x);
      }
      if (!trial.empty() && meet_with(alpha, trial, eventual).is_zero()) chosen = std::move(trial);
    }
  }

  Thm14Certificate c;
  c.a = a;
  c.m = m;
  c.k = k;
  c.set = chosen;
  c.n = nstar;
  for (std::uint32_t n = 0; n <= nstar; ++n) {
    if (meet_with(alpha, chosen, alpha.image(n)).is_zero()) {
      c.n = n;
      break;
    }
  }
  c.u = std::max(c.n, m + k);
  c.sum = *sum_at_k;
  c.meet = meet_with(alpha, chosen, alpha.image(c.n));
  result.holds = true;
  result.certificate = std::move(c);
  return result;
}

bool verify_certificate(const Endomorphism& alpha, const Thm14Certificate& cert) {
  const FiniteRing& ring = alpha.ring();
  if (cert.set.empty() || cert.u != std::max(cert.n, cert.m + cert.k)) return false;
  // Rebuild S_k from scratch and check membership.
  std::vector<Elem> products;
  for (std::uint32_t j = 0; j <= cert.k; ++j) {
    const auto t = term_products(alpha, alpha.apply(cert.a, j), std::uint64_t{cert.m} + j);
    products.insert(products.end(), t.begin(), t.end());
  }
  const ElementSet sum = additive_span(ring, products);
  for (Elem x : cert.set) {
    if (!sum.contains(x)) return false;
  }
  const ElementSet r = annihilator(ring, cert.set, Side::Right, AnnBackend::Enumeration);
  return intersect(r, alpha.image(cert.n)).is_zero();
}

// ---------------------------------------------------------------------------
// The one-sided example

std::uint32_t generator_depth(const FiniteRing& ring, Elem a) {
  if (ring.family() != Family::MonomialAlgebra) throw InvalidArgument("generator depth needs a MonomialAlgebra ring");
  const auto c = ring.coordinates(a);
  std::uint32_t depth = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::uint32_t g : ring.monomial_words()[i]) depth = std::max(depth, g + 1);
  }
  return depth;
}

ExampleReport example_verify(std::uint32_t generator_count, std::uint32_t p, std::uint64_t element_cap) {
  if (generator_count < 2) throw PreconditionFailed("the example needs at least two generators");
  RingSpec spec = RingSpec::monomial(generator_count, p).with_endo(EndoKind::Shift);
  spec.element_cap = element_cap;
  const RingContext ctx = make_ring(spec);
  const FiniteRing& ring = *ctx.ring;
  const Endomorphism& alpha = *ctx.alpha;

  ExampleReport r;
  r.generators = generator_count;
  r.prime = p;
  r.ring_name = ring.name();
  r.alpha_injective = alpha.is_monomorphism();
  r.caveat = kTruncationCaveat;

  std::vector<Elem> aug_basis;
  for (std::uint32_t i = 1; i < ring.dimension(); ++i) aug_basis.push_back(ring.basis(i));
  r.augmentation = additive_span(ring, aug_basis);
  r.expected_witness = ring.monomial_generator(generator_count - 1);

  r.left = alpha_strongly_prime(alpha);
  if (r.left.witness) {
    const AlphaWitness& w = *r.left.witness;
    r.left_matches = !r.left.verdict && w.ideal == r.augmentation && w.annihilator == r.expected_witness &&
                     w.orbit_indices.size() == w.orbit_length && verify_witness(alpha, w);
  }

  const std::uint32_t count = ring.size() - 1;
  std::vector<std::uint32_t> depth(count);
  for (std::uint32_t i = 0; i < count; ++i) depth[i] = generator_depth(ring, Elem{i + 1});
  const auto failures = kernels::parallel::select(count, [&](std::size_t i) {
    const Elem a{static_cast<std::uint32_t>(i + 1)};
    return !ann_meet_image(alpha, std::span<const Elem>(&a, 1), depth[i]).is_zero();
  });
  r.right_checked = count;
  r.right_passed = count - failures.size();
  if (!failures.empty()) {
    const std::size_t i = failures.front();
    r.right_failure = RightSideCheck{Elem{static_cast<std::uint32_t>(i + 1)}, depth[i], false};
  }
  r.right_matches = failures.empty();
  return r;
}

}  // namespace hurwitz
