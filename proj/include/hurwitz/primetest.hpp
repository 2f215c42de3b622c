#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/annihilate.hpp"
#include "hurwitz/element_set.hpp"
#include "hurwitz/endomorphism.hpp"
#include "hurwitz/poly.hpp"

namespace hurwitz {

enum class ClosureKind { LeftIdeal, RightIdeal, Ideal, LeftAlphaIdeal };

std::string closure_kind_name(ClosureKind k);

struct IdealClosure {
  std::vector<Elem> generators;
  ClosureKind kind = ClosureKind::LeftIdeal;
  ElementSet set;
};

/// Smallest set containing gens that is closed under addition, the kind's
/// multiplications and (for LeftAlphaIdeal) alpha. Works on additive
/// generators: S is closed under r* iff b*g lies in S for every additive
/// generator b of R and g of S.
IdealClosure close(const FiniteRing& ring, const Endomorphism* alpha, std::span<const Elem> gens, ClosureKind kind);

/// The equivalent conditions for strong primeness, by the kind of ideal that
/// must contain an insulator: every nonzero two-sided ideal, every nonzero
/// one-sided ideal, every nonzero principal one-sided ideal.
enum class PrimeMode { Ideals = 2, OneSidedIdeals = 3, Principal = 4 };

/// A nonzero ideal whose annihilator contains the nonzero element
/// `annihilator`, so no subset of it is an insulator.
struct IdealFailure {
  ElementSet ideal;
  Elem annihilator;
  std::optional<Elem> generator;
};

struct ModeVerdict {
  PrimeMode mode = PrimeMode::Principal;
  bool verdict = true;
  bool exhaustive = true;          // every ideal of the kind was examined
  std::size_t generator_bound = 0;  // generator-set size when not exhaustive
  std::uint64_t ideals_checked = 0;
  std::optional<IdealFailure> witness;
};

struct StrongPrimeReport {
  Side side = Side::Left;
  bool verdict = true;
  bool agreement = true;
  std::vector<ModeVerdict> modes;
};

/// Rings with at most kernels::kMaxMaskRing elements enumerate every
/// additive subgroup; larger rings close every generator set of size
/// <= generator_bound.
ModeVerdict strongly_prime_mode(const FiniteRing& ring, Side side, PrimeMode mode, std::size_t generator_bound = 2);
StrongPrimeReport strongly_prime(const FiniteRing& ring, Side side, std::span<const PrimeMode> modes,
                                 std::size_t generator_bound = 2);
bool verify_failure(const FiniteRing& ring, Side side, const IdealFailure& failure);

/// A left alpha-ideal I and a nonzero z with z * alpha^k(I) = 0 for every k
/// listed in orbit_indices.
struct AlphaWitness {
  Elem generator;
  ElementSet ideal;
  Elem annihilator;
  std::vector<std::uint32_t> orbit_indices;
  std::uint32_t orbit_length = 0;
};

struct AlphaPrimeReport {
  bool verdict = true;
  bool k0_only = false;
  std::uint64_t elements_checked = 0;
  std::uint32_t max_orbit_length = 0;
  std::optional<AlphaWitness> witness;
  bool alpha_monomorphism = false;
  bool monomorphism_consistent = true;  // a true verdict forces alpha injective
  std::vector<std::string> notes;
};

/// Exact decision of left alpha-strong primeness. For every nonzero a, the
/// left alpha-ideal I generated by a is finite, so F = I is the largest
/// candidate; the sets alpha^k(I) run through a finite orbit and each must
/// have zero left annihilator. With k0_only only alpha^0(I) = I is checked.
AlphaPrimeReport alpha_strongly_prime(const Endomorphism& alpha, bool k0_only = false);
/// Same question quantified over every nonzero left alpha-ideal
/// (rings with at most kernels::kMaxMaskRing elements).
bool alpha_strongly_prime_exhaustive(const Endomorphism& alpha);
bool verify_witness(const Endomorphism& alpha, const AlphaWitness& w);

/// The distinct sets alpha^k(s), k = 0, 1, ..., until the first repeat.
std::vector<ElementSet> alpha_orbit(const Endomorphism& alpha, const ElementSet& s);

struct LiftedInsulator {
  std::vector<Elem> source;
  std::vector<HPoly> lifted;   // one per nonzero source element, degree u
  Degree degree = 0;
  std::uint32_t orbit_length = 0;
  BoundedAnnihilator check;
  bool insulated = false;      // bounded left annihilator is zero
};

/// Lifts F to polynomials f_a = a at degree u (lower coefficients zero) and
/// checks their left annihilator up to the degree bound. Throws
/// PreconditionFailed when some l(alpha^k(F)) is nonzero.
LiftedInsulator thm13_lift(const Endomorphism& alpha, std::span<const Elem> source, Degree u, Degree bound);

struct OrbitCheck {
  std::uint32_t k = 0;
  ElementSet image;
  bool annihilator_zero = false;
  std::optional<Elem> witness;
};

struct ShiftCheck {
  std::string reading;          // "h_{k+1}" or "h_{n+1}"
  std::uint32_t shift = 0;
  std::vector<HPoly> family;    // nonzero products h_{shift+1} * f
  bool coefficients_match = false;  // coefficient set equals alpha^shift(F) minus 0
  std::optional<BoundedAnnihilator> check;
  std::optional<std::string> skipped;
};

struct ExtractReport {
  ElementSet coefficients;
  std::vector<OrbitCheck> orbit;
  bool verdict = false;
  std::vector<ShiftCheck> shifts;
};

/// F = every coefficient of every member of fhat, tested for
/// l(alpha^k(F)) = 0 over its whole orbit, plus the shifted families
/// h_{k+1} fhat for k < sampled_shifts and h_{n+1} fhat with n the largest
/// degree in fhat.
ExtractReport thm13_extract(const Endomorphism& alpha, std::span<const HPoly> fhat, std::uint32_t sampled_shifts = 3,
                            std::optional<Degree> bound = std::nullopt);

struct Thm14Certificate {
  Elem a;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::vector<Elem> set;   // F, inside the union of alpha^j(a) alpha^(m+j)(R), j <= k
  std::uint32_t n = 0;
  std::uint32_t u = 0;     // max(n, m + k)
  ElementSet sum;          // S_k
  ElementSet meet;         // r(F) intersected with alpha^n(R)
};

struct Thm14Failure {
  Elem a;
  std::uint32_t m = 0;
  ElementSet sum_limit;    // S_infinity
  ElementSet meet;         // r(S_infinity) intersected with the eventual image
  Elem witness;
};

struct Thm14Result {
  bool holds = false;
  std::optional<Thm14Certificate> certificate;
  std::optional<Thm14Failure> failure;
  std::uint32_t chain_length = 0;  // number of terms until the sum chain is exhausted
};

/// Decides: is there k and finite F inside
/// a alpha^m(R) + alpha(a) alpha^(m+1)(R) + ... + alpha^k(a) alpha^(m+k)(R)
/// with r(F) intersected with alpha^n(R) zero for some n? Exact: both the
/// sum chain and the image chain are run to stabilization, and enlarging F
/// or n only shrinks the intersection. extra_steps appends further terms
/// past stabilization.
Thm14Result thm14_condition_b(const Endomorphism& alpha, Elem a, std::uint32_t m, std::uint32_t extra_steps = 0);
bool verify_certificate(const Endomorphism& alpha, const Thm14Certificate& cert);

struct RightSideCheck {
  Elem a;
  std::uint32_t n = 0;
  bool passed = false;
};

struct ExampleReport {
  std::uint32_t generators = 0;
  std::uint32_t prime = 0;
  std::string ring_name;
  AlphaPrimeReport left;
  ElementSet augmentation;
  Elem expected_witness;
  bool left_matches = false;
  std::uint64_t right_checked = 0;
  std::uint64_t right_passed = 0;
  std::optional<RightSideCheck> right_failure;
  bool right_matches = false;
  bool alpha_injective = false;
  std::string caveat;
};

/// 1 + the largest generator index occurring in a (0 for constants).
std::uint32_t generator_depth(const FiniteRing& ring, Elem a);

extern const char* const kTruncationCaveat;

/// Both verdicts for the monomial algebra x_k x_l = 0 (k >= l) truncated to
/// G generators, with the shift endomorphism.
ExampleReport example_verify(std::uint32_t generator_count, std::uint32_t p, std::uint64_t element_cap = kDefaultElementCap);

}  // namespace hurwitz
