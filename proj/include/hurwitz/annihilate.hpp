#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/element_set.hpp"
#include "hurwitz/endomorphism.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/ring.hpp"

namespace hurwitz {

/// How a one-sided annihilator is computed. Enumeration scans every ring
/// element; Nullspace solves the stacked multiplication matrices over F_p
/// (algebra rings only). Auto picks nullspace for untabulated algebras.
enum class AnnBackend { Auto, Enumeration, Nullspace };

/// { r : r f = 0 for all f in fs } (Left) or { r : f r = 0 } (Right).
/// Throws PreconditionFailed when fs is empty.
ElementSet annihilator(const FiniteRing& ring, std::span<const Elem> fs, Side side,
                       AnnBackend backend = AnnBackend::Auto);
ElementSet left_annihilator(const FiniteRing& ring, std::span<const Elem> fs, AnnBackend backend = AnnBackend::Auto);
ElementSet right_annihilator(const FiniteRing& ring, std::span<const Elem> fs, AnnBackend backend = AnnBackend::Auto);

/// The annihilator intersected with a subgroup of candidates.
ElementSet annihilator_within(const FiniteRing& ring, std::span<const Elem> fs, Side side,
                              const ElementSet& candidates);

struct InsulatorCertificate {
  Side side = Side::Left;
  std::vector<Elem> set;     // sorted
  ElementSet annihilator;    // recomputed, equals {0}
  bool minimal = false;      // found by the increasing-size search
  std::size_t size() const { return set.size(); }
};

/// Re-runs the annihilator on the certificate's set from scratch.
bool verify_certificate(const FiniteRing& ring, const InsulatorCertificate& cert);

/// A certificate iff the side's annihilator of fs is {0}.
std::optional<InsulatorCertificate> is_insulator(const FiniteRing& ring, std::span<const Elem> fs, Side side);

/// No finite subset of the searched set is an insulator: witness is a
/// nonzero element annihilating all of it.
struct ProvedAbsent {
  Side side = Side::Left;
  Elem witness;
  ElementSet annihilator;
};

using InsulatorSearchResult = std::variant<InsulatorCertificate, ProvedAbsent>;

/// Decides whether the nonzero finite set `within` contains an insulator
/// (it does iff its own annihilator is {0}) and, if so, returns the
/// lexicographically first certificate of minimal size <= max_size, or the
/// whole set when no smaller one exists.
InsulatorSearchResult insulator_search(const FiniteRing& ring, const ElementSet& within, Side side,
                                       std::size_t max_size = 3);

/// r_R(fs) intersected with alpha^n(R).
ElementSet ann_meet_image(const Endomorphism& alpha, std::span<const Elem> fs, std::uint64_t n);

struct EventualMeet {
  ElementSet meet;           // r_R(fs) intersected with the eventual image
  std::uint32_t index = 0;   // smallest n at which the meet already equals it
};
EventualMeet ann_meet_eventual(const Endomorphism& alpha, std::span<const Elem> fs);

/// Polynomial annihilators with support inside {0..bound}.
struct BoundedAnnihilator {
  Side side = Side::Left;
  Degree bound = 0;
  bool trivial = true;                 // only the zero polynomial annihilates
  std::uint64_t solution_count = 1;    // including zero; saturates at UINT64_MAX
  std::vector<HPoly> witnesses;        // an F_p basis, or the first solutions found
  std::string method;                  // "nullspace" or "enumeration"
};

/// Degree bound used when none is given: 2 * (max degree in fhat) + 2.
Degree default_degree_bound(std::span<const HPoly> fhat);

/// All g with supp(g) in {0..bound} and g f = 0 (Left) or f g = 0 (Right)
/// for every f in fhat. Degrees above bound are not examined.
BoundedAnnihilator hp_ann_bounded(const Endomorphism& alpha, std::span<const HPoly> fhat, Side side, Degree bound);

/// Upper limit on |R|^(bound+1) for rings that are not F_p-algebras.
inline constexpr std::uint64_t kBoundedEnumerationCap = std::uint64_t{1} << 22;

}  // namespace hurwitz
