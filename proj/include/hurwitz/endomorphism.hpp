#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hurwitz/element_set.hpp"
#include "hurwitz/ring.hpp"

namespace hurwitz {

/// A unital ring endomorphism stored as a full element table.
///
/// The descending image chain R = a^0(R) >= a(R) >= a^2(R) >= ... is
/// computed at construction; it is constant from the stabilization index
/// on, and image(n) clamps n to that index.
class Endomorphism {
 public:
  /// Validates the ring laws (unity, additivity, multiplicativity on
  /// additive generators, which is complete by biadditivity).
  static std::shared_ptr<const Endomorphism> create(RingPtr ring, EndoKind kind,
                                                    std::span<const std::uint32_t> table = {});
  static std::shared_ptr<const Endomorphism> identity(RingPtr ring) { return create(std::move(ring), EndoKind::Identity); }

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  EndoKind kind() const { return kind_; }
  std::span<const Elem> table() const { return table_; }

  Elem apply(Elem a) const { return table_[a.index()]; }
  /// a applied k times; k = 0 is the identity.
  Elem apply(Elem a, std::uint64_t k) const;

  bool is_identity() const { return identity_; }
  bool is_monomorphism() const { return monomorphism_; }
  /// On a finite ring injective and bijective coincide.
  bool is_automorphism() const { return monomorphism_; }

  const ElementSet& image(std::uint64_t n) const;
  std::span<const ElementSet> image_chain() const { return chain_; }
  std::uint32_t stabilization_index() const { return static_cast<std::uint32_t>(chain_.size() - 1); }
  const ElementSet& eventual_image() const { return chain_.back(); }

  /// The set { a(x) : x in s }; subgroups map to subgroups.
  ElementSet map(const ElementSet& s) const;
  ElementSet map(const ElementSet& s, std::uint64_t k) const;
  std::vector<Elem> kernel() const;

 private:
  Endomorphism() = default;

  RingPtr ring_;
  EndoKind kind_ = EndoKind::Identity;
  std::vector<Elem> table_;
  bool identity_ = false;
  bool monomorphism_ = false;
  std::vector<ElementSet> chain_;
};

using EndoPtr = std::shared_ptr<const Endomorphism>;

/// A ring together with its endomorphism.
struct RingContext {
  RingPtr ring;
  EndoPtr alpha;
};

/// Builds the ring described by spec and its endomorphism. Construction
/// fails rather than returning an unchecked structure.
RingContext make_ring(const RingSpec& spec);

}  // namespace hurwitz
