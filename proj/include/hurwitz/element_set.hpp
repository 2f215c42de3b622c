#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz {

/// What closure properties an ElementSet was built to have.
enum class SetKind { Plain, Subgroup, LeftIdeal, RightIdeal, Ideal, LeftAlphaIdeal, Subring };

std::string set_kind_name(SetKind k);

/// A finite subset of a ring as a sorted, duplicate-free element list.
///
/// Sets produced by closure operations also carry additive generators
/// (a basis over F_p for algebra rings) of the subgroup they span.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet from_elements(std::vector<Elem> elems, SetKind kind = SetKind::Plain);
  static ElementSet zero_set() { return from_elements({Elem{0}}, SetKind::Subgroup); }

  std::span<const Elem> elements() const { return elems_; }
  std::span<const Elem> generators() const { return generators_; }
  SetKind kind() const { return kind_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Elem x) const;
  /// True iff the set is exactly {0}.
  bool is_zero() const { return elems_.size() == 1 && elems_[0].index() == 0; }
  /// Sorted nonzero members.
  std::vector<Elem> nonzero() const;

  bool subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.elems_ == b.elems_; }

 private:
  friend class SubgroupBuilder;
  std::vector<Elem> elems_;
  std::vector<Elem> generators_;
  SetKind kind_ = SetKind::Plain;
};

/// Grows an additive subgroup one generator at a time.
///
/// insert(x) replaces S by S + <x> = union of the cosets S + c x, so every
/// call costs O(|result|) ring additions.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const FiniteRing& ring);

  /// Returns true when x was not yet a member (the subgroup grew).
  bool insert(Elem x);
  bool contains(Elem x) const { return member_[x.index()] != 0; }
  std::size_t size() const { return elems_.size(); }
  std::span<const Elem> generators() const { return generators_; }

  ElementSet finish(SetKind kind = SetKind::Subgroup) const;

 private:
  const FiniteRing* ring_;
  std::vector<std::uint8_t> member_;
  std::vector<Elem> elems_;
  std::vector<Elem> generators_;
};

/// The additive subgroup generated by xs.
ElementSet additive_span(const FiniteRing& ring, std::span<const Elem> xs);

ElementSet intersect(const ElementSet& a, const ElementSet& b);

/// The subgroup of R generated by the products x * y (x in xs, y in ys).
ElementSet product_span(const FiniteRing& ring, std::span<const Elem> xs, std::span<const Elem> ys);

}  // namespace hurwitz
