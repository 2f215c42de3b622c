#include "hurwitz/element_set.hpp"

#include <algorithm>

namespace hurwitz {

std::string set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::Plain: return "set";
    case SetKind::Subgroup: return "subgroup";
    case SetKind::LeftIdeal: return "left-ideal";
    case SetKind::RightIdeal: return "right-ideal";
    case SetKind::Ideal: return "ideal";
    case SetKind::LeftAlphaIdeal: return "left-alpha-ideal";
    case SetKind::Subring: return "subring";
  }
  return "?";
}

ElementSet ElementSet::from_elements(std::vector<Elem> elems, SetKind kind) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  ElementSet s;
  s.elems_ = std::move(elems);
  s.kind_ = kind;
  return s;
}

bool ElementSet::contains(Elem x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

std::vector<Elem> ElementSet::nonzero() const {
  std::vector<Elem> out;
  out.reserve(elems_.size());
  for (Elem e : elems_) {
    if (e.index() != 0) out.push_back(e);
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

SubgroupBuilder::SubgroupBuilder(const FiniteRing& ring) : ring_(&ring), member_(ring.size(), 0) {
  member_[0] = 1;
  elems_.push_back(ring.zero());
}

bool SubgroupBuilder::insert(Elem x) {
  if (member_[x.index()]) return false;
  generators_.push_back(x);
  const std::size_t base = elems_.size();
  Elem y = x;
  while (!member_[y.index()]) {
    for (std::size_t i = 0; i < base; ++i) {
      const Elem z = ring_->add(elems_[i], y);
      member_[z.index()] = 1;
      elems_.push_back(z);
    }
    y = ring_->add(y, x);
  }
  return true;
}

ElementSet SubgroupBuilder::finish(SetKind kind) const {
  ElementSet s = ElementSet::from_elements(elems_, kind);
  s.generators_ = generators_;
  return s;
}

ElementSet additive_span(const FiniteRing& ring, std::span<const Elem> xs) {
  SubgroupBuilder b(ring);
  for (Elem x : xs) b.insert(x);
  return b.finish();
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return ElementSet::from_elements(std::move(out));
}

ElementSet product_span(const FiniteRing& ring, std::span<const Elem> xs, std::span<const Elem> ys) {
  SubgroupBuilder b(ring);
  for (Elem x : xs) {
    for (Elem y : ys) b.insert(ring.mul(x, y));
  }
  return b.finish();
}

}  // namespace hurwitz
