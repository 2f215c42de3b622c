#include "hurwitz/endomorphism.hpp"

#include <unordered_map>

namespace hurwitz {

namespace {

// Extends basis images linearly: b = (b - p^t) + e_t, t the lowest nonzero digit.
std::vector<Elem> linear_extension(const FiniteRing& ring, const std::vector<Elem>& basis_images) {
  const std::uint32_t n = ring.size(), p = ring.prime();
  std::vector<Elem> out(n);
  out[0] = ring.zero();
  std::vector<std::uint32_t> powers(ring.dimension());
  for (std::uint32_t i = 0; i < ring.dimension(); ++i) powers[i] = ring.basis(i).index();
  for (std::uint32_t b = 1; b < n; ++b) {
    std::uint32_t t = 0;
    while ((b / powers[t]) % p == 0) ++t;
    out[b] = ring.add(out[b - powers[t]], basis_images[t]);
  }
  return out;
}

}  // namespace

std::shared_ptr<const Endomorphism> Endomorphism::create(RingPtr ring_ptr, EndoKind kind,
                                                         std::span<const std::uint32_t> table) {
  std::shared_ptr<Endomorphism> e(new Endomorphism());
  const FiniteRing& ring = *ring_ptr;
  e->ring_ = std::move(ring_ptr);
  e->kind_ = kind;
  const std::uint32_t n = ring.size();
  auto& t = e->table_;

  switch (kind) {
    case EndoKind::Identity:
      t.resize(n);
      for (std::uint32_t i = 0; i < n; ++i) t[i] = Elem{i};
      break;
    case EndoKind::Frobenius: {
      if (ring.family() != Family::GaloisField) throw InvalidArgument("frobenius is only defined on GaloisField rings");
      t.resize(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        Elem x = ring.one();
        for (std::uint32_t k = 0; k < ring.prime(); ++k) x = ring.mul(x, Elem{i});
        t[i] = x;
      }
      break;
    }
    case EndoKind::Shift: {
      if (ring.family() != Family::MonomialAlgebra) throw InvalidArgument("shift is only defined on MonomialAlgebra rings");
      const std::uint32_t g = ring.monomial_generators();
      const auto& words = ring.monomial_words();
      std::vector<Elem> images(words.size());
      for (std::size_t w = 0; w < words.size(); ++w) {
        // x_k -> x_{k+1}, x_{G-1} -> 0, extended multiplicatively.
        Elem img = ring.one();
        for (std::uint32_t k : words[w]) img = (k + 1 < g) ? ring.mul(img, ring.monomial_generator(k + 1)) : ring.zero();
        images[w] = img;
      }
      t = linear_extension(ring, images);
      break;
    }
    case EndoKind::Explicit: {
      if (table.size() != n) {
        throw InvalidArgument("explicit endomorphism table needs " + std::to_string(n) + " entries, got " +
                              std::to_string(table.size()));
      }
      t.resize(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (table[i] >= n) throw InvalidArgument("explicit endomorphism entry out of range");
        t[i] = Elem{table[i]};
      }
      break;
    }
  }

  if (t[ring.one().index()] != ring.one()) throw InvalidArgument("endomorphism does not fix the unity");
  const auto gens = ring.additive_generators();
  for (Elem g : gens) {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (t[ring.add(Elem{a}, g).index()] != ring.add(t[a], t[g.index()])) {
        throw InvalidArgument("endomorphism is not additive");
      }
    }
    for (Elem h : gens) {
      if (t[ring.mul(g, h).index()] != ring.mul(t[g.index()], t[h.index()])) {
        throw InvalidArgument("endomorphism is not multiplicative");
      }
    }
  }

  e->identity_ = true;
  for (std::uint32_t i = 0; i < n && e->identity_; ++i) e->identity_ = t[i].index() == i;

  SubgroupBuilder whole(ring);
  for (Elem g : gens) whole.insert(g);
  e->chain_.push_back(whole.finish(SetKind::Subring));
  while (true) {
    ElementSet next = e->map(e->chain_.back());
    if (next.size() == e->chain_.back().size()) break;
    e->chain_.push_back(std::move(next));
  }
  e->monomorphism_ = e->chain_.size() == 1;
  return e;
}

Elem Endomorphism::apply(Elem a, std::uint64_t k) const {
  if (k <= ring_->size()) {
    for (std::uint64_t i = 0; i < k; ++i) a = table_[a.index()];
    return a;
  }
  // Long powers: reduce k along the eventually periodic orbit of a.
  std::unordered_map<Elem, std::uint64_t> seen;
  std::vector<Elem> orbit;
  Elem x = a;
  while (!seen.contains(x)) {
    seen.emplace(x, orbit.size());
    orbit.push_back(x);
    x = table_[x.index()];
  }
  const std::uint64_t start = seen[x], period = orbit.size() - start;
  return orbit[start + (k - start) % period];
}

const ElementSet& Endomorphism::image(std::uint64_t n) const {
  return n < chain_.size() ? chain_[n] : chain_.back();
}

ElementSet Endomorphism::map(const ElementSet& s) const {
  if (s.kind() != SetKind::Plain && !(s.generators().empty() && s.size() > 1)) {
    SubgroupBuilder b(*ring_);
    for (Elem g : s.generators()) b.insert(apply(g));
    return b.finish(s.kind() == SetKind::Subring ? SetKind::Subring : SetKind::Subgroup);
  }
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem x : s.elements()) out.push_back(apply(x));
  return ElementSet::from_elements(std::move(out));
}

ElementSet Endomorphism::map(const ElementSet& s, std::uint64_t k) const {
  ElementSet cur = s;
  for (std::uint64_t i = 0; i < k; ++i) cur = map(cur);
  return cur;
}

std::vector<Elem> Endomorphism::kernel() const {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < table_.size(); ++i) {
    if (ring_->is_zero(table_[i])) out.push_back(Elem{i});
  }
  return out;
}

RingContext make_ring(const RingSpec& spec) {
  RingContext ctx;
  ctx.ring = FiniteRing::create(spec);
  ctx.alpha = Endomorphism::create(ctx.ring, spec.endo, spec.endo_table);
  return ctx;
}

}  // namespace hurwitz
