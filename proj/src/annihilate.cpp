#include "hurwitz/annihilate.hpp"

#include <algorithm>
#include <limits>

#include "hurwitz/fp_linalg.hpp"
#include "hurwitz/kernels.hpp"

namespace hurwitz {

namespace {

constexpr std::size_t kReduceAbove = 32;

void require_nonempty(std::span<const Elem> fs) {
  if (fs.empty()) throw PreconditionFailed("annihilator of an empty set is undefined here");
}

SetKind ideal_kind(Side side) { return side == Side::Left ? SetKind::LeftIdeal : SetKind::RightIdeal; }

Elem product(const FiniteRing& ring, Elem r, Elem f, Side side) {
  return side == Side::Left ? ring.mul(r, f) : ring.mul(f, r);
}

// Elements r in span(basis) with r f = 0 (or f r = 0) for all f, by a
// nullspace over the coordinates of r in the given basis.
ElementSet nullspace_within(const FiniteRing& ring, std::span<const Elem> fs, Side side,
                            std::span<const Elem> basis, SetKind kind) {
  const std::uint32_t dim = ring.dimension();
  linalg::FpMatrix m(fs.size() * dim, basis.size(), ring.prime());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const auto c = ring.coordinates(product(ring, basis[j], fs[fi], side));
      for (std::uint32_t t = 0; t < dim; ++t) m.at(fi * dim + t, j) = c[t];
    }
  }
  SubgroupBuilder b(ring);
  for (const auto& v : linalg::nullspace(std::move(m))) {
    Elem x = ring.zero();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (v[j] != 0) x = ring.add(x, ring.scale(v[j], basis[j]));
    }
    b.insert(x);
  }
  return b.finish(kind);
}

std::vector<Elem> all_elements(const FiniteRing& ring) {
  std::vector<Elem> out(ring.size());
  for (std::uint32_t i = 0; i < ring.size(); ++i) out[i] = Elem{i};
  return out;
}

// The annihilator of a set equals that of its additive span; large sets are
// replaced by the span's generators.
std::vector<Elem> reduced(const FiniteRing& ring, std::span<const Elem> fs) {
  if (fs.size() <= kReduceAbove) return {fs.begin(), fs.end()};
  const ElementSet span = additive_span(ring, fs);
  return {span.generators().begin(), span.generators().end()};
}

// Elements of `candidates` (in order) that also kill the element x.
std::vector<Elem> filter_by(const FiniteRing& ring, const std::vector<Elem>& candidates, Elem x, Side side) {
  std::vector<Elem> out;
  out.reserve(candidates.size());
  for (Elem r : candidates) {
    if (ring.is_zero(product(ring, r, x, side))) out.push_back(r);
  }
  return out;
}

bool extend_certificate(const FiniteRing& ring, const std::vector<Elem>& cands, const std::vector<Elem>& ann,
                        std::size_t start, std::size_t remaining, Side side, std::vector<std::size_t>& chosen) {
  if (ann.size() == 1) return true;
  if (remaining == 0) return false;
  for (std::size_t j = start; j < cands.size(); ++j) {
    std::vector<Elem> next = filter_by(ring, ann, cands[j], side);
    // An element that does not shrink the annihilator never occurs in a
    // minimal certificate.
    if (next.size() == ann.size()) continue;
    chosen.push_back(j);
    if (extend_certificate(ring, cands, next, j + 1, remaining - 1, side, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

ElementSet annihilator(const FiniteRing& ring, std::span<const Elem> fs, Side side, AnnBackend backend) {
  require_nonempty(fs);
  if (backend == AnnBackend::Auto) {
    backend = (ring.is_fp_algebra() && !ring.tabulated() && ring.size() > kDefaultTableThreshold)
                  ? AnnBackend::Nullspace
                  : AnnBackend::Enumeration;
  }
  if (backend == AnnBackend::Nullspace) {
    if (!ring.is_fp_algebra()) throw PreconditionFailed("nullspace backend needs an algebra over a prime field");
    std::vector<Elem> basis;
    for (std::uint32_t i = 0; i < ring.dimension(); ++i) basis.push_back(ring.basis(i));
    return nullspace_within(ring, reduced(ring, fs), side, basis, ideal_kind(side));
  }
  const auto fset = reduced(ring, fs);
  const auto cands = all_elements(ring);
  return ElementSet::from_elements(kernels::parallel::annihilator_scan(ring, cands, fset, side), ideal_kind(side));
}

ElementSet left_annihilator(const FiniteRing& ring, std::span<const Elem> fs, AnnBackend backend) {
  return annihilator(ring, fs, Side::Left, backend);
}

ElementSet right_annihilator(const FiniteRing& ring, std::span<const Elem> fs, AnnBackend backend) {
  return annihilator(ring, fs, Side::Right, backend);
}

ElementSet annihilator_within(const FiniteRing& ring, std::span<const Elem> fs, Side side,
                              const ElementSet& candidates) {
  require_nonempty(fs);
  const auto fset = reduced(ring, fs);
  if (ring.is_fp_algebra() && !ring.tabulated() && !candidates.generators().empty()) {
    return nullspace_within(ring, fset, side, candidates.generators(), SetKind::Subgroup);
  }
  return ElementSet::from_elements(
      kernels::parallel::annihilator_scan(ring, candidates.elements(), fset, side), SetKind::Subgroup);
}

bool verify_certificate(const FiniteRing& ring, const InsulatorCertificate& cert) {
  if (cert.set.empty()) return false;
  return annihilator(ring, cert.set, cert.side, AnnBackend::Enumeration).is_zero();
}

std::optional<InsulatorCertificate> is_insulator(const FiniteRing& ring, std::span<const Elem> fs, Side side) {
  ElementSet ann = annihilator(ring, fs, side);
  if (!ann.is_zero()) return std::nullopt;
  InsulatorCertificate cert;
  cert.side = side;
  cert.set = ElementSet::from_elements({fs.begin(), fs.end()}).nonzero();
  if (cert.set.empty()) cert.set = {ring.zero()};
  cert.annihilator = std::move(ann);
  return cert;
}

InsulatorSearchResult insulator_search(const FiniteRing& ring, const ElementSet& within, Side side,
                                       std::size_t max_size) {
  const std::vector<Elem> cands = within.nonzero();
  if (cands.empty()) throw PreconditionFailed("insulator search needs a nonzero set");
  ElementSet ann = annihilator(ring, within.elements(), side);
  if (!ann.is_zero()) {
    ProvedAbsent absent;
    absent.side = side;
    absent.witness = ann.nonzero().front();
    absent.annihilator = std::move(ann);
    return absent;
  }
  const std::vector<Elem> everything = all_elements(ring);
  for (std::size_t s = 1; s <= max_size && s <= cands.size(); ++s) {
    std::vector<std::vector<std::size_t>> found(cands.size());
    const auto first = kernels::parallel::first_match(cands.size(), [&](std::size_t i) {
      std::vector<std::size_t> chosen{i};
      const std::vector<Elem> start = filter_by(ring, everything, cands[i], side);
      if (!extend_certificate(ring, cands, start, i + 1, s - 1, side, chosen)) return false;
      found[i] = std::move(chosen);
      return true;
    });
    if (first) {
      InsulatorCertificate cert;
      cert.side = side;
      for (std::size_t j : found[*first]) cert.set.push_back(cands[j]);
      cert.annihilator = annihilator(ring, cert.set, side);
      cert.minimal = true;
      return cert;
    }
  }
  InsulatorCertificate cert;
  cert.side = side;
  cert.set = cands;
  cert.annihilator = std::move(ann);
  return cert;
}

ElementSet ann_meet_image(const Endomorphism& alpha, std::span<const Elem> fs, std::uint64_t n) {
  return annihilator_within(alpha.ring(), fs, Side::Right, alpha.image(n));
}

EventualMeet ann_meet_eventual(const Endomorphism& alpha, std::span<const Elem> fs) {
  EventualMeet out;
  const std::uint32_t last = alpha.stabilization_index();
  out.meet = ann_meet_image(alpha, fs, last);
  out.index = last;
  for (std::uint32_t n = 0; n < last; ++n) {
    if (ann_meet_image(alpha, fs, n) == out.meet) {
      out.index = n;
      break;
    }
  }
  return out;
}

Degree default_degree_bound(std::span<const HPoly> fhat) {
  Degree m = 0;
  for (const HPoly& f : fhat) m = std::max(m, f.degree().value_or(0));
  return 2 * m + 2;
}

BoundedAnnihilator hp_ann_bounded(const Endomorphism& alpha, std::span<const HPoly> fhat, Side side, Degree bound) {
  if (fhat.empty()) throw PreconditionFailed("bounded annihilator of an empty polynomial set");
  for (const HPoly& f : fhat) {
    if (f.is_zero()) throw PreconditionFailed("bounded annihilator needs nonzero polynomials");
    if (f.ring_ptr() != alpha.ring_ptr()) throw InvalidArgument("polynomial and endomorphism live over different rings");
  }
  if (bound > kMaxDegree) throw CapExceeded("degree bound above " + std::to_string(kMaxDegree));
  const RingPtr& ringp = alpha.ring_ptr();
  const FiniteRing& ring = *ringp;
  auto times = [&](const HPoly& g, const HPoly& f) { return side == Side::Left ? hp_mul(g, f, alpha) : hp_mul(f, g, alpha); };

  BoundedAnnihilator out;
  out.side = side;
  out.bound = bound;

  if (ring.is_fp_algebra()) {
    out.method = "nullspace";
    const std::uint32_t dim = ring.dimension();
    const std::size_t cols = std::size_t{bound + 1} * dim;
    std::vector<std::size_t> row_offset;
    std::size_t rows = 0;
    for (const HPoly& f : fhat) {
      row_offset.push_back(rows);
      rows += std::size_t{bound + *f.degree() + 1} * dim;
    }
    linalg::FpMatrix m(rows, cols, ring.prime());
    for (Degree d = 0; d <= bound; ++d) {
      for (std::uint32_t i = 0; i < dim; ++i) {
        const HPoly g = HPoly::monomial(ringp, d, ring.basis(i));
        for (std::size_t fi = 0; fi < fhat.size(); ++fi) {
          const HPoly product = times(g, fhat[fi]);
          for (const Term& t : product.terms()) {
            const auto c = ring.coordinates(t.coeff);
            for (std::uint32_t k = 0; k < dim; ++k) m.at(row_offset[fi] + std::size_t{t.degree} * dim + k, std::size_t{d} * dim + i) = c[k];
          }
        }
      }
    }
    const auto basis = linalg::nullspace(std::move(m));
    out.trivial = basis.empty();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      count = count > std::numeric_limits<std::uint64_t>::max() / ring.prime() ? std::numeric_limits<std::uint64_t>::max()
                                                                               : count * ring.prime();
    }
    out.solution_count = count;
    for (const auto& v : basis) {
      std::vector<std::pair<Degree, Elem>> pairs;
      for (Degree d = 0; d <= bound; ++d) {
        pairs.emplace_back(d, ring.from_coordinates(std::span<const std::uint32_t>(v).subspan(std::size_t{d} * dim, dim)));
      }
      out.witnesses.push_back(HPoly::make(ringp, std::move(pairs)));
    }
    return out;
  }

  out.method = "enumeration";
  std::uint64_t total = 1;
  for (Degree d = 0; d <= bound; ++d) {
    if (total > kBoundedEnumerationCap / ring.size()) {
      throw CapExceeded("bounded annihilator enumeration over " + ring.name() + " with degree bound " +
                        std::to_string(bound) + " exceeds the candidate cap");
    }
    total *= ring.size();
  }
  auto decode = [&](std::uint64_t code) {
    std::vector<std::pair<Degree, Elem>> pairs;
    for (Degree d = 0; d <= bound; ++d) {
      pairs.emplace_back(d, Elem{static_cast<std::uint32_t>(code % ring.size())});
      code /= ring.size();
    }
    return HPoly::make(ringp, std::move(pairs));
  };
  const auto hits = kernels::parallel::select(total - 1, [&](std::size_t i) {
    const HPoly g = decode(i + 1);
    for (const HPoly& f : fhat) {
      if (!times(g, f).is_zero()) return false;
    }
    return true;
  });
  out.trivial = hits.empty();
  out.solution_count = hits.size() + 1;
  for (std::size_t i = 0; i < hits.size() && i < 16; ++i) out.witnesses.push_back(decode(hits[i] + 1));
  return out;
}

}  // namespace hurwitz
