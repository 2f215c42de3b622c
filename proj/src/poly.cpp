#include "hurwitz/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace hurwitz {

namespace {

void require_same_ring(const HPoly& f, const HPoly& g) {
  if (f.ring_ptr() != g.ring_ptr()) throw InvalidArgument("polynomials live over different rings");
}

void check_degree(Degree d) {
  if (d > kMaxDegree) throw CapExceeded("degree " + std::to_string(d) + " above limit " + std::to_string(kMaxDegree));
}

// Pascal's triangle modulo m, grown row by row on demand.
class PascalRows {
 public:
  explicit PascalRows(std::uint64_t m) : m_(m) { rows_.push_back({static_cast<std::uint32_t>(1 % m)}); }

  std::uint64_t get(std::uint64_t n, std::uint64_t k) {
    if (n > 2 * std::uint64_t{kMaxDegree}) throw CapExceeded("binomial row above limit");
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      std::vector<std::uint32_t> row(prev.size() + 1);
      row.front() = row.back() = static_cast<std::uint32_t>(1 % m_);
      for (std::size_t i = 1; i + 1 < row.size(); ++i) {
        row[i] = static_cast<std::uint32_t>((std::uint64_t{prev[i - 1]} + prev[i]) % m_);
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::uint64_t m_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

PascalRows& rows_for(std::uint64_t m) {
  thread_local std::unordered_map<std::uint64_t, PascalRows> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, PascalRows(m)).first;
  return it->second;
}

}  // namespace

HPoly HPoly::make(RingPtr ring, std::vector<std::pair<Degree, Elem>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  HPoly f(std::move(ring));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first) {
      throw InvalidArgument("duplicate degree " + std::to_string(pairs[i].first));
    }
    check_degree(pairs[i].first);
    if (!f.ring_->contains(pairs[i].second)) throw InvalidArgument("coefficient is not an element of " + f.ring_->name());
    if (!f.ring_->is_zero(pairs[i].second)) f.terms_.push_back({pairs[i].first, pairs[i].second});
  }
  return f;
}

HPoly HPoly::basis(RingPtr ring, Degree n) {
  if (n < 1) throw InvalidArgument("h_n needs n >= 1");
  const Elem one = ring->one();
  return make(std::move(ring), {{n - 1, one}});
}

HPoly HPoly::constant(RingPtr ring, Elem r) { return make(std::move(ring), {{0, r}}); }

HPoly HPoly::monomial(RingPtr ring, Degree degree, Elem coeff) { return make(std::move(ring), {{degree, coeff}}); }

Elem HPoly::coeff(Degree d) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d, [](const Term& t, Degree x) { return t.degree < x; });
  return (it != terms_.end() && it->degree == d) ? it->coeff : ring_->zero();
}

std::optional<Degree> HPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().degree;
}

bool operator<(const HPoly& a, const HPoly& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const Term& x, const Term& y) {
                                        return x.degree != y.degree ? x.degree < y.degree : x.coeff < y.coeff;
                                      });
}

HPoly hp_add(const HPoly& f, const HPoly& g) {
  require_same_ring(f, g);
  const FiniteRing& ring = f.ring();
  std::vector<std::pair<Degree, Elem>> out;
  auto a = f.terms().begin(), b = g.terms().begin();
  while (a != f.terms().end() || b != g.terms().end()) {
    if (b == g.terms().end() || (a != f.terms().end() && a->degree < b->degree)) {
      out.emplace_back(a->degree, a->coeff);
      ++a;
    } else if (a == f.terms().end() || b->degree < a->degree) {
      out.emplace_back(b->degree, b->coeff);
      ++b;
    } else {
      out.emplace_back(a->degree, ring.add(a->coeff, b->coeff));
      ++a;
      ++b;
    }
  }
  return HPoly::make(f.ring_ptr(), std::move(out));
}

HPoly hp_neg(const HPoly& f) {
  std::vector<std::pair<Degree, Elem>> out;
  for (const Term& t : f.terms()) out.emplace_back(t.degree, f.ring().neg(t.coeff));
  return HPoly::make(f.ring_ptr(), std::move(out));
}

HPoly hp_sub(const HPoly& f, const HPoly& g) { return hp_add(f, hp_neg(g)); }

HPoly hp_mul(const HPoly& f, const HPoly& g, const Endomorphism& alpha) {
  require_same_ring(f, g);
  if (alpha.ring_ptr() != f.ring_ptr()) throw InvalidArgument("endomorphism belongs to a different ring");
  const FiniteRing& ring = f.ring();
  std::map<Degree, Elem> acc;
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) {
      const Degree n = a.degree + b.degree;
      const std::uint64_t c = binom_mod(n, a.degree, ring.characteristic());
      if (c == 0) continue;
      const Elem term = ring.scale(c, ring.mul(a.coeff, alpha.apply(b.coeff, a.degree)));
      auto [it, fresh] = acc.emplace(n, term);
      if (!fresh) it->second = ring.add(it->second, term);
    }
  }
  std::vector<std::pair<Degree, Elem>> out(acc.begin(), acc.end());
  return HPoly::make(f.ring_ptr(), std::move(out));
}

std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  if (k > n) throw InvalidArgument("binomial needs k <= n");
  return rows_for(m).get(n, k);
}

Elem binom_reduced(std::uint64_t n, std::uint64_t k, const FiniteRing& ring) {
  return ring.nat_embed(binom_mod(n, k, ring.characteristic()));
}

SupportStats hp_stats(const HPoly& f) {
  if (f.is_zero()) throw PreconditionFailed("the zero polynomial has no minimal or maximal support degree");
  SupportStats s;
  for (const Term& t : f.terms()) s.support.push_back(t.degree);
  s.pi = f.terms().front().degree;
  s.delta = f.terms().back().degree;
  s.leading = f.terms().back().coeff;
  return s;
}

std::vector<HPoly> hp_embed_set(const RingPtr& ring, const ElementSet& a) {
  std::vector<HPoly> out;
  for (Elem r : a.elements()) out.push_back(HPoly::constant(ring, r));
  return out;
}

}  // namespace hurwitz
