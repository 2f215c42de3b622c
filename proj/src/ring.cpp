#include "hurwitz/ring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace hurwitz {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// p^e, or 0 when it exceeds cap.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / p) return 0;
    r *= p;
  }
  return r <= cap ? r : 0;
}

using Poly = std::vector<std::uint32_t>;  // low degree first, mod p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g (g nonzero) over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = std::uint64_t{f.back()} * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - c) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

Poly monic_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto d = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= d; ++k) {
    const std::uint64_t count = checked_pow(p, k, ~std::uint64_t{0});
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, k, p), p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of the given degree.
Poly find_irreducible(std::uint32_t p, std::uint32_t d) {
  const std::uint64_t count = checked_pow(p, d, ~std::uint64_t{0});
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(idx, d, p);
    if (d == 1 || (f[0] != 0 && is_irreducible(f, p))) return f;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

}  // namespace

RingSpec RingSpec::zmod(std::uint64_t n) {
  RingSpec s;
  s.family = Family::ZMod;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::galois(std::uint32_t p, std::uint32_t d) {
  RingSpec s;
  s.family = Family::GaloisField;
  s.prime = p;
  s.degree = d;
  return s;
}

RingSpec RingSpec::matrix(std::uint32_t p, std::uint32_t size) {
  RingSpec s;
  s.family = Family::MatrixRing;
  s.prime = p;
  s.matrix_size = size;
  return s;
}

RingSpec RingSpec::monomial(std::uint32_t generator_count, std::uint32_t p) {
  RingSpec s;
  s.family = Family::MonomialAlgebra;
  s.generators = generator_count;
  s.prime = p;
  return s;
}

RingSpec RingSpec::table(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                         std::uint32_t one) {
  RingSpec s;
  s.family = Family::Table;
  s.add_table = std::move(add);
  s.mul_table = std::move(mul);
  s.table_one = one;
  return s;
}

RingSpec RingSpec::with_endo(EndoKind kind, std::vector<std::uint32_t> table) const {
  RingSpec s = *this;
  s.endo = kind;
  s.endo_table = std::move(table);
  return s;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::ZMod: return "ZMod";
    case Family::GaloisField: return "GaloisField";
    case Family::MatrixRing: return "MatrixRing";
    case Family::MonomialAlgebra: return "MonomialAlgebra";
    case Family::Table: return "Table";
  }
  return "?";
}

std::string endo_kind_name(EndoKind k) {
  switch (k) {
    case EndoKind::Identity: return "identity";
    case EndoKind::Frobenius: return "frobenius";
    case EndoKind::Shift: return "shift";
    case EndoKind::Explicit: return "explicit";
  }
  return "?";
}

std::shared_ptr<const FiniteRing> FiniteRing::create(const RingSpec& spec) {
  if (spec.table_threshold > kMaxTableThreshold) {
    throw InvalidArgument("table threshold above " + std::to_string(kMaxTableThreshold));
  }
  std::shared_ptr<FiniteRing> ring(new FiniteRing());
  FiniteRing& r = *ring;
  r.family_ = spec.family;
  const std::uint64_t cap = spec.element_cap;

  switch (spec.family) {
    case Family::ZMod: {
      if (spec.modulus < 2) throw InvalidArgument("ZMod modulus must be >= 2");
      if (spec.modulus > cap) throw CapExceeded("ZMod(" + std::to_string(spec.modulus) + ") exceeds element cap");
      r.name_ = "ZMod(" + std::to_string(spec.modulus) + ")";
      r.modulus_ = spec.modulus;
      r.size_ = static_cast<std::uint32_t>(spec.modulus);
      r.one_ = Elem{1};
      if (is_prime(spec.modulus)) {
        r.prime_ = r.size_;
        r.dimension_ = 1;
        r.powers_ = {1};
      }
      break;
    }
    case Family::GaloisField: {
      const std::uint32_t p = spec.prime, d = spec.degree;
      if (!is_prime(p)) throw InvalidArgument("GaloisField characteristic must be prime");
      if (d < 1) throw InvalidArgument("GaloisField degree must be >= 1");
      if (checked_pow(p, d, cap) == 0) throw CapExceeded("GF(" + std::to_string(p) + "^" + std::to_string(d) + ") exceeds element cap");
      r.name_ = "GF(" + std::to_string(p) + "," + std::to_string(d) + ")";
      const Poly f = find_irreducible(p, d);
      r.gf_degree_ = d;
      r.gf_reduction_.resize(d);
      for (std::uint32_t i = 0; i < d; ++i) r.gf_reduction_[i] = (p - f[i]) % p;
      // Powers w^0 .. w^(2d-2) as coordinate vectors.
      std::vector<Poly> pw(2 * d - 1, Poly(d, 0));
      pw[0][0] = 1;
      for (std::uint32_t k = 1; k < pw.size(); ++k) {
        const std::uint32_t top = pw[k - 1][d - 1];
        for (std::uint32_t i = d - 1; i > 0; --i) pw[k][i] = pw[k - 1][i - 1];
        pw[k][0] = 0;
        for (std::uint32_t i = 0; i < d; ++i) {
          pw[k][i] = static_cast<std::uint32_t>((pw[k][i] + std::uint64_t{top} * r.gf_reduction_[i]) % p);
        }
      }
      std::vector<std::uint32_t> sc(std::size_t{d} * d * d, 0);
      for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
          for (std::uint32_t k = 0; k < d; ++k) sc[(std::size_t{i} * d + j) * d + k] = pw[i + j][k];
        }
      }
      r.init_algebra(p, d, std::move(sc), 1, cap);
      break;
    }
    case Family::MatrixRing: {
      const std::uint32_t p = spec.prime, s = spec.matrix_size;
      if (!is_prime(p)) throw InvalidArgument("MatrixRing characteristic must be prime");
      if (s < 1) throw InvalidArgument("MatrixRing size must be >= 1");
      if (checked_pow(p, std::uint64_t{s} * s, cap) == 0) throw CapExceeded("MatrixRing exceeds element cap");
      r.name_ = "MatrixRing(" + std::to_string(p) + "," + std::to_string(s) + ")";
      r.matrix_size_ = s;
      const std::uint32_t dim = s * s;
      std::vector<std::uint32_t> sc(std::size_t{dim} * dim * dim, 0);
      for (std::uint32_t a = 0; a < s; ++a) {
        for (std::uint32_t b = 0; b < s; ++b) {
          for (std::uint32_t c = 0; c < s; ++c) {
            // E_ab E_bc = E_ac
            const std::uint32_t i = a * s + b, j = b * s + c, k = a * s + c;
            sc[(std::size_t{i} * dim + j) * dim + k] = 1;
          }
        }
      }
      std::uint32_t one = 0;
      std::uint64_t pw = 1;
      for (std::uint32_t k = 0; k < dim; ++k) {
        if (k % (s + 1) == 0) one += static_cast<std::uint32_t>(pw);
        pw *= p;
      }
      r.init_algebra(p, dim, std::move(sc), one, cap);
      break;
    }
    case Family::MonomialAlgebra: {
      const std::uint32_t g = spec.generators, p = spec.prime;
      if (g < 1 || g > 20) throw InvalidArgument("MonomialAlgebra generator count must be in 1..20");
      if (!is_prime(p)) throw InvalidArgument("MonomialAlgebra coefficient field must have prime order");
      const std::uint32_t dim = std::uint32_t{1} << g;
      if (checked_pow(p, dim, cap) == 0) throw CapExceeded("MonomialAlgebra exceeds element cap");
      r.name_ = "MonomialAlgebra(" + std::to_string(g) + "," + std::to_string(p) + ")";
      r.monomial_generators_ = g;
      std::vector<std::uint32_t> masks(dim);
      std::iota(masks.begin(), masks.end(), 0u);
      auto word_of = [](std::uint32_t mask) {
        std::vector<std::uint32_t> w;
        for (std::uint32_t i = 0; mask; ++i, mask >>= 1) {
          if (mask & 1) w.push_back(i);
        }
        return w;
      };
      std::sort(masks.begin(), masks.end(), [&](std::uint32_t x, std::uint32_t y) {
        const int cx = std::popcount(x), cy = std::popcount(y);
        if (cx != cy) return cx < cy;
        return word_of(x) < word_of(y);
      });
      std::vector<std::uint32_t> position(dim);
      for (std::uint32_t i = 0; i < dim; ++i) {
        position[masks[i]] = i;
        r.words_.push_back(word_of(masks[i]));
      }
      std::vector<std::uint32_t> sc(std::size_t{dim} * dim * dim, 0);
      for (std::uint32_t i = 0; i < dim; ++i) {
        for (std::uint32_t j = 0; j < dim; ++j) {
          const std::uint32_t s = masks[i], t = masks[j];
          // Nonzero iff one side is empty or max(S) < min(T).
          const bool nonzero = s == 0 || t == 0 || (31 - std::countl_zero(s)) < std::countr_zero(t);
          if (nonzero) sc[(std::size_t{i} * dim + j) * dim + position[s | t]] = 1;
        }
      }
      r.init_algebra(p, dim, std::move(sc), 1, cap);
      break;
    }
    case Family::Table: {
      const std::size_t n2 = spec.add_table.size();
      const auto n = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(n2))));
      if (n < 1 || std::size_t{n} * n != n2 || spec.mul_table.size() != n2) {
        throw InvalidArgument("table ring: add and mul tables must both be |R| x |R|");
      }
      if (n > kMaxExplicitTableSize) {
        throw CapExceeded("table ring: at most " + std::to_string(kMaxExplicitTableSize) + " elements");
      }
      if (n > cap) throw CapExceeded("table ring exceeds element cap");
      for (std::size_t i = 0; i < n2; ++i) {
        if (spec.add_table[i] >= n || spec.mul_table[i] >= n) throw InvalidArgument("table ring: entry out of range");
      }
      if (spec.table_one >= n) throw InvalidArgument("table ring: unity index out of range");
      r.name_ = "Table(" + std::to_string(n) + ")";
      r.size_ = n;
      r.one_ = Elem{spec.table_one};
      r.add_table_.assign(spec.add_table.begin(), spec.add_table.end());
      r.mul_table_.assign(spec.mul_table.begin(), spec.mul_table.end());
      r.neg_table_.assign(n, 0);
      for (std::uint32_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::uint32_t b = 0; b < n && !found; ++b) {
          if (r.add_table_[std::size_t{a} * n + b] == 0) {
            r.neg_table_[a] = static_cast<std::uint16_t>(b);
            found = true;
          }
        }
        if (!found) throw InvalidArgument("table ring: element " + std::to_string(a) + " has no additive inverse");
      }
      break;
    }
  }

  if (r.prime_ != 0 && r.family_ != Family::ZMod && r.size_ <= spec.table_threshold) r.build_tables();
  r.compute_characteristic();
  r.compute_additive_generators();
  r.verify_structure();
  return ring;
}

void FiniteRing::init_algebra(std::uint32_t p, std::uint32_t dim, std::vector<std::uint32_t> sc,
                              std::uint32_t one_index, std::uint64_t cap) {
  prime_ = p;
  dimension_ = dim;
  const std::uint64_t size = checked_pow(p, dim, cap);
  size_ = static_cast<std::uint32_t>(size);
  powers_.resize(dim);
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    powers_[i] = static_cast<std::uint32_t>(pw);
    pw *= p;
  }
  structure_.assign(std::size_t{dim} * dim, {});
  for (std::uint32_t ij = 0; ij < dim * dim; ++ij) {
    for (std::uint32_t k = 0; k < dim; ++k) {
      const std::uint32_t c = sc[std::size_t{ij} * dim + k] % p;
      if (c != 0) structure_[ij].emplace_back(k, c);
    }
  }
  one_ = Elem{one_index};
}

void FiniteRing::build_tables() {
  const std::uint32_t n = size_;
  add_table_.resize(std::size_t{n} * n);
  mul_table_.resize(std::size_t{n} * n);
  neg_table_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    neg_table_[a] = static_cast<std::uint16_t>(algebra_neg(Elem{a}).index());
    for (std::uint32_t b = 0; b < n; ++b) {
      add_table_[std::size_t{a} * n + b] = static_cast<std::uint16_t>(algebra_add(Elem{a}, Elem{b}).index());
    }
  }
  // Row by row through linearity in the right factor: b = (b - p^t) + e_t
  // with t the lowest nonzero digit of b.
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint16_t* row = &mul_table_[std::size_t{a} * n];
    row[0] = 0;
    std::vector<std::uint16_t> basis_products(dimension_);
    for (std::uint32_t t = 0; t < dimension_; ++t) {
      basis_products[t] = static_cast<std::uint16_t>(algebra_mul(Elem{a}, Elem{powers_[t]}).index());
    }
    for (std::uint32_t b = 1; b < n; ++b) {
      std::uint32_t t = 0;
      while ((b / powers_[t]) % prime_ == 0) ++t;
      const std::uint32_t rest = b - powers_[t];
      row[b] = add_table_[std::size_t{row[rest]} * n + basis_products[t]];
    }
  }
}

void FiniteRing::compute_characteristic() {
  std::uint64_t c = 1;
  Elem x = one_;
  while (!is_zero(x)) {
    x = add(x, one_);
    ++c;
  }
  characteristic_ = c;
  nat_table_.resize(c);
  Elem acc = zero();
  for (std::uint64_t i = 0; i < c; ++i) {
    nat_table_[i] = acc;
    acc = add(acc, one_);
  }
}

void FiniteRing::compute_additive_generators() {
  additive_generators_.clear();
  if (family_ == Family::ZMod) {
    additive_generators_.push_back(Elem{1});
    return;
  }
  if (prime_ != 0) {
    for (std::uint32_t i = 0; i < dimension_; ++i) additive_generators_.push_back(Elem{powers_[i]});
    return;
  }
  // Greedy: extend the subgroup by the smallest element not yet covered.
  std::vector<std::uint8_t> member(size_, 0);
  std::vector<Elem> elems{zero()};
  member[0] = 1;
  for (std::uint32_t x = 1; x < size_; ++x) {
    if (member[x]) continue;
    additive_generators_.push_back(Elem{x});
    const std::size_t base = elems.size();
    Elem y{x};
    while (!member[y.index()]) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem z = add(elems[i], y);
        member[z.index()] = 1;
        elems.push_back(z);
      }
      y = add(y, Elem{x});
    }
  }
}

// Complete for every backend: algebra products are bilinear by construction,
// so associativity and unity on the basis imply them everywhere; table rings
// are checked exhaustively.
void FiniteRing::verify_structure() const {
  if (family_ == Family::Table) {
    const std::uint32_t n = size_;
    for (std::uint32_t a = 0; a < n; ++a) {
      const Elem ea{a};
      if (add(ea, zero()) != ea || add(zero(), ea) != ea) throw InvalidArgument("table ring: 0 is not an additive identity");
      if (mul(ea, one_) != ea || mul(one_, ea) != ea) throw InvalidArgument("table ring: unity is not a two-sided identity");
      for (std::uint32_t b = 0; b < n; ++b) {
        const Elem eb{b};
        if (add(ea, eb) != add(eb, ea)) throw InvalidArgument("table ring: addition is not commutative");
        for (std::uint32_t c = 0; c < n; ++c) {
          const Elem ec{c};
          if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) throw InvalidArgument("table ring: addition is not associative");
          if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) throw InvalidArgument("table ring: multiplication is not associative");
          if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) throw InvalidArgument("table ring: left distributivity fails");
          if (mul(add(eb, ec), ea) != add(mul(eb, ea), mul(ec, ea))) throw InvalidArgument("table ring: right distributivity fails");
        }
      }
    }
    return;
  }
  if (prime_ == 0 || family_ == Family::ZMod) return;
  const std::uint32_t d = dimension_;
  for (std::uint32_t i = 0; i < d; ++i) {
    const Elem ei = basis(i);
    if (algebra_mul(one_, ei) != ei || algebra_mul(ei, one_) != ei) {
      throw InvalidArgument(name_ + ": unity check failed on basis element " + std::to_string(i));
    }
    for (std::uint32_t j = 0; j < d; ++j) {
      const Elem ij = algebra_mul(ei, basis(j));
      for (std::uint32_t k = 0; k < d; ++k) {
        if (algebra_mul(ij, basis(k)) != algebra_mul(ei, algebra_mul(basis(j), basis(k)))) {
          throw InvalidArgument(name_ + ": associativity fails on basis triple");
        }
      }
    }
  }
}

Elem FiniteRing::algebra_add(Elem a, Elem b) const {
  if (prime_ == 2) return Elem{a.index() ^ b.index()};
  std::uint32_t x = a.index(), y = b.index(), out = 0;
  for (std::uint32_t i = 0; i < dimension_ && (x || y); ++i) {
    out += ((x % prime_ + y % prime_) % prime_) * powers_[i];
    x /= prime_;
    y /= prime_;
  }
  return Elem{out};
}

Elem FiniteRing::algebra_neg(Elem a) const {
  if (prime_ == 2) return a;
  std::uint32_t x = a.index(), out = 0;
  for (std::uint32_t i = 0; i < dimension_ && x; ++i) {
    out += ((prime_ - x % prime_) % prime_) * powers_[i];
    x /= prime_;
  }
  return Elem{out};
}

Elem FiniteRing::algebra_mul(Elem a, Elem b) const {
  const std::uint32_t d = dimension_;
  std::uint32_t ca[32], cb[32];
  std::uint64_t acc[32] = {};
  std::uint32_t x = a.index(), y = b.index();
  for (std::uint32_t i = 0; i < d; ++i) {
    ca[i] = x % prime_;
    x /= prime_;
    cb[i] = y % prime_;
    y /= prime_;
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      if (cb[j] == 0) continue;
      const std::uint64_t c = std::uint64_t{ca[i]} * cb[j] % prime_;
      for (const auto& [k, s] : structure_[std::size_t{i} * d + j]) acc[k] = (acc[k] + c * s) % prime_;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t k = 0; k < d; ++k) out += static_cast<std::uint32_t>(acc[k]) * powers_[k];
  return Elem{out};
}

Elem FiniteRing::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return Elem{add_table_[std::size_t{a.index()} * size_ + b.index()]};
  if (family_ == Family::ZMod) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.index()} + b.index()) % modulus_)};
  return algebra_add(a, b);
}

Elem FiniteRing::neg(Elem a) const {
  if (!neg_table_.empty()) return Elem{neg_table_[a.index()]};
  if (family_ == Family::ZMod) return Elem{static_cast<std::uint32_t>((modulus_ - a.index()) % modulus_)};
  return algebra_neg(a);
}

Elem FiniteRing::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return Elem{mul_table_[std::size_t{a.index()} * size_ + b.index()]};
  if (family_ == Family::ZMod) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.index()} * b.index() % modulus_)};
  return algebra_mul(a, b);
}

Elem FiniteRing::nat_embed(std::uint64_t n) const { return nat_table_[n % characteristic_]; }

std::vector<std::uint32_t> FiniteRing::coordinates(Elem a) const {
  if (prime_ == 0) throw PreconditionFailed(name_ + " is not an algebra over a prime field");
  std::vector<std::uint32_t> c(dimension_);
  std::uint32_t x = a.index();
  for (std::uint32_t i = 0; i < dimension_; ++i) {
    c[i] = x % prime_;
    x /= prime_;
  }
  return c;
}

Elem FiniteRing::from_coordinates(std::span<const std::uint32_t> coords) const {
  if (prime_ == 0) throw PreconditionFailed(name_ + " is not an algebra over a prime field");
  if (coords.size() != dimension_) throw InvalidArgument("coordinate vector has wrong length");
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < dimension_; ++i) out += (coords[i] % prime_) * powers_[i];
  return Elem{out};
}

Elem FiniteRing::basis(std::uint32_t i) const {
  if (prime_ == 0 || i >= dimension_) throw InvalidArgument("basis index out of range");
  return Elem{powers_[i]};
}

Elem FiniteRing::monomial_generator(std::uint32_t i) const {
  if (family_ != Family::MonomialAlgebra || i >= monomial_generators_) {
    throw InvalidArgument("no monomial generator x" + std::to_string(i) + " in " + name_);
  }
  // Words of length one follow the empty word, in generator order.
  return basis(1 + i);
}

}  // namespace hurwitz
