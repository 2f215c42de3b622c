#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/error.hpp"

namespace hurwitz {

/// An element of a FiniteRing, identified by its canonical index.
///
/// Index 0 is always the zero element. Equality is index equality; the
/// ordering is the canonical element order used for every report.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Which side a multiplication, annihilator or insulator acts on.
enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

enum class Family { ZMod, GaloisField, MatrixRing, MonomialAlgebra, Table };
enum class EndoKind { Identity, Frobenius, Shift, Explicit };

inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultTableThreshold = 4096;
inline constexpr std::uint64_t kMaxTableThreshold = 65536;
inline constexpr std::uint32_t kMaxExplicitTableSize = 256;

/// Everything needed to build a ring and its endomorphism.
struct RingSpec {
  Family family = Family::ZMod;
  std::uint64_t modulus = 2;       // ZMod
  std::uint32_t prime = 2;         // GaloisField, MatrixRing, MonomialAlgebra
  std::uint32_t degree = 1;        // GaloisField extension degree
  std::uint32_t matrix_size = 1;   // MatrixRing
  std::uint32_t generators = 1;    // MonomialAlgebra

  // Table family: row-major |R| x |R| tables, element 0 is zero.
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t table_one = 1;

  EndoKind endo = EndoKind::Identity;
  std::vector<std::uint32_t> endo_table;

  std::uint64_t element_cap = kDefaultElementCap;
  std::uint64_t table_threshold = kDefaultTableThreshold;

  static RingSpec zmod(std::uint64_t n);
  static RingSpec galois(std::uint32_t p, std::uint32_t d);
  static RingSpec matrix(std::uint32_t p, std::uint32_t s);
  static RingSpec monomial(std::uint32_t generator_count, std::uint32_t p);
  static RingSpec table(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                        std::uint32_t one);

  RingSpec with_endo(EndoKind kind, std::vector<std::uint32_t> table = {}) const;
};

std::string family_name(Family f);
std::string endo_kind_name(EndoKind k);

/// A finite associative unital ring.
///
/// Elements are the indices 0..size()-1. Three arithmetic backends sit
/// behind the same interface: modular arithmetic (ZMod), a basis with
/// structure constants over F_p (GaloisField, MatrixRing, MonomialAlgebra),
/// and full add/mul tables. Algebra rings with at most table_threshold
/// elements are tabulated at construction.
///
/// For F_p-algebras the index of an element is sum_i c_i p^i where c is its
/// coordinate vector in the family's canonical basis.
///
/// Immutable after construction; all members are safe for concurrent use.
class FiniteRing {
 public:
  /// Builds and validates a ring. Throws InvalidArgument on bad parameters
  /// or an axiom violation, CapExceeded when the element count is too big.
  static std::shared_ptr<const FiniteRing> create(const RingSpec& spec);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  std::uint32_t size() const { return size_; }
  std::uint64_t characteristic() const { return characteristic_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return one_; }
  bool is_zero(Elem a) const { return a.index() == 0; }
  bool contains(Elem a) const { return a.index() < size_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;

  /// n * 1, reduced modulo the characteristic.
  Elem nat_embed(std::uint64_t n) const;
  /// n * a as an iterated sum.
  Elem scale(std::uint64_t n, Elem a) const { return mul(nat_embed(n), a); }

  /// True for ZMod(p) and every algebra family.
  bool is_fp_algebra() const { return prime_ != 0; }
  std::uint32_t prime() const { return prime_; }
  std::uint32_t dimension() const { return dimension_; }
  std::vector<std::uint32_t> coordinates(Elem a) const;
  Elem from_coordinates(std::span<const std::uint32_t> coords) const;
  Elem basis(std::uint32_t i) const;

  /// A small set whose additive span is the whole ring.
  std::span<const Elem> additive_generators() const { return additive_generators_; }
  bool tabulated() const { return !mul_table_.empty(); }

  // Family metadata.
  std::uint32_t gf_degree() const { return gf_degree_; }
  /// Coefficients c_0..c_{d-1} of w^d = sum c_i w^i in GaloisField.
  std::span<const std::uint32_t> gf_reduction() const { return gf_reduction_; }
  std::uint32_t matrix_size() const { return matrix_size_; }
  std::uint32_t monomial_generators() const { return monomial_generators_; }
  /// Basis words of MonomialAlgebra in canonical order, each a strictly
  /// increasing list of generator indices.
  const std::vector<std::vector<std::uint32_t>>& monomial_words() const { return words_; }
  /// The generator x_i of MonomialAlgebra.
  Elem monomial_generator(std::uint32_t i) const;

 private:
  FiniteRing() = default;

  void init_algebra(std::uint32_t p, std::uint32_t dim, std::vector<std::uint32_t> structure,
                    std::uint32_t one_index, std::uint64_t cap);
  void build_tables();
  void compute_characteristic();
  void compute_additive_generators();
  void verify_structure() const;

  Elem algebra_add(Elem a, Elem b) const;
  Elem algebra_neg(Elem a) const;
  Elem algebra_mul(Elem a, Elem b) const;

  Family family_ = Family::ZMod;
  std::string name_;
  std::uint32_t size_ = 0;
  std::uint64_t characteristic_ = 0;
  Elem one_{1};

  std::uint64_t modulus_ = 0;  // ZMod direct arithmetic

  std::uint32_t prime_ = 0;
  std::uint32_t dimension_ = 0;
  std::vector<std::uint32_t> powers_;     // p^i
  // e_i e_j as sparse (k, coefficient) lists, indexed by i*dim+j.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> structure_;

  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;

  std::vector<Elem> nat_table_;
  std::vector<Elem> additive_generators_;

  std::uint32_t gf_degree_ = 0;
  std::vector<std::uint32_t> gf_reduction_;
  std::uint32_t matrix_size_ = 0;
  std::uint32_t monomial_generators_ = 0;
  std::vector<std::vector<std::uint32_t>> words_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::Elem> {
  std::size_t operator()(hurwitz::Elem e) const noexcept { return std::hash<std::uint32_t>{}(e.index()); }
};
