#include <gtest/gtest.h>

#include "hurwitz/annihilate.hpp"
#include "hurwitz/error.hpp"
#include "support.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

std::vector<Elem> elems(std::initializer_list<std::uint32_t> xs) {
  std::vector<Elem> out;
  for (auto x : xs) out.push_back(Elem{x});
  return out;
}

TEST(Annihilator, ZMod6) {
  const auto r = FiniteRing::create(RingSpec::zmod(6));
  EXPECT_EQ(left_annihilator(*r, elems({2, 4})).nonzero(), elems({3}));
  EXPECT_EQ(right_annihilator(*r, elems({3})).nonzero(), elems({2, 4}));
  EXPECT_TRUE(left_annihilator(*r, elems({1})).is_zero());
  EXPECT_EQ(left_annihilator(*r, elems({0})).size(), 6u);
  EXPECT_THROW(left_annihilator(*r, {}), PreconditionFailed);
}

TEST(Annihilator, BackendsAgreeWithBruteForce) {
  for (const RingSpec& s : {RingSpec::monomial(2, 2), RingSpec::monomial(2, 3), RingSpec::matrix(2, 2),
                            RingSpec::galois(2, 3)}) {
    const auto r = FiniteRing::create(s);
    const auto all = all_elements(*r);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); j += 3) {
        const std::vector<Elem> fs{all[i], all[j]};
        for (Side side : {Side::Left, Side::Right}) {
          const auto expect = ElementSet::from_elements(brute_annihilator(*r, fs, side == Side::Left));
          ASSERT_EQ(annihilator(*r, fs, side, AnnBackend::Enumeration), expect);
          ASSERT_EQ(annihilator(*r, fs, side, AnnBackend::Nullspace), expect);
        }
      }
    }
  }
}

TEST(Annihilator, NullspaceRejectsNonAlgebra) {
  const auto r = FiniteRing::create(RingSpec::zmod(4));
  EXPECT_THROW(annihilator(*r, elems({2}), Side::Left, AnnBackend::Nullspace), PreconditionFailed);
}

// Untabulated MonomialAlgebra(4,2): the automatic backend solves over F_2.
TEST(Annihilator, LargeAlgebraUsesNullspace) {
  const auto r = FiniteRing::create(RingSpec::monomial(4, 2));
  const Elem x3 = r->monomial_generator(3), x0 = r->monomial_generator(0);
  const ElementSet a = left_annihilator(*r, std::vector<Elem>{x0});
  // z x0 = 0 iff z has no component on words that end before x0, i.e. z lies in the span of nonempty words.
  EXPECT_EQ(a.size(), 32768u);
  EXPECT_TRUE(a.contains(x3));
  EXPECT_FALSE(a.contains(r->one()));
  EXPECT_EQ(a, ElementSet::from_elements(brute_annihilator(*r, {x0}, true)));
}

TEST(Annihilator, WithinSubgroup) {
  const auto c = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  const Elem x0 = c.ring->monomial_generator(0);
  const ElementSet got = annihilator_within(*c.ring, std::vector<Elem>{x0}, Side::Right, c.alpha->image(1));
  EXPECT_EQ(got, intersect(right_annihilator(*c.ring, std::vector<Elem>{x0}), c.alpha->image(1)));
}

TEST(InsulatorSearch, ProvedAbsentInZMod6) {
  const auto r = FiniteRing::create(RingSpec::zmod(6));
  for (Side side : {Side::Left, Side::Right}) {
    const auto res = insulator_search(*r, ElementSet::from_elements(elems({0, 2, 4})), side);
    ASSERT_TRUE(std::holds_alternative<ProvedAbsent>(res));
    EXPECT_EQ(std::get<ProvedAbsent>(res).witness, Elem{3});
  }
}

TEST(InsulatorSearch, WholeRingGivesSingleton) {
  const auto z = FiniteRing::create(RingSpec::zmod(12));
  const auto res = insulator_search(*z, ElementSet::from_elements(all_elements(*z)), Side::Left);
  ASSERT_TRUE(std::holds_alternative<InsulatorCertificate>(res));
  EXPECT_EQ(std::get<InsulatorCertificate>(res).set, elems({1}));

  // In M_2(F_2) the lex-first unit is the swap matrix [[0,1],[1,0]] (index 6).
  const auto m = FiniteRing::create(RingSpec::matrix(2, 2));
  const auto mres = insulator_search(*m, ElementSet::from_elements(all_elements(*m)), Side::Left);
  ASSERT_TRUE(std::holds_alternative<InsulatorCertificate>(mres));
  EXPECT_EQ(std::get<InsulatorCertificate>(mres).set, elems({6}));
}

// R E11 = {0, E11, E21, E11 + E21}: no single element insulates on the left, {E11, E21} does.
TEST(InsulatorSearch, MatrixLeftIdealNeedsTwoElements) {
  const auto m = FiniteRing::create(RingSpec::matrix(2, 2));
  const ElementSet ideal = ElementSet::from_elements(elems({0, 1, 4, 5}));
  const auto res = insulator_search(*m, ideal, Side::Left);
  ASSERT_TRUE(std::holds_alternative<InsulatorCertificate>(res));
  const auto& cert = std::get<InsulatorCertificate>(res);
  EXPECT_EQ(cert.set, elems({1, 4}));
  EXPECT_TRUE(cert.minimal);
  EXPECT_TRUE(verify_certificate(*m, cert));
  EXPECT_TRUE(std::holds_alternative<ProvedAbsent>(insulator_search(*m, ideal, Side::Right)));
}

TEST(InsulatorSearch, RejectsZeroSet) {
  const auto r = FiniteRing::create(RingSpec::zmod(6));
  EXPECT_THROW(insulator_search(*r, ElementSet::zero_set(), Side::Left), PreconditionFailed);
}

// Property: existence matches the annihilator of the whole set, and the
// certificate is lex-first among the smallest insulating subsets.
TEST(InsulatorSearch, MinimalAndLexFirstOnRandomSets) {
  for (const RingSpec& s : {RingSpec::zmod(12), RingSpec::matrix(2, 2), RingSpec::monomial(2, 2)}) {
    const auto r = FiniteRing::create(s);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      auto within = random_subset(rng, *r, 5);
      if (within.size() == 1 && within[0] == r->zero()) continue;
      const ElementSet set = ElementSet::from_elements(within);
      for (Side side : {Side::Left, Side::Right}) {
        const bool exists = annihilator(*r, set.elements(), side).is_zero();
        const auto res = insulator_search(*r, set, side, 3);
        ASSERT_EQ(std::holds_alternative<InsulatorCertificate>(res), exists);
        if (!exists) continue;
        const auto& cert = std::get<InsulatorCertificate>(res);
        ASSERT_TRUE(verify_certificate(*r, cert));
        // Brute force over subsets of the nonzero members in lex order by size.
        const auto nz = set.nonzero();
        std::optional<std::vector<Elem>> best;
        for (std::size_t size = 1; size <= std::min<std::size_t>(3, nz.size()) && !best; ++size) {
          std::vector<bool> pick(nz.size(), false);
          std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
          do {
            std::vector<Elem> sub;
            for (std::size_t i = 0; i < nz.size(); ++i)
              if (pick[i]) sub.push_back(nz[i]);
            if (annihilator(*r, sub, side).is_zero()) {
              best = sub;
              break;
            }
          } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        if (best) {
          ASSERT_EQ(cert.set, *best) << r->name();
          ASSERT_TRUE(cert.minimal);
        } else {
          ASSERT_EQ(cert.set, nz);
        }
      }
    }
  }
}

TEST(MeetImage, MonomialExamples) {
  const auto c = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  const auto& r = *c.ring;
  const Elem x0x1 = r.mul(r.monomial_generator(0), r.monomial_generator(1));
  EXPECT_TRUE(ann_meet_image(*c.alpha, std::vector<Elem>{x0x1}, 2).is_zero());
  EXPECT_FALSE(ann_meet_image(*c.alpha, std::vector<Elem>{r.monomial_generator(0)}, 0).is_zero());
  // x0 w != 0 for every word w in x1, x2, and these products are distinct
  // words, so r(x0) already misses alpha(R).
  const EventualMeet e = ann_meet_eventual(*c.alpha, std::vector<Elem>{r.monomial_generator(0)});
  EXPECT_TRUE(e.meet.is_zero());
  EXPECT_EQ(e.index, 1u);
}

TEST(MeetImage, IdentityGivesAnnihilator) {
  const auto c = ctx(RingSpec::zmod(12));
  for (std::uint32_t n : {0u, 1u, 5u}) {
    EXPECT_EQ(ann_meet_image(*c.alpha, elems({4}), n), right_annihilator(*c.ring, elems({4})));
  }
}

// Property: the intersection shrinks as n grows and is constant from n* on.
TEST(MeetImage, MonotoneInN) {
  const auto c = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto fs = random_subset(rng, *c.ring, 3);
    for (std::uint32_t n = 0; n < 6; ++n) {
      ASSERT_TRUE(ann_meet_image(*c.alpha, fs, n + 1).subset_of(ann_meet_image(*c.alpha, fs, n)));
    }
    const EventualMeet e = ann_meet_eventual(*c.alpha, fs);
    ASSERT_EQ(ann_meet_image(*c.alpha, fs, e.index), e.meet);
    if (e.index > 0) ASSERT_NE(ann_meet_image(*c.alpha, fs, e.index - 1), e.meet);
  }
}

TEST(BoundedAnnihilator, UnityAndNilpotents) {
  const auto c = ctx(RingSpec::zmod(2));
  const std::vector<HPoly> one{HPoly::basis(c.ring, 1)};
  EXPECT_TRUE(hp_ann_bounded(*c.alpha, one, Side::Left, 5).trivial);
  // h_2 h_2 = 2 h_3 = 0 in characteristic 2.
  const std::vector<HPoly> h2{HPoly::basis(c.ring, 2)};
  const auto b = hp_ann_bounded(*c.alpha, h2, Side::Left, 4);
  EXPECT_FALSE(b.trivial);
  EXPECT_EQ(b.method, "nullspace");
  EXPECT_EQ(default_degree_bound(h2), 4u);
  EXPECT_THROW(hp_ann_bounded(*c.alpha, {}, Side::Left, 2), PreconditionFailed);
  EXPECT_THROW(hp_ann_bounded(*c.alpha, one, Side::Left, kMaxDegree + 1), CapExceeded);
}

// Nullspace solution counts against enumeration of every bounded polynomial.
TEST(BoundedAnnihilator, NullspaceMatchesEnumeration) {
  for (const RingSpec& s : {RingSpec::zmod(2), RingSpec::galois(2, 2).with_endo(EndoKind::Frobenius),
                            RingSpec::monomial(2, 2).with_endo(EndoKind::Shift)}) {
    const auto c = ctx(s);
    std::mt19937_64 rng(37);
    const Degree bound = c.ring->size() > 4 ? 1 : 3;
    std::uint64_t total = 1;
    for (Degree d = 0; d <= bound; ++d) total *= c.ring->size();
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<HPoly> fs{random_poly(rng, c.ring, 2)};
      if (fs[0].is_zero()) continue;
      for (Side side : {Side::Left, Side::Right}) {
        const auto b = hp_ann_bounded(*c.alpha, fs, side, bound);
        std::uint64_t count = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
          std::vector<std::pair<Degree, Elem>> t;
          std::uint64_t x = code;
          for (Degree d = 0; d <= bound; ++d, x /= c.ring->size()) t.emplace_back(d, Elem{static_cast<std::uint32_t>(x % c.ring->size())});
          const HPoly g = HPoly::make(c.ring, std::move(t));
          const HPoly p = side == Side::Left ? naive_mul(g, fs[0], *c.alpha) : naive_mul(fs[0], g, *c.alpha);
          count += p.is_zero();
        }
        ASSERT_EQ(b.solution_count, count) << c.ring->name();
        for (const HPoly& w : b.witnesses) {
          ASSERT_TRUE((side == Side::Left ? hp_mul(w, fs[0], *c.alpha) : hp_mul(fs[0], w, *c.alpha)).is_zero());
        }
      }
    }
  }
}

TEST(BoundedAnnihilator, EnumerationForNonAlgebras) {
  const auto c = ctx(RingSpec::zmod(4));
  const std::vector<HPoly> fs{HPoly::constant(c.ring, Elem{2})};
  const auto b = hp_ann_bounded(*c.alpha, fs, Side::Left, 2);
  EXPECT_EQ(b.method, "enumeration");
  EXPECT_EQ(b.solution_count, 8u);  // coefficients in {0, 2} at degrees 0..2
  EXPECT_THROW(hp_ann_bounded(*c.alpha, fs, Side::Left, 20), CapExceeded);
}

}  // namespace
