#include <gtest/gtest.h>

#include "hurwitz/error.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/primetest.hpp"
#include "support.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

std::vector<Elem> elems(std::initializer_list<std::uint32_t> xs) {
  std::vector<Elem> out;
  for (auto x : xs) out.push_back(Elem{x});
  return out;
}

const PrimeMode kPanel[] = {PrimeMode::Ideals, PrimeMode::OneSidedIdeals, PrimeMode::Principal};

TEST(Close, Examples) {
  const auto z6 = ctx(RingSpec::zmod(6));
  EXPECT_EQ(close(*z6.ring, nullptr, elems({2}), ClosureKind::LeftIdeal).set.elements().size(), 3u);
  EXPECT_EQ(close(*z6.ring, nullptr, elems({2}), ClosureKind::LeftIdeal).set,
            ElementSet::from_elements(elems({0, 2, 4})));

  // MonomialAlgebra(2,2): basis 1, x0, x1, x0x1 at indices 1, 2, 4, 8.
  const auto m = ctx(RingSpec::monomial(2, 2).with_endo(EndoKind::Shift));
  const auto ai = close(*m.ring, m.alpha.get(), elems({2}), ClosureKind::LeftAlphaIdeal).set;
  EXPECT_EQ(ai, additive_span(*m.ring, elems({2, 4, 8})));
  EXPECT_EQ(close(*m.ring, nullptr, elems({2}), ClosureKind::LeftIdeal).set, additive_span(*m.ring, elems({2})));
  EXPECT_EQ(close(*m.ring, nullptr, elems({2}), ClosureKind::RightIdeal).set, additive_span(*m.ring, elems({2, 8})));
  EXPECT_THROW(close(*m.ring, nullptr, elems({2}), ClosureKind::LeftAlphaIdeal), PreconditionFailed);
  EXPECT_THROW(close(*m.ring, nullptr, {}, ClosureKind::Ideal), PreconditionFailed);
}

TEST(Close, UnityGeneratesEverything) {
  for (const RingSpec& s : {RingSpec::zmod(6), RingSpec::matrix(2, 2), RingSpec::monomial(2, 3).with_endo(EndoKind::Shift)}) {
    const auto c = ctx(s);
    const std::vector<Elem> one{c.ring->one()};
    for (ClosureKind k : {ClosureKind::LeftIdeal, ClosureKind::RightIdeal, ClosureKind::Ideal, ClosureKind::LeftAlphaIdeal}) {
      EXPECT_EQ(close(*c.ring, c.alpha.get(), one, k).set.size(), c.ring->size());
    }
  }
}

// Property: closures are closed, contain their generators, and are idempotent.
TEST(Close, ClosedAndIdempotent) {
  const auto c = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  const auto& r = *c.ring;
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = random_subset(rng, r, 3);
    for (ClosureKind k : {ClosureKind::LeftIdeal, ClosureKind::RightIdeal, ClosureKind::Ideal, ClosureKind::LeftAlphaIdeal}) {
      const ElementSet s = close(r, c.alpha.get(), gens, k).set;
      for (Elem g : gens) ASSERT_TRUE(s.contains(g));
      for (Elem x : s.elements()) {
        for (Elem b : r.additive_generators()) {
          if (k != ClosureKind::RightIdeal) ASSERT_TRUE(s.contains(r.mul(b, x)));
          if (k == ClosureKind::RightIdeal || k == ClosureKind::Ideal) ASSERT_TRUE(s.contains(r.mul(x, b)));
        }
        if (k == ClosureKind::LeftAlphaIdeal) ASSERT_TRUE(s.contains(c.alpha->apply(x)));
      }
      const std::vector<Elem> again(s.elements().begin(), s.elements().end());
      ASSERT_EQ(close(r, c.alpha.get(), again, k).set, s);
    }
  }
}

TEST(StronglyPrime, ZMod6Witness) {
  const auto r = FiniteRing::create(RingSpec::zmod(6));
  const ModeVerdict v = strongly_prime_mode(*r, Side::Left, PrimeMode::Principal);
  EXPECT_FALSE(v.verdict);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->ideal, ElementSet::from_elements(elems({0, 2, 4})));
  EXPECT_EQ(v.witness->annihilator, Elem{3});
  EXPECT_TRUE(verify_failure(*r, Side::Left, *v.witness));
}

struct PanelCase {
  RingSpec spec;
  bool expected;
};

TEST(StronglyPrime, PanelAgreesOnBothSides) {
  const std::vector<PanelCase> cases{{RingSpec::zmod(4), false},       {RingSpec::zmod(6), false},
                                     {RingSpec::galois(2, 2), true},   {RingSpec::matrix(2, 2), true},
                                     {RingSpec::monomial(2, 2), false}, {RingSpec::zmod(7), true},
                                     {RingSpec::galois(2, 3), true}};
  for (const auto& pc : cases) {
    const auto r = FiniteRing::create(pc.spec);
    for (Side side : {Side::Left, Side::Right}) {
      const auto rep = strongly_prime(*r, side, kPanel);
      EXPECT_TRUE(rep.agreement) << r->name();
      EXPECT_EQ(rep.verdict, pc.expected) << r->name() << " " << side_name(side);
      for (const auto& m : rep.modes) {
        EXPECT_TRUE(m.exhaustive);
        if (m.witness) EXPECT_TRUE(verify_failure(*r, side, *m.witness));
      }
    }
  }
}

// Independent oracle: a ring is left strongly prime iff l(Ra) = 0 for every
// nonzero a, checked with plain element loops.
TEST(StronglyPrime, PrincipalModeMatchesOracle) {
  for (const RingSpec& s : {RingSpec::zmod(8), RingSpec::zmod(9), RingSpec::zmod(10), RingSpec::monomial(2, 3),
                            RingSpec::matrix(3, 2)}) {
    const auto r = FiniteRing::create(s);
    bool oracle = true;
    for (std::uint32_t a = 1; a < r->size() && oracle; ++a) {
      std::vector<Elem> ra;
      for (std::uint32_t x = 0; x < r->size(); ++x) ra.push_back(r->mul(Elem{x}, Elem{a}));
      oracle = brute_annihilator(*r, ra, true).size() == 1;
    }
    EXPECT_EQ(strongly_prime_mode(*r, Side::Left, PrimeMode::Principal).verdict, oracle) << r->name();
  }
}

TEST(StronglyPrime, LargeRingUsesGeneratorBound) {
  const auto r = FiniteRing::create(RingSpec::zmod(18));
  const ModeVerdict v = strongly_prime_mode(*r, Side::Left, PrimeMode::Ideals, 1);
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.generator_bound, 1u);
  EXPECT_FALSE(v.verdict);
}

TEST(AlphaPrime, IdentityMatchesLeftStrongPrimeness) {
  for (const RingSpec& s : {RingSpec::zmod(4), RingSpec::zmod(6), RingSpec::galois(2, 2), RingSpec::matrix(2, 2),
                            RingSpec::monomial(2, 2)}) {
    const auto c = ctx(s);
    EXPECT_EQ(alpha_strongly_prime(*c.alpha).verdict,
              strongly_prime_mode(*c.ring, Side::Left, PrimeMode::Principal).verdict)
        << c.ring->name();
  }
}

TEST(AlphaPrime, FrobeniusFields) {
  for (const RingSpec& s : {RingSpec::galois(2, 2), RingSpec::galois(2, 3), RingSpec::galois(3, 2)}) {
    const auto c = ctx(s.with_endo(EndoKind::Frobenius));
    const auto full = alpha_strongly_prime(*c.alpha);
    EXPECT_TRUE(full.verdict);
    EXPECT_EQ(alpha_strongly_prime(*c.alpha, true).verdict, full.verdict);
    EXPECT_TRUE(full.monomorphism_consistent);
  }
}

TEST(AlphaPrime, ShiftTruncationWitness) {
  for (std::uint32_t g : {2u, 3u}) {
    const auto c = ctx(RingSpec::monomial(g, 2).with_endo(EndoKind::Shift));
    const auto rep = alpha_strongly_prime(*c.alpha);
    EXPECT_FALSE(rep.verdict);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->generator, c.ring->monomial_generator(0));
    EXPECT_EQ(rep.witness->annihilator, c.ring->monomial_generator(g - 1));
    EXPECT_EQ(rep.witness->ideal.size(), c.ring->size() / 2);
    EXPECT_EQ(rep.witness->orbit_indices.size(), rep.witness->orbit_length);
    EXPECT_TRUE(verify_witness(*c.alpha, *rep.witness));
    EXPECT_FALSE(rep.notes.empty());
  }
}

// The principal reduction agrees with enumeration of every left alpha-ideal.
TEST(AlphaPrime, PrincipalReductionMatchesExhaustive) {
  for (const RingSpec& s : {RingSpec::monomial(2, 2).with_endo(EndoKind::Shift), RingSpec::galois(2, 2).with_endo(EndoKind::Frobenius),
                            RingSpec::zmod(4), RingSpec::zmod(6), RingSpec::matrix(2, 2), RingSpec::zmod(15),
                            RingSpec::galois(2, 4).with_endo(EndoKind::Frobenius)}) {
    const auto c = ctx(s);
    EXPECT_EQ(alpha_strongly_prime(*c.alpha).verdict, alpha_strongly_prime_exhaustive(*c.alpha)) << c.ring->name();
  }
}

// A non-injective explicit endomorphism on Z/2 x Z/2: (a,b) -> (a,a).
TEST(AlphaPrime, TrueVerdictForcesInjectivity) {
  std::vector<std::uint32_t> add(16), mul(16);
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) {
      add[x * 4 + y] = x ^ y;
      mul[x * 4 + y] = x & y;
    }
  const auto c = ctx(RingSpec::table(add, mul, 3).with_endo(EndoKind::Explicit, {0, 3, 0, 3}));
  EXPECT_FALSE(c.alpha->is_monomorphism());
  const auto rep = alpha_strongly_prime(*c.alpha);
  EXPECT_FALSE(rep.verdict);
  EXPECT_TRUE(rep.monomorphism_consistent);
}

TEST(Lift, Examples) {
  const auto gf = ctx(RingSpec::galois(2, 2).with_endo(EndoKind::Frobenius));
  const auto l = thm13_lift(*gf.alpha, elems({1}), 0, 4);
  EXPECT_EQ(l.lifted, std::vector<HPoly>{HPoly::basis(gf.ring, 1)});
  EXPECT_TRUE(l.insulated);

  const auto mx = ctx(RingSpec::matrix(2, 2));
  // E11 and E21 at coordinates 0 and 2.
  EXPECT_TRUE(thm13_lift(*mx.alpha, elems({1, 4}), 0, 4).insulated);
  // In characteristic 2, (g f)(2) = C(2,1) g(1) f(1) = 0, so any g at degree 1 kills a lift at u = 1.
  EXPECT_FALSE(thm13_lift(*mx.alpha, elems({1, 4}), 1, 4).insulated);
  // At u = 2 the zero-filled lift is killed by E at degrees 2 and 3: C(4,2) and C(5,2) are even.
  const auto u2 = thm13_lift(*mx.alpha, elems({1, 4}), 2, 4);
  EXPECT_FALSE(u2.insulated);
  for (const HPoly& w : u2.check.witnesses) {
    for (const HPoly& f : u2.lifted) EXPECT_TRUE(hp_mul(w, f, *mx.alpha).is_zero());
  }
  for (const HPoly& f : u2.lifted) EXPECT_EQ(hp_stats(f).delta, 2u);

  const auto mono = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  EXPECT_THROW(thm13_lift(*mono.alpha, std::vector<Elem>{mono.ring->monomial_generator(0)}, 0, 2), PreconditionFailed);
}

TEST(Extract, Examples) {
  const auto gf = ctx(RingSpec::galois(2, 2).with_endo(EndoKind::Frobenius));
  const auto e1 = thm13_extract(*gf.alpha, std::vector<HPoly>{HPoly::basis(gf.ring, 1)});
  EXPECT_TRUE(e1.verdict);
  EXPECT_EQ(e1.coefficients, ElementSet::from_elements(elems({1})));

  const auto z6 = ctx(RingSpec::zmod(6));
  const auto e2 = thm13_extract(*z6.alpha, std::vector<HPoly>{HPoly::constant(z6.ring, Elem{2})});
  EXPECT_FALSE(e2.verdict);
  ASSERT_EQ(e2.orbit.size(), 1u);
  EXPECT_EQ(e2.orbit[0].witness, Elem{3});

  const auto mx = ctx(RingSpec::matrix(2, 2));
  const HPoly f = HPoly::make(mx.ring, {{0, Elem{1}}, {1, Elem{4}}});
  const auto e3 = thm13_extract(*mx.alpha, std::vector<HPoly>{f});
  EXPECT_TRUE(e3.verdict);
  EXPECT_EQ(e3.coefficients, ElementSet::from_elements(elems({1, 4})));
  EXPECT_THROW(thm13_extract(*mx.alpha, {}), PreconditionFailed);
}

// Property: lift then extract recovers the source set and the orbit condition.
// h_{s+1} times a at degree u is C(u+s, s) alpha^s(a) at degree u+s, so the
// shifted coefficient set is that binomial times alpha^s(F).
TEST(Extract, InvertsLift) {
  for (const RingSpec& spec : {RingSpec::galois(2, 3).with_endo(EndoKind::Frobenius),
                               RingSpec::galois(3, 2).with_endo(EndoKind::Frobenius)}) {
    const auto c = ctx(spec);
    const std::uint64_t p = c.ring->characteristic();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
      auto fs = random_subset(rng, *c.ring, 3);
      if (fs == std::vector<Elem>{Elem{0}}) continue;
      const Degree u = static_cast<Degree>(rng() % 3);
      const auto l = thm13_lift(*c.alpha, fs, u, 2 * u + 2);
      const auto e = thm13_extract(*c.alpha, l.lifted, 2);
      EXPECT_EQ(e.coefficients.nonzero(), ElementSet::from_elements(fs).nonzero());
      EXPECT_TRUE(e.verdict);
      for (const auto& s : e.shifts) {
        const std::uint64_t b = exact_binomial(u + s.shift, s.shift) % p;
        std::vector<Elem> expect, plain, got;
        for (Elem a : fs) {
          expect.push_back(repeat_add(*c.ring, b, c.alpha->apply(a, s.shift)));
          plain.push_back(c.alpha->apply(a, s.shift));
        }
        for (const HPoly& f : s.family) got.push_back(f.terms().back().coeff);
        const auto expected = ElementSet::from_elements(expect).nonzero();
        EXPECT_EQ(ElementSet::from_elements(got).nonzero(), expected) << s.reading;
        EXPECT_EQ(s.coefficients_match, expected == ElementSet::from_elements(plain).nonzero());
        EXPECT_EQ(s.family.empty(), b == 0);
      }
    }
  }
}

TEST(Thm14, Examples) {
  const auto z4 = ctx(RingSpec::zmod(4));
  const auto one = thm14_condition_b(*z4.alpha, Elem{1}, 0);
  ASSERT_TRUE(one.holds);
  EXPECT_EQ(one.certificate->k, 0u);
  EXPECT_EQ(one.certificate->set, elems({1}));
  EXPECT_EQ(one.certificate->n, 0u);
  EXPECT_TRUE(verify_certificate(*z4.alpha, *one.certificate));

  const auto two = thm14_condition_b(*z4.alpha, Elem{2}, 0);
  EXPECT_FALSE(two.holds);
  ASSERT_TRUE(two.failure);
  EXPECT_EQ(two.failure->sum_limit, ElementSet::from_elements(elems({0, 2})));
  EXPECT_EQ(two.failure->witness, Elem{2});
  EXPECT_THROW(thm14_condition_b(*z4.alpha, Elem{0}, 0), PreconditionFailed);

  const auto mono = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  const auto x0 = thm14_condition_b(*mono.alpha, mono.ring->monomial_generator(0), 0);
  ASSERT_TRUE(x0.holds);
  EXPECT_EQ(x0.certificate->set, std::vector<Elem>{mono.ring->monomial_generator(0)});
  EXPECT_EQ(x0.certificate->k, 0u);
  EXPECT_EQ(x0.certificate->n, 1u);
  EXPECT_EQ(x0.certificate->u, 1u);
}

TEST(Thm14, MonomialAllElementsAllLevels) {
  const auto c = ctx(RingSpec::monomial(3, 2).with_endo(EndoKind::Shift));
  for (std::uint32_t a = 1; a < c.ring->size(); ++a) {
    for (std::uint32_t m = 0; m <= 2; ++m) {
      const auto res = thm14_condition_b(*c.alpha, Elem{a}, m);
      ASSERT_TRUE(res.holds) << a << " " << m;
      ASSERT_TRUE(verify_certificate(*c.alpha, *res.certificate));
      const auto ext = thm14_condition_b(*c.alpha, Elem{a}, m, 2);
      ASSERT_EQ(ext.holds, res.holds);
    }
  }
}

// Oracle: for alpha = id the condition reads r(aR) = 0.
TEST(Thm14, IdentityMatchesRightAnnihilatorOfPrincipalIdeal) {
  for (const RingSpec& s : {RingSpec::zmod(12), RingSpec::matrix(2, 2), RingSpec::monomial(2, 3)}) {
    const auto c = ctx(s);
    for (std::uint32_t a = 1; a < c.ring->size(); ++a) {
      std::vector<Elem> ar;
      for (std::uint32_t x = 0; x < c.ring->size(); ++x) ar.push_back(c.ring->mul(Elem{a}, Elem{x}));
      const bool oracle = brute_annihilator(*c.ring, ar, false).size() == 1;
      ASSERT_EQ(thm14_condition_b(*c.alpha, Elem{a}, 0).holds, oracle) << c.ring->name() << " a=" << a;
    }
  }
}

TEST(Example, BothSides) {
  for (std::uint32_t g : {2u, 3u}) {
    const ExampleReport e = example_verify(g, 2);
    EXPECT_FALSE(e.left.verdict);
    EXPECT_TRUE(e.left_matches);
    EXPECT_EQ(e.right_checked, (1u << (1u << g)) - 1);
    EXPECT_EQ(e.right_passed, e.right_checked);
    EXPECT_TRUE(e.right_matches);
    EXPECT_FALSE(e.alpha_injective);
    EXPECT_NE(e.caveat.find("truncated"), std::string::npos);
  }
  EXPECT_THROW(example_verify(1, 2), PreconditionFailed);
}

TEST(Example, GeneratorDepth) {
  const auto r = FiniteRing::create(RingSpec::monomial(3, 2));
  EXPECT_EQ(generator_depth(*r, r->one()), 0u);
  EXPECT_EQ(generator_depth(*r, r->monomial_generator(1)), 2u);
  EXPECT_EQ(generator_depth(*r, r->add(r->one(), Elem{32})), 3u);  // 1 + x0x2
  EXPECT_THROW(generator_depth(*FiniteRing::create(RingSpec::zmod(3)), Elem{1}), InvalidArgument);
}

}  // namespace
