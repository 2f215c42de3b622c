#include <gtest/gtest.h>

#include "hurwitz/kernels.hpp"
#include "support.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

class Kernels : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { kernels::set_threads(GetParam()); }
  void TearDown() override { kernels::set_threads(0); }
};

TEST_P(Kernels, AnnihilatorScan) {
  const auto r = FiniteRing::create(RingSpec::monomial(3, 2));
  const auto all = all_elements(*r);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto fs = random_subset(rng, *r, 3);
    for (Side side : {Side::Left, Side::Right}) {
      const auto s = kernels::serial::annihilator_scan(*r, all, fs, side);
      ASSERT_EQ(kernels::parallel::annihilator_scan(*r, all, fs, side), s);
      ASSERT_EQ(s, brute_annihilator(*r, fs, side == Side::Left));
    }
  }
}

TEST_P(Kernels, LawViolations) {
  for (const RingSpec& spec : {RingSpec::zmod(6), RingSpec::matrix(2, 2)}) {
    const auto r = FiniteRing::create(spec);
    const auto s = kernels::serial::ring_law_violations(*r);
    const auto p = kernels::parallel::ring_law_violations(*r);
    EXPECT_EQ(s.total(), 0u);
    EXPECT_EQ(p.total(), 0u);
  }
  const auto c = ctx(RingSpec::monomial(2, 2).with_endo(EndoKind::Shift));
  EXPECT_EQ(kernels::serial::endo_law_violations(*c.alpha), kernels::parallel::endo_law_violations(*c.alpha));
}

TEST_P(Kernels, ClosedMasks) {
  for (const RingSpec& spec : {RingSpec::zmod(12), RingSpec::matrix(2, 2),
                               RingSpec::monomial(2, 2).with_endo(EndoKind::Shift)}) {
    const auto c = ctx(spec);
    for (bool left : {false, true}) {
      for (bool right : {false, true}) {
        ASSERT_EQ(kernels::serial::closed_masks(*c.ring, left, right, nullptr),
                  kernels::parallel::closed_masks(*c.ring, left, right, nullptr));
      }
    }
    ASSERT_EQ(kernels::serial::closed_masks(*c.ring, true, false, c.alpha.get()),
              kernels::parallel::closed_masks(*c.ring, true, false, c.alpha.get()));
  }
  // Z/12 has one additive subgroup per divisor of 12.
  EXPECT_EQ(kernels::parallel::closed_masks(*FiniteRing::create(RingSpec::zmod(12)), false, false, nullptr).size(), 6u);
  // M_2(F_2): five left ideals ({0}, R and three of size 4).
  EXPECT_EQ(kernels::parallel::closed_masks(*FiniteRing::create(RingSpec::matrix(2, 2)), true, false, nullptr).size(), 5u);
}

TEST_P(Kernels, FirstMatchIsSmallestIndex) {
  for (std::size_t n : {0u, 1u, 7u, 1000u}) {
    for (std::size_t target : {0u, 3u, 500u, 999u}) {
      auto pred = [&](std::size_t i) { return i >= target && i % 7 == target % 7; };
      ASSERT_EQ(kernels::parallel::first_match(n, pred), kernels::serial::first_match(n, pred));
      ASSERT_EQ(kernels::parallel::select(n, pred), kernels::serial::select(n, pred));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, Kernels, ::testing::Values(1, 4));

}  // namespace
