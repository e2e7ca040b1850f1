#include <gtest/gtest.h>

#include "support.hpp"

using namespace mrrr;
using testing_support::diagonal_rep;
using testing_support::eps;

TEST(Dstqds, DiagonalShift) {
  const auto f = dstqds(diagonal_rep({1, 2, 3}), 0.5);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->dplus, (std::vector<double>{0.5, 1.5, 2.5}));
  EXPECT_EQ(f->lplus, (std::vector<double>{0, 0}));
  EXPECT_EQ(f->s, (std::vector<double>{-0.5, -0.5, -0.5}));
}

TEST(Dstqds, ZeroShiftIsExact) {
  std::mt19937_64 rng(3);
  const auto rep = testing_support::random_definite_rep(rng, 12);
  const auto f = dstqds(rep, 0.0);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->dplus, rep.d);
  // l+ = (d l) / d+ carries the rounding of the cached product
  for (std::size_t i = 0; i < rep.l.size(); ++i) EXPECT_NEAR(f->lplus[i], rep.l[i], 2 * eps * std::abs(rep.l[i]));
}

TEST(Dstqds, InfinityPropagatesWithoutNan) {
  const auto f = dstqds(Representation<double>({1, 1}, {1}), 1.0);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->s[0], -1.0);
  EXPECT_EQ(f->dplus[0], 0.0);
  EXPECT_EQ(f->lplus[0], INFINITY);
  EXPECT_EQ(f->s[1], -INFINITY);
  EXPECT_EQ(f->dplus[1], -INFINITY);
  // not finite, so it cannot become a tree node
  EXPECT_FALSE(shift_representation(Representation<double>({1, 1}, {1}), 1.0));
}

TEST(Dqds, DiagonalShift) {
  const auto f = dqds(diagonal_rep({1, 2, 3}), 0.5);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->omega_minus, (std::vector<double>{0.5, 1.5, 2.5}));
  EXPECT_EQ(f->uminus, (std::vector<double>{0, 0}));
  EXPECT_EQ(f->p, (std::vector<double>{0.5, 1.5, 2.5}));
}

TEST(Dqds, ZeroShiftDiagonalReturnsPivots) {
  const auto f = dqds(diagonal_rep({4, -1, 7}), 0.0);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->omega_minus, (std::vector<double>{4, -1, 7}));
}

TEST(Dqds, TwoByTwoTrace) {
  const auto f = dqds(diagonal_rep({1, 3}), 1.0);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->p, (std::vector<double>{0, 2}));
  EXPECT_EQ(f->omega_minus, (std::vector<double>{0, 2}));
  EXPECT_EQ(f->uminus, (std::vector<double>{0}));
}

TEST(Gammas, TwoByTwoTrace) {
  const auto td = compute_gammas(diagonal_rep({1, 3}), 1.0);
  ASSERT_TRUE(td);
  EXPECT_EQ(td->gamma, (std::vector<double>{0, 2}));
  EXPECT_EQ(td->r, 0u);
}

TEST(Gammas, FarBelowDiagonalSpectrum) {
  const auto td = compute_gammas(diagonal_rep({3, 1.5, 2, 4}), -10.0);
  ASSERT_TRUE(td);
  EXPECT_EQ(td->gamma, (std::vector<double>{13, 11.5, 12, 14}));
  EXPECT_EQ(td->r, 1u);
}

TEST(Gammas, OneTwoOneSmallestEigenvalue) {
  const Representation<double> rep({2, 1.5, 4.0 / 3}, {0.5, 2.0 / 3});
  const auto td = compute_gammas(rep, 2 - std::sqrt(2.0));
  ASSERT_TRUE(td);
  EXPECT_LE(std::abs(td->gamma[td->r]), 10 * 3 * eps * 4);
}

TEST(Gammas, MatchTwistedFactorizationPivots) {
  // gamma_k is the k-th pivot of N_k Delta_k N_k*; equivalently
  // gamma_k = s_k + p_k + lambda, and gamma_{n} = d+_{n}.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> shift(-0.3, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rep = testing_support::random_definite_rep(rng, 2 + trial % 15);
    const double lambda = shift(rng);
    const auto td = compute_gammas(rep, lambda);
    ASSERT_TRUE(td);
    const std::size_t n = rep.size();
    EXPECT_NEAR(td->gamma[n - 1], td->dplus[n - 1], 1e-9 * (1 + std::abs(td->dplus[n - 1])));
    for (std::size_t k = 0; k < n; ++k) {
      const double alt = td->s[k] + td->p[k] + lambda;
      const double scale = std::abs(td->s[k]) + std::abs(td->p[k]) + std::abs(lambda) + 1;
      if (std::abs(td->gamma[k]) < 1e6) {
        EXPECT_NEAR(td->gamma[k], alt, 1e-9 * scale) << k;
      }
    }
  }
}

TEST(ShiftRepresentation, ZeroShiftIncrementsDepth) {
  std::mt19937_64 rng(8);
  const auto rep = testing_support::random_definite_rep(rng, 6);
  const auto s = shift_representation(rep, 0.0);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->d, rep.d);
  for (std::size_t i = 0; i < rep.l.size(); ++i) EXPECT_NEAR(s->l[i], rep.l[i], 2 * eps * std::abs(rep.l[i]));
  EXPECT_EQ(s->depth, rep.depth + 1);
}

TEST(ShiftRepresentation, DiagonalAndComposition) {
  const auto rep = diagonal_rep({1, 2, 3});
  const auto s = shift_representation(rep, 0.5);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->d, (std::vector<double>{0.5, 1.5, 2.5}));
  EXPECT_EQ(s->shift, 0.5);
  const auto twice = shift_representation(*shift_representation(rep, 0.25), 0.5);
  const auto once = shift_representation(rep, 0.75);
  EXPECT_EQ(twice->d, once->d);
  EXPECT_EQ(twice->shift, once->shift);
}

TEST(ShiftRepresentation, RejectsNonFiniteInput) {
  EXPECT_THROW(Representation<double>({1, NAN}, {0}), std::invalid_argument);
  EXPECT_THROW(Representation<double>({1, 2}, {}), std::invalid_argument);
}

TEST(TwistIndex, SkipsNanAndBreaksTiesLow) {
  const std::vector<double> g = {NAN, -2, 1, 2, -1};
  EXPECT_EQ(*detail::twist_index<double>(g), 2u);
  const std::vector<double> all_nan = {NAN, NAN};
  EXPECT_FALSE(detail::twist_index<double>(all_nan));
}
