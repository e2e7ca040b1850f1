#include <gtest/gtest.h>

#include "support.hpp"

using namespace mrrr;
using testing_support::eps;

TEST(Generate, Clement4) {
  const auto t = generate(MatrixKind::clement, 4);
  EXPECT_EQ(std::vector<double>(t.alpha().begin(), t.alpha().end()), (std::vector<double>{0, 0, 0, 0}));
  EXPECT_EQ(std::vector<double>(t.beta().begin(), t.beta().end()),
            (std::vector<double>{std::sqrt(3.0), 2, std::sqrt(3.0)}));
  const auto o = oracle_eig(t);
  const std::vector<double> expect = {-3, -1, 1, 3};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(o.values[k], expect[k], 50 * 4 * eps * 5);
}

TEST(Generate, OneTwoOne3) {
  const auto t = generate(MatrixKind::one21, 3);
  EXPECT_EQ(t, Tridiagonal<double>({2, 2, 2}, {1, 1}));
  const auto o = oracle_eig(t);
  EXPECT_NEAR(o.values[0], 2 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(o.values[1], 2, 1e-14);
  EXPECT_NEAR(o.values[2], 2 + std::sqrt(2.0), 1e-14);
}

TEST(Generate, Wilkinson5) {
  EXPECT_EQ(generate(MatrixKind::wilkinson, 5), Tridiagonal<double>({2, 1, 0, 1, 2}, {1, 1, 1, 1}));
  EXPECT_THROW(generate(MatrixKind::wilkinson, 4), std::invalid_argument);
  try {
    generate(MatrixKind::wilkinson, 4);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "n must be odd");
  }
}

TEST(Generate, Hermite4) {
  EXPECT_EQ(generate(MatrixKind::hermite, 4),
            Tridiagonal<double>({0, 0, 0, 0}, {1, std::sqrt(2.0), std::sqrt(3.0)}));
}

TEST(Generate, LegendreAndLaguerreIndexing) {
  const auto leg = generate(MatrixKind::legendre, 3);
  EXPECT_DOUBLE_EQ(leg.beta()[0], 2 / std::sqrt(3.0 * 5.0));
  EXPECT_DOUBLE_EQ(leg.beta()[1], 3 / std::sqrt(5.0 * 7.0));
  EXPECT_EQ(generate(MatrixKind::laguerre, 3), Tridiagonal<double>({3, 5, 7}, {2, 3}));
}

TEST(Generate, DiagonalSpectra) {
  const auto u = generate(MatrixKind::uniform, 5);
  EXPECT_EQ(u.alpha()[0], eps);
  EXPECT_EQ(u.alpha()[4], 1.0);
  for (double b : u.beta()) EXPECT_EQ(b, 0.0);
  const auto g = generate(MatrixKind::geometric, 5);
  EXPECT_EQ(g.alpha()[0], eps);
  EXPECT_EQ(g.alpha()[4], 1.0);
  EXPECT_NEAR(g.alpha()[2], std::sqrt(eps), 1e-20);
}

TEST(Generate, SizeOneAndNames) {
  for (MatrixKind k : all_kinds) {
    EXPECT_EQ(generate(k, 1).size(), 1u);
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  }
  EXPECT_FALSE(parse_kind("dense"));
  EXPECT_THROW(generate(MatrixKind::one21, 0), std::invalid_argument);
}

TEST(Generate, ClementSpectrumSymmetric) {
  for (std::size_t n : {8, 9, 30}) {
    const auto t = generate(MatrixKind::clement, n);
    const auto o = oracle_eig(t);
    const double tol = static_cast<double>(n) * eps * one_norm(t);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(o.values[k], -o.values[n - 1 - k], tol);
  }
}

TEST(Generate, WilkinsonTopPair) {
  const auto o = oracle_eig(generate(MatrixKind::wilkinson, 21));
  EXPECT_LT(o.values[20] - o.values[19], 1e-10);
}
