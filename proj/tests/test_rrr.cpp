#include <gtest/gtest.h>

#include "support.hpp"

using namespace mrrr;
using testing_support::diagonal_rep;
using testing_support::eps;

namespace {

std::vector<Interval<double>> narrow(std::initializer_list<double> mids, double half = 5e-10) {
  std::vector<Interval<double>> out;
  for (double m : mids) out.push_back({m - half, m + half});
  return out;
}

}  // namespace

TEST(MakeRoot, DiagonalBlockIsShiftedDiagonal) {
  const Tridiagonal<double> t({3, 1, 2}, {0, 0});
  SolverConfig cfg;
  cfg.perturb_magnitude = 0;
  std::mt19937_64 rng(1);
  const auto root = make_root(t, cfg, rng);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(root.rep.d[i], t.alpha()[i] - root.mu);
  const bool pos = root.rep.d[0] > 0;
  for (double d : root.rep.d) EXPECT_EQ(d > 0, pos);
}

TEST(MakeRoot, OneTwoOneIsDefinite) {
  std::mt19937_64 rng(2);
  const auto root = make_root(generate(MatrixKind::one21, 3), SolverConfig{}, rng);
  const bool pos = root.rep.d[0] > 0;
  for (double d : root.rep.d) EXPECT_EQ(d > 0, pos);
  EXPECT_EQ(negcount_ldl(root.rep, 0.0), pos ? 0u : 3u);
  EXPECT_LE(growth_test(root.rep, root.spdiam), 2.0);
}

TEST(MakeRoot, SameSeedIsBitwiseIdentical) {
  const auto t = generate(MatrixKind::clement, 30);
  std::mt19937_64 a(99), b(99), c(100);
  const auto ra = make_root(t, SolverConfig{}, a);
  const auto rb = make_root(t, SolverConfig{}, b);
  const auto rc = make_root(t, SolverConfig{}, c);
  EXPECT_EQ(ra.rep.d, rb.rep.d);
  EXPECT_EQ(ra.rep.l, rb.rep.l);
  EXPECT_EQ(ra.mu, rb.mu);
  EXPECT_NE(ra.rep.d, rc.rep.d);
}

TEST(MakeRoot, PerturbationIsRelativeAndBounded) {
  const auto t = generate(MatrixKind::hermite, 50);
  SolverConfig clean;
  clean.perturb_magnitude = 0;
  std::mt19937_64 a(5), b(5);
  const auto r0 = make_root(t, clean, a);
  const auto r1 = make_root(t, SolverConfig{}, b);
  const double xi = SolverConfig{}.perturb_magnitude;
  for (std::size_t i = 0; i < t.size(); ++i)
    EXPECT_LE(std::abs(r1.rep.d[i] - r0.rep.d[i]), xi * std::abs(r0.rep.d[i]) * (1 + 4 * eps));
}

TEST(Classify, ClusterThenSingleton) {
  const auto iv = narrow({1.0, 1.0005, 2.0});
  const auto part = classify<double>(iv, 1e-3);
  ASSERT_EQ(part.groups.size(), 2u);
  EXPECT_EQ(part.groups[0].first, 0u);
  EXPECT_EQ(part.groups[0].last, 1u);
  EXPECT_EQ(part.groups[0].kind, GroupKind::cluster);
  EXPECT_EQ(part.groups[1].first, 2u);
  EXPECT_EQ(part.groups[1].kind, GroupKind::singleton);
  EXPECT_EQ(part.largest(), 2u);
}

TEST(Classify, WellSeparatedAreSingletons) {
  const auto part = classify<double>(narrow({1, 2, 3, 4, 5}), 1e-3);
  EXPECT_EQ(part.groups.size(), 5u);
  for (const auto& g : part.groups) EXPECT_EQ(g.kind, GroupKind::singleton);
}

TEST(Classify, SingleAndEmpty) {
  const auto one = classify<double>(narrow({7}), 1e-3);
  ASSERT_EQ(one.groups.size(), 1u);
  EXPECT_EQ(one.groups[0].kind, GroupKind::singleton);
  EXPECT_TRUE(classify<double>(std::vector<Interval<double>>{}, 1e-3).groups.empty());
}

TEST(GrowthTest, Examples) {
  EXPECT_LE(growth_test(diagonal_rep({0.5, -1, 0.25}), 1.0), 1.0);
  EXPECT_EQ(growth_test(diagonal_rep({1, 20, 3}), 2.0), 10.0);
}

TEST(SelectShift, DiagonalClusterCertifiedFirstTry) {
  const double v = 3.0;
  const auto rep = diagonal_rep({1, v, v, 7});
  const auto iv = narrow({1, v, v, 7}, 1e-12);
  const auto out = select_shift<double>(rep, 1, 2, iv, 1, 6.0, SolverConfig{}, 64.0);
  EXPECT_TRUE(out.certified);
  EXPECT_NEAR(out.tau, v * (1 - 100 * eps), 8 * v * eps);
  EXPECT_LE(out.element_growth, 1.0);
  EXPECT_EQ(negcount_ldl(out.rep, 0.0), 1u);
}

TEST(SelectShift, RefinedEndsBracketCluster) {
  const auto rep = diagonal_rep({1, 2, 2.0001, 5});
  const auto iv = narrow({1, 2, 2.0001, 5}, 1e-6);
  const auto out = select_shift<double>(rep, 1, 2, iv, 1, 4.0, SolverConfig{}, 64.0);
  EXPECT_LE(out.first_refined.lo, 2.0);
  EXPECT_GE(out.first_refined.hi, 2.0);
  EXPECT_LE(out.last_refined.lo, 2.0001);
  EXPECT_GE(out.last_refined.hi, 2.0001);
  EXPECT_LE(out.first_refined.width(), 8 * eps * 2.0);
}

TEST(SelectShift, Deterministic) {
  const auto t = generate(MatrixKind::wilkinson, 21);
  std::mt19937_64 rng(3);
  const auto root = make_root(t, SolverConfig{}, rng);
  auto counter = [&](double x) { return negcount_ldl(root.rep, x); };
  std::vector<Interval<double>> iv;
  for (std::size_t k = 20; k <= 21; ++k)
    iv.push_back(bisect<double>(counter, k, {-100, 100}, 1e-5, bisection_atol<double>()));
  const auto a = select_shift<double>(root.rep, 0, 1, iv, 20, root.spdiam, SolverConfig{}, 10.0);
  const auto b = select_shift<double>(root.rep, 0, 1, iv, 20, root.spdiam, SolverConfig{}, 10.0);
  EXPECT_EQ(a.tau, b.tau);
  EXPECT_EQ(a.rep.d, b.rep.d);
  EXPECT_EQ(a.certified, b.certified);
}

TEST(Wilkinson, TopPairIsCloseAndForcesAShift) {
  const auto t = generate(MatrixKind::wilkinson, 21);
  const auto o = oracle_eig(t);
  EXPECT_LT(o.values[20] - o.values[19], 1e-10);
  const auto es = solve(t, Selection::all(), make_config(PrecisionProfile::standard64, 21));
  EXPECT_GE(es.stats.d_max, 1u);
  EXPECT_GE(es.stats.shift_count, 1u);
}

TEST(Profile, MixedGaptolLowerBound) {
  const auto p = mixed32in64(10000);
  // 2^-53 * 100 / 2^-24
  EXPECT_DOUBLE_EQ(gaptol_lower_bound(p, 10000), 100 * std::ldexp(1.0, -29));
  EXPECT_LT(gaptol_lower_bound(p, 10000), p.gaptol);
  EXPECT_TRUE(profile_accepts(p, 10000));
  EXPECT_THROW(mixed32in64(std::size_t{1} << 40), std::domain_error);
}

TEST(Profile, ConvertOutRenormalizes) {
  const std::vector<double> v = {0.6, 0.8};
  const auto f = convert_out<float, double>(v);
  double s = 0;
  for (float x : f) s += static_cast<double>(x) * x;
  EXPECT_NEAR(std::sqrt(s), 1.0, eps_single);
  const std::vector<double> far = {0.6 * (1 + 1e-3), 0.8 * (1 + 1e-3)};
  const auto g = convert_out<float, double>(far);
  s = 0;
  for (float x : g) s += static_cast<double>(x) * x;
  EXPECT_NEAR(std::sqrt(s), 1.0, 2 * eps_single);
}

TEST(Profile, MixedConfigValues) {
  const auto cfg = make_config(PrecisionProfile::mixed32in64, 1000);
  EXPECT_EQ(cfg.gaptol, 1e-5);
  EXPECT_EQ(cfg.rqi_mode, RqiMode::relaxed);
  EXPECT_TRUE(cfg.depth_first);
  EXPECT_DOUBLE_EQ(cfg.tol1(1000), eps_single * std::sqrt(1000.0));
  const auto std_cfg = make_config(PrecisionProfile::standard64, 1000);
  EXPECT_DOUBLE_EQ(std_cfg.tol1(1000), eps_double * 1000);
  EXPECT_EQ(std_cfg.growth_threshold, 10.0);
}
