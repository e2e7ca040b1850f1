#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mrrr/mrrr.hpp"

namespace testing_support {

inline constexpr double eps = mrrr::eps_double;

// Closed-form spectrum of the 1-2-1 matrix.
inline double one21_eigenvalue(std::size_t k, std::size_t n) {
  return 2 - 2 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1));
}

inline mrrr::Tridiagonal<double> random_tridiagonal(std::mt19937_64& rng, std::size_t n,
                                                    double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> a(n), b(n - 1);
  for (auto& x : a) x = u(rng);
  for (auto& x : b) x = u(rng);
  return mrrr::Tridiagonal<double>(std::move(a), std::move(b));
}

inline mrrr::Representation<double> diagonal_rep(std::vector<double> d) {
  std::vector<double> l(d.size() - 1, 0.0);
  return mrrr::Representation<double>(std::move(d), std::move(l));
}

// Positive definite LDL* with pivots in [0.5, 2] and multipliers in [-1, 1].
inline mrrr::Representation<double> random_definite_rep(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> pd(0.5, 2.0), pl(-1.0, 1.0);
  std::vector<double> d(n), l(n - 1);
  for (auto& x : d) x = pd(rng);
  for (auto& x : l) x = pl(rng);
  return mrrr::Representation<double>(std::move(d), std::move(l));
}

inline std::size_t count_below(const std::vector<double>& sorted, double sigma) {
  std::size_t c = 0;
  for (double v : sorted) c += v < sigma ? 1 : 0;
  return c;
}

}  // namespace testing_support
