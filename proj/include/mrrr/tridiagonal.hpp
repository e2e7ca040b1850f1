#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mrrr/config.hpp"

namespace mrrr {

template <std::floating_point Real>
constexpr Real unit_roundoff() {
  return std::numeric_limits<Real>::epsilon() / 2;
}

template <std::floating_point Real>
constexpr Real underflow_threshold() {
  return std::numeric_limits<Real>::min();
}

template <std::floating_point Real>
struct Interval {
  Real lo = 0;
  Real hi = 0;

  Real mid() const { return lo + (hi - lo) / 2; }
  Real width() const { return hi - lo; }
  Real half_width() const { return (hi - lo) / 2; }
};

// Symmetric tridiagonal matrix: diagonal alpha (n), off-diagonal beta (n-1).
template <std::floating_point Real>
class Tridiagonal {
 public:
  Tridiagonal() = default;

  Tridiagonal(std::vector<Real> alpha, std::vector<Real> beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.empty()) throw std::invalid_argument("tridiagonal matrix must have n >= 1");
    if (beta_.size() + 1 != alpha_.size())
      throw std::invalid_argument("off-diagonal must have n-1 entries");
    auto finite = [](Real x) { return std::isfinite(x); };
    if (!std::all_of(alpha_.begin(), alpha_.end(), finite) ||
        !std::all_of(beta_.begin(), beta_.end(), finite))
      throw std::invalid_argument("tridiagonal entries must be finite");
  }

  std::size_t size() const { return alpha_.size(); }
  std::span<const Real> alpha() const { return alpha_; }
  std::span<const Real> beta() const { return beta_; }

  template <std::floating_point To>
  Tridiagonal<To> cast() const {
    return Tridiagonal<To>(std::vector<To>(alpha_.begin(), alpha_.end()),
                           std::vector<To>(beta_.begin(), beta_.end()));
  }

  friend bool operator==(const Tridiagonal&, const Tridiagonal&) = default;

 private:
  std::vector<Real> alpha_;
  std::vector<Real> beta_;
};

template <std::floating_point Real>
struct IrreducibleBlock {
  std::size_t offset = 0;
  Tridiagonal<Real> tridiag;
};

template <std::floating_point Real>
Real one_norm(const Tridiagonal<Real>& t) {
  const auto a = t.alpha();
  const auto b = t.beta();
  Real best = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Real col = std::abs(a[j]);
    if (j > 0) col += std::abs(b[j - 1]);
    if (j + 1 < a.size()) col += std::abs(b[j]);
    best = std::max(best, col);
  }
  return best;
}

template <std::floating_point Real>
Interval<Real> gershgorin(const Tridiagonal<Real>& t) {
  const auto a = t.alpha();
  const auto b = t.beta();
  const std::size_t n = a.size();
  Real gl = a[0];
  Real gu = a[0];
  for (std::size_t i = 0; i < n; ++i) {
    Real radius = 0;
    if (i > 0) radius += std::abs(b[i - 1]);
    if (i + 1 < n) radius += std::abs(b[i]);
    gl = std::min(gl, a[i] - radius);
    gu = std::max(gu, a[i] + radius);
  }
  const Real bnorm = std::max(std::abs(gl), std::abs(gu));
  const Real pad = (2 * static_cast<Real>(n) + 10) * bnorm * unit_roundoff<Real>();
  return {gl - pad, gu + pad};
}

template <std::floating_point Real>
Real split_threshold(const Tridiagonal<Real>& t, const SolverConfig& cfg) {
  return static_cast<Real>(cfg.split_tol_factor) * unit_roundoff<Real>() *
         std::sqrt(static_cast<Real>(t.size())) * one_norm(t);
}

template <std::floating_point Real>
std::vector<IrreducibleBlock<Real>> split(const Tridiagonal<Real>& t, const SolverConfig& cfg) {
  const auto a = t.alpha();
  const auto b = t.beta();
  const Real tol = split_threshold(t, cfg);
  std::vector<IrreducibleBlock<Real>> blocks;
  std::size_t start = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool boundary = i + 1 == a.size() || std::abs(b[i]) <= tol;
    if (!boundary) continue;
    std::vector<Real> alpha(a.begin() + start, a.begin() + i + 1);
    std::vector<Real> beta(b.begin() + start, b.begin() + i);
    blocks.push_back({start, Tridiagonal<Real>(std::move(alpha), std::move(beta))});
    start = i + 1;
  }
  return blocks;
}

template <std::floating_point Real>
struct Scaled {
  Tridiagonal<Real> tridiag;
  Real factor = 1;  // tridiag = factor * input; eigenvalues are divided by factor on output
};

// Power-of-two scaling that brings the norm into [underflow^(1/4), overflow^(1/4)].
template <std::floating_point Real>
Scaled<Real> scale_for_solve(const Tridiagonal<Real>& t) {
  const Real norm = one_norm(t);
  const Real small = std::sqrt(std::sqrt(underflow_threshold<Real>()));
  const Real large = std::sqrt(std::sqrt(std::numeric_limits<Real>::max()));
  if (norm == 0 || (norm >= small && norm <= large)) return {t, Real(1)};
  const int e = std::ilogb(norm);
  const Real factor = std::ldexp(Real(1), -e);
  std::vector<Real> alpha(t.alpha().begin(), t.alpha().end());
  std::vector<Real> beta(t.beta().begin(), t.beta().end());
  for (auto& x : alpha) x *= factor;
  for (auto& x : beta) x *= factor;
  return {Tridiagonal<Real>(std::move(alpha), std::move(beta)), factor};
}

}  // namespace mrrr
