#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrrr/representation.hpp"
#include "mrrr/tridiagonal.hpp"

namespace mrrr {

template <std::floating_point Real>
inline std::size_t sign_bit(Real x) {
  return std::signbit(x) ? 1 : 0;
}

// Eigenvalues of t strictly below sigma. Exact zero off-diagonals decouple the recurrence.
template <std::floating_point Real>
std::size_t negcount_t(const Tridiagonal<Real>& t, Real sigma) {
  const auto a = t.alpha();
  const auto b = t.beta();
  Real d = a[0] - sigma;
  std::size_t count = sign_bit(d);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Real bb = b[i - 1] * b[i - 1];
    d = bb == 0 ? a[i] - sigma : (a[i] - sigma) - bb / d;
    count += sign_bit(d);
  }
  return count;
}

// Eigenvalues of LDL* strictly below sigma, via the stationary transform.
template <std::floating_point Real>
std::size_t negcount_ldl(const Representation<Real>& rep, Real sigma) {
  const std::size_t n = rep.size();
  Real s = -sigma;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Real dp = rep.d[i] + s;
    count += sign_bit(dp);
    if (rep.dll[i] == 0) {
      s = -sigma;
      continue;
    }
    const Real q = (std::isinf(s) && std::isinf(dp)) ? Real(1) : s / dp;
    s = q * rep.dll[i] - sigma;
  }
  count += sign_bit(rep.d[n - 1] + s);
  return count;
}

template <std::floating_point Real>
Real bisection_atol() {
  return 2 * underflow_threshold<Real>();
}

template <std::floating_point Real>
struct BisectionTrace {
  Interval<Real> result;
  std::size_t inflations = 0;
  std::size_t evaluations = 0;
};

// Bisection for the k-th (1-based) eigenvalue: returns [lo, hi] with
// counter(lo) < k <= counter(hi), narrowed until either tolerance is met.
template <std::floating_point Real, class Counter>
BisectionTrace<Real> bisect_traced(Counter&& counter, std::size_t k, Interval<Real> start,
                                   Real rtol, Real atol) {
  BisectionTrace<Real> tr;
  Real lo = start.lo;
  Real hi = start.hi;
  auto count = [&](Real x) {
    ++tr.evaluations;
    return static_cast<std::size_t>(counter(x));
  };
  constexpr int max_inflations = 4096;
  Real step = std::max({hi - lo, atol, unit_roundoff<Real>() * std::max(std::abs(lo), std::abs(hi))});
  int guard = 0;
  while (count(lo) >= k) {
    if (++guard > max_inflations) throw std::runtime_error("bisection: cannot bracket eigenvalue");
    lo -= step;
    step *= 2;
    ++tr.inflations;
  }
  step = std::max({hi - lo, atol, unit_roundoff<Real>() * std::max(std::abs(lo), std::abs(hi))});
  while (count(hi) < k) {
    if (++guard > max_inflations) throw std::runtime_error("bisection: cannot bracket eigenvalue");
    hi += step;
    step *= 2;
    ++tr.inflations;
  }
  while (true) {
    const Real width = hi - lo;
    if (width <= rtol * std::max(std::abs(lo), std::abs(hi)) || width <= atol) break;
    const Real mid = lo + width / 2;
    if (mid <= lo || mid >= hi) break;
    if (count(mid) < k)
      lo = mid;
    else
      hi = mid;
  }
  tr.result = {lo, hi};
  return tr;
}

template <std::floating_point Real, class Counter>
Interval<Real> bisect(Counter&& counter, std::size_t k, Interval<Real> start, Real rtol,
                      Real atol) {
  return bisect_traced<Real>(std::forward<Counter>(counter), k, start, rtol, atol).result;
}

template <std::floating_point Real>
struct RefineResult {
  std::vector<Interval<Real>> intervals;
  std::size_t bracket_repairs = 0;
  std::size_t negcounts = 0;
};

// Relative inflation applied to parent intervals when moved to a shifted representation.
template <std::floating_point Real>
Real refine_inflation(std::size_t n) {
  constexpr Real krr = 10;
  return 10 * krr * static_cast<Real>(n) * unit_roundoff<Real>();
}

// intervals[j] brackets eigenvalue first_index + j (1-based) of rep + tau I; the result
// brackets the same eigenvalues of rep, refined to rtol.
template <std::floating_point Real>
RefineResult<Real> refine_all(const Representation<Real>& rep, Real tau, std::size_t first_index,
                              std::span<const Interval<Real>> intervals, Real rtol) {
  const Real nu = refine_inflation<Real>(rep.size());
  const Real atol = bisection_atol<Real>();
  RefineResult<Real> out;
  out.intervals.reserve(intervals.size());
  auto counter = [&rep](Real x) { return negcount_ldl(rep, x); };
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    Real lo = (intervals[j].lo - nu * std::abs(intervals[j].lo)) - tau;
    lo -= nu * std::abs(lo);
    Real hi = (intervals[j].hi + nu * std::abs(intervals[j].hi)) - tau;
    hi += nu * std::abs(hi);
    auto tr = bisect_traced<Real>(counter, first_index + j, {lo, hi}, rtol, atol);
    out.bracket_repairs += tr.inflations > 0 ? 1 : 0;
    out.negcounts += tr.evaluations;
    out.intervals.push_back(tr.result);
  }
  return out;
}

}  // namespace mrrr
