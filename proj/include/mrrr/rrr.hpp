#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrrr/config.hpp"
#include "mrrr/representation.hpp"
#include "mrrr/sturm.hpp"
#include "mrrr/tridiagonal.hpp"

namespace mrrr {

enum class GroupKind { singleton, cluster };

struct Group {
  std::size_t first = 0;  // inclusive, 0-based into the classified interval list
  std::size_t last = 0;   // inclusive
  GroupKind kind = GroupKind::singleton;

  std::size_t size() const { return last - first + 1; }
};

struct Partition {
  std::vector<Group> groups;

  std::size_t largest() const {
    std::size_t m = 0;
    for (const auto& g : groups) m = std::max(m, g.size());
    return m;
  }
};

template <std::floating_point Real>
Real reldist(const Interval<Real>& a, const Interval<Real>& b) {
  const Real scale = std::max({std::abs(a.lo), std::abs(a.hi), std::abs(b.lo), std::abs(b.hi)});
  if (scale == 0) return 0;
  return (b.lo - a.hi) / scale;
}

// Splits sorted intervals wherever the relative gap reaches gaptol.
template <std::floating_point Real>
Partition classify(std::span<const Interval<Real>> evals, Real gaptol) {
  Partition part;
  if (evals.empty()) return part;
  std::size_t start = 0;
  for (std::size_t j = 0; j < evals.size(); ++j) {
    const bool boundary = j + 1 == evals.size() || reldist(evals[j], evals[j + 1]) >= gaptol;
    if (!boundary) continue;
    part.groups.push_back({start, j, j == start ? GroupKind::singleton : GroupKind::cluster});
    start = j + 1;
  }
  return part;
}

template <std::floating_point Real>
Real growth_test(const Representation<Real>& rep, Real spdiam_root) {
  Real m = 0;
  for (Real x : rep.d) m = std::max(m, std::abs(x));
  return m / spdiam_root;
}

class RootFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <std::floating_point Real>
struct Root {
  Representation<Real> rep;
  Real mu = 0;
  Real spdiam = 0;
};

namespace detail {

// LDL* of T - mu I; nullopt unless finite and definite.
template <std::floating_point Real>
std::optional<std::pair<std::vector<Real>, std::vector<Real>>> definite_ldl(
    const Tridiagonal<Real>& t, Real mu) {
  const auto a = t.alpha();
  const auto b = t.beta();
  const std::size_t n = a.size();
  std::vector<Real> d(n);
  std::vector<Real> l(n - 1);
  d[0] = a[0] - mu;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    l[i] = b[i] / d[i];
    d[i + 1] = (a[i + 1] - mu) - l[i] * b[i];
  }
  const bool positive = d[0] > 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(d[i]) || (d[i] > 0) != positive || d[i] == 0) return std::nullopt;
    if (i + 1 < n && !std::isfinite(l[i])) return std::nullopt;
  }
  return std::make_pair(std::move(d), std::move(l));
}

}  // namespace detail

// Definite root representation at a Gershgorin end, randomly perturbed element-wise.
template <std::floating_point Real>
Root<Real> make_root(const Tridiagonal<Real>& block, const SolverConfig& cfg,
                     std::mt19937_64& rng) {
  const Interval<Real> g = gershgorin(block);
  const Real spdiam = g.hi - g.lo;
  const Real scale = std::max({std::abs(g.lo), std::abs(g.hi), underflow_threshold<Real>()});
  std::optional<std::pair<std::vector<Real>, std::vector<Real>>> chosen;
  Real mu = 0;
  Real push = 0;
  for (int attempt = 0; attempt < 8 && !chosen; ++attempt) {
    const Real ml = g.lo - push;
    const Real mr = g.hi + push;
    auto left = detail::definite_ldl(block, ml);
    auto right = detail::definite_ldl(block, mr);
    auto growth = [](const auto& f) {
      Real m = 0;
      for (Real x : f->first) m = std::max(m, std::abs(x));
      return m;
    };
    if (left && (!right || growth(left) <= growth(right))) {
      chosen = std::move(left);
      mu = ml;
    } else if (right) {
      chosen = std::move(right);
      mu = mr;
    }
    push = push == 0 ? 4 * static_cast<Real>(block.size()) * unit_roundoff<Real>() * scale
                     : 2 * push;
  }
  if (!chosen) throw RootFailure("no definite root factorization at the Gershgorin ends");

  auto& [d, l] = *chosen;
  const Real xi = static_cast<Real>(cfg.perturb_magnitude);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (auto& x : d) x *= 1 + xi * static_cast<Real>(unit(rng));
  for (auto& x : l) x *= 1 + xi * static_cast<Real>(unit(rng));
  return {Representation<Real>(std::move(d), std::move(l), mu, 0), mu,
          spdiam > 0 ? spdiam : scale};
}

template <std::floating_point Real>
struct ShiftOutcome {
  Representation<Real> rep;
  Real tau = 0;
  Real element_growth = 0;
  bool certified = false;
  Interval<Real> first_refined;  // extremal cluster eigenvalues at full accuracy
  Interval<Real> last_refined;
  std::size_t ops = 0;
};

// New RRR for the cluster evals[first..last]; evals[j] holds eigenvalue first_index + j
// (1-based) of rep.
template <std::floating_point Real>
ShiftOutcome<Real> select_shift(const Representation<Real>& rep, std::size_t first,
                                std::size_t last, std::span<const Interval<Real>> evals,
                                std::size_t first_index, Real spdiam_root,
                                const SolverConfig& cfg, Real growth_threshold) {
  const Real eps = unit_roundoff<Real>();
  const Real atol = bisection_atol<Real>();
  const Real rtol = static_cast<Real>(cfg.bisect_rtol_full);
  auto counter = [&rep](Real x) { return negcount_ldl(rep, x); };
  ShiftOutcome<Real> best;
  const auto lo_tr = bisect_traced<Real>(counter, first_index + first, evals[first], rtol, atol);
  const auto hi_tr = bisect_traced<Real>(counter, first_index + last, evals[last], rtol, atol);
  best.ops = lo_tr.evaluations + hi_tr.evaluations;
  best.first_refined = lo_tr.result;
  best.last_refined = hi_tr.result;

  const Real lo = lo_tr.result.lo;
  const Real hi = hi_tr.result.hi;
  Real tau_l = lo - 100 * eps * std::abs(lo);
  Real tau_r = hi + 100 * eps * std::abs(hi);
  bool have = false;
  const std::size_t attempts = cfg.max_shift_attempts + 60;
  for (std::size_t a = 0; a < attempts; ++a) {
    const bool certifiable = a < cfg.max_shift_attempts;
    if (!certifiable && have) break;
    for (Real tau : {tau_l, tau_r}) {
      auto cand = shift_representation(rep, tau);
      best.ops += 1;
      if (!cand) continue;
      const Real growth = growth_test(*cand, spdiam_root);
      if (!have || growth < best.element_growth) {
        best.rep = std::move(*cand);
        best.tau = tau;
        best.element_growth = growth;
        have = true;
      }
      // the left end is tried first and taken as soon as it passes
      if (certifiable && best.element_growth <= growth_threshold) {
        best.certified = true;
        return best;
      }
    }
    const Real delta = std::ldexp(eps * spdiam_root, static_cast<int>(a));
    tau_l -= delta;
    tau_r += delta;
  }
  if (!have) throw std::runtime_error("no finite shifted representation for cluster");
  return best;
}

}  // namespace mrrr
