#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "mrrr/config.hpp"
#include "mrrr/representation.hpp"
#include "mrrr/sturm.hpp"

namespace mrrr {

template <std::floating_point Real>
struct GetvecResult {
  std::vector<Real> z;  // unit 2-norm, zero outside [support_first, support_last]
  Real gamma_r = 0;
  std::size_t r = 0;
  Real norm = 0;        // norm of the solution of N_r* z = e_r before normalization
  std::size_t support_first = 0;
  std::size_t support_last = 0;
};

// Reusable buffers for repeated twisted factorizations of one representation.
template <std::floating_point Real>
struct GetvecWorkspace {
  std::vector<Real> dplus, lplus, s, omega, u, p, gamma;

  void resize(std::size_t n) {
    dplus.resize(n);
    lplus.resize(n > 0 ? n - 1 : 0);
    s.resize(n);
    omega.resize(n);
    u.resize(n > 0 ? n - 1 : 0);
    p.resize(n);
    gamma.resize(n);
  }
};

// Eigenvector of LDL* for the eigenvalue approximated by lambda, from the twisted
// factorization with the smallest |gamma| (or the given twist index).
template <std::floating_point Real>
std::optional<GetvecResult<Real>> getvec(const Representation<Real>& rep, Real lambda,
                                         std::optional<std::size_t> twist,
                                         GetvecWorkspace<Real>& ws) {
  const std::size_t n = rep.size();
  ws.resize(n);
  detail::stationary<Real>(rep, lambda, ws.dplus, ws.lplus, ws.s);
  detail::progressive<Real>(rep, lambda, ws.omega, ws.u, ws.p);
  detail::twist_pivots<Real>(rep, ws.s, ws.omega, ws.p, ws.gamma);
  std::size_t r = 0;
  if (twist && *twist < n && !std::isnan(ws.gamma[*twist])) {
    r = *twist;
  } else {
    const auto best = detail::twist_index<Real>(ws.gamma);
    if (!best) return std::nullopt;
    r = *best;
  }

  GetvecResult<Real> out;
  out.r = r;
  out.gamma_r = ws.gamma[r];
  std::vector<Real>& z = out.z;
  z.assign(n, Real(0));
  z[r] = 1;
  for (std::size_t i = r; i-- > 0;) {
    if (ws.dplus[i] != 0) {
      z[i] = -ws.lplus[i] * z[i + 1];
    } else if (i + 2 <= r && rep.dl[i] != 0) {
      z[i] = -(rep.dl[i + 1] / rep.dl[i]) * z[i + 2];
    } else {
      z[i] = 0;
    }
  }
  for (std::size_t i = r; i + 1 < n; ++i) {
    if (ws.omega[i + 1] != 0) {
      z[i + 1] = -ws.u[i] * z[i];
    } else if (i > 0 && rep.dl[i] != 0) {
      z[i + 1] = -(rep.dl[i - 1] / rep.dl[i]) * z[i - 1];
    } else {
      z[i + 1] = 0;
    }
  }

  Real zmax = 0;
  for (Real x : z) {
    if (!std::isfinite(x)) return std::nullopt;
    zmax = std::max(zmax, std::abs(x));
  }
  const Real cut = unit_roundoff<Real>() * zmax;
  std::size_t first = 0;
  std::size_t last = n - 1;
  while (first < r && std::abs(z[first]) < cut) z[first++] = 0;
  while (last > r && std::abs(z[last]) < cut) z[last--] = 0;

  Real sum = 0;
  for (std::size_t i = first; i <= last; ++i) sum += z[i] * z[i];
  const Real norm = std::sqrt(sum);
  if (!(norm > 0) || !std::isfinite(norm)) return std::nullopt;
  for (std::size_t i = first; i <= last; ++i) z[i] /= norm;
  out.norm = norm;
  out.support_first = first;
  out.support_last = last;
  return out;
}

template <std::floating_point Real>
std::optional<GetvecResult<Real>> getvec(const Representation<Real>& rep, Real lambda) {
  GetvecWorkspace<Real> ws;
  return getvec(rep, lambda, std::nullopt, ws);
}

template <std::floating_point Real>
struct EigenPair {
  std::size_t index = 0;      // 1-based position in the spectrum of the representation
  Real value = 0;             // eigenvalue of the original matrix (local value + shift)
  Real local_value = 0;       // eigenvalue of the representation
  Real error = 0;             // uncertainty half-width
  std::vector<Real> vector;
  std::size_t support_first = 0;
  std::size_t support_last = 0;
  std::size_t rqi_iters = 0;
  Real residual_est = 0;      // |gamma_r| / ||z||
  Real z_norm = 0;            // ||z|| before normalization
  bool used_bisection = false;
  std::size_t ops = 0;        // flop proxy in units of n
};

// Eigenpair for the k-th (1-based) eigenvalue of rep, a singleton bracketed by
// `bracket`; gap is the distance to the nearest other eigenvalue.
template <std::floating_point Real>
EigenPair<Real> rqi_singleton(const Representation<Real>& rep, std::size_t k,
                              Interval<Real> bracket, const SolverConfig& cfg, Real gap,
                              GetvecWorkspace<Real>& ws) {
  const std::size_t n = rep.size();
  const Real eps = unit_roundoff<Real>();
  const Real atol = bisection_atol<Real>();
  const Real tol1 = static_cast<Real>(cfg.tol1(n));
  const Real tol2 = static_cast<Real>(cfg.rqi_tol2);
  auto counter = [&rep](Real x) { return negcount_ldl(rep, x); };

  EigenPair<Real> pair;
  pair.index = k;
  Real lo = bracket.lo;
  Real hi = bracket.hi;
  Real lambda = bracket.mid();
  std::optional<std::size_t> twist;
  std::optional<GetvecResult<Real>> accepted;

  for (std::size_t iter = 1; iter <= cfg.max_rqi_iterations; ++iter) {
    auto gv = getvec(rep, lambda, twist, ws);
    pair.ops += 4;
    pair.rqi_iters = iter;
    if (!gv) break;
    twist = gv->r;
    const Real resid = std::abs(gv->gamma_r) / gv->norm;
    const Real rqc = gv->gamma_r / (gv->norm * gv->norm);
    const std::size_t below = negcount_ldl(rep, lambda);
    pair.ops += 1;
    if (below + 1 < k || below > k) break;  // drifted towards another eigenvalue
    const bool right_of_target = below >= k;
    if (right_of_target)
      hi = std::min(hi, lambda);
    else
      lo = std::max(lo, lambda);

    if (resid < tol1 * gap || std::abs(rqc) < tol2 * std::abs(lambda)) {
      // Confirm the residual interval contains the k-th eigenvalue, not a neighbour.
      const Real w = std::max({2 * resid, 4 * eps * static_cast<Real>(n) * std::abs(lambda), atol});
      const bool ok = right_of_target ? negcount_ldl(rep, lambda - w) < k
                                      : negcount_ldl(rep, lambda + w) >= k;
      pair.ops += 1;
      if (!ok) break;
      if (cfg.final_rqc) {
        const Real cand = lambda + rqc;
        if (cand >= lo && cand <= hi) lambda = cand;
      }
      pair.residual_est = resid;
      pair.error = std::max(resid, eps * std::abs(lambda));
      accepted = std::move(gv);
      break;
    }
    const Real cand = lambda + rqc;
    const bool sign_ok = right_of_target ? rqc <= 0 : rqc >= 0;
    if (!sign_ok || !(cand >= lo && cand <= hi)) break;
    lambda = cand;
  }

  if (!accepted) {
    auto tr = bisect_traced<Real>(counter, k, {lo, hi}, static_cast<Real>(cfg.bisect_rtol_full),
                                  atol);
    pair.ops += tr.evaluations;
    lambda = tr.result.mid();
    auto gv = getvec(rep, lambda, std::nullopt, ws);
    pair.ops += 4;
    if (!gv) {
      // A perturbed shift away from an exact pole of the recurrences.
      const Real nudge = std::max(tr.result.half_width(), 4 * eps * std::abs(lambda));
      gv = getvec(rep, lambda + nudge, std::nullopt, ws);
      pair.ops += 4;
      if (!gv) throw std::runtime_error("eigenvector recurrence failed after bisection");
    }
    pair.used_bisection = true;
    pair.residual_est = std::abs(gv->gamma_r) / gv->norm;
    pair.error = std::max(tr.result.half_width(), pair.residual_est);
    accepted = std::move(gv);
  }

  pair.z_norm = accepted->norm;
  pair.local_value = lambda;
  pair.value = lambda + rep.shift;
  pair.vector = std::move(accepted->z);
  pair.support_first = accepted->support_first;
  pair.support_last = accepted->support_last;
  return pair;
}

template <std::floating_point Real>
EigenPair<Real> rqi_singleton(const Representation<Real>& rep, std::size_t k,
                              Interval<Real> bracket, const SolverConfig& cfg, Real gap) {
  GetvecWorkspace<Real> ws;
  return rqi_singleton(rep, k, bracket, cfg, gap, ws);
}

}  // namespace mrrr
