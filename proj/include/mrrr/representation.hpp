#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrrr/tridiagonal.hpp"

namespace mrrr {

// LDL* factorization of (T - shift I) stored by its nontrivial entries,
// with the products d*l and d*l*l cached.
template <std::floating_point Real>
struct Representation {
  std::vector<Real> d;
  std::vector<Real> l;
  std::vector<Real> dl;
  std::vector<Real> dll;
  Real shift = 0;
  std::size_t depth = 0;

  Representation() = default;

  Representation(std::vector<Real> d_in, std::vector<Real> l_in, Real shift_in = 0,
                 std::size_t depth_in = 0)
      : d(std::move(d_in)), l(std::move(l_in)), shift(shift_in), depth(depth_in) {
    if (d.empty() || l.size() + 1 != d.size())
      throw std::invalid_argument("representation needs n pivots and n-1 multipliers");
    auto finite = [](Real x) { return std::isfinite(x); };
    if (!std::all_of(d.begin(), d.end(), finite) || !std::all_of(l.begin(), l.end(), finite))
      throw std::invalid_argument("representation entries must be finite");
    dl.resize(l.size());
    dll.resize(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      dl[i] = d[i] * l[i];
      dll[i] = dl[i] * l[i];
    }
  }

  std::size_t size() const { return d.size(); }

  // The represented matrix LDL* as a tridiagonal (diagnostic use).
  Tridiagonal<Real> multiply_out() const {
    const std::size_t n = d.size();
    std::vector<Real> alpha(n);
    std::vector<Real> beta(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      alpha[i] = d[i] + (i > 0 ? dll[i - 1] : Real(0));
      if (i + 1 < n) beta[i] = dl[i];
    }
    return Tridiagonal<Real>(std::move(alpha), std::move(beta));
  }
};

namespace detail {

// dstqds into caller storage; out_s[i] holds the auxiliary s_i.
// Decoupled positions (dl == 0) keep l+ = 0 and contribute nothing to s.
template <std::floating_point Real>
void stationary(const Representation<Real>& rep, Real tau, std::span<Real> dplus,
                std::span<Real> lplus, std::span<Real> s) {
  const std::size_t n = rep.size();
  Real si = -tau;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s[i] = si;
    const Real dp = si + rep.d[i];
    dplus[i] = dp;
    if (rep.dl[i] == 0) {
      lplus[i] = 0;
      si = -tau;
      continue;
    }
    const Real q = (std::isinf(si) && std::isinf(dp)) ? Real(1) : si / dp;
    lplus[i] = rep.dl[i] / dp;
    si = q * rep.dll[i] - tau;
  }
  s[n - 1] = si;
  dplus[n - 1] = si + rep.d[n - 1];
}

// dqds into caller storage; omega[i+1] pairs with u[i].
template <std::floating_point Real>
void progressive(const Representation<Real>& rep, Real tau, std::span<Real> omega,
                 std::span<Real> u, std::span<Real> p) {
  const std::size_t n = rep.size();
  Real pi = rep.d[n - 1] - tau;
  for (std::size_t i = n - 1; i-- > 0;) {
    p[i + 1] = pi;
    const Real w = pi + rep.dll[i];
    omega[i + 1] = w;
    if (rep.dl[i] == 0) {
      u[i] = 0;
      pi = rep.d[i] - tau;
      continue;
    }
    const Real q = (std::isinf(pi) && std::isinf(w)) ? Real(1) : pi / w;
    u[i] = rep.dl[i] / w;
    pi = q * rep.d[i] - tau;
  }
  p[0] = pi;
  omega[0] = pi;
}

template <std::floating_point Real>
bool any_nan(std::span<const Real> v) {
  return std::any_of(v.begin(), v.end(), [](Real x) { return std::isnan(x); });
}

}  // namespace detail

template <std::floating_point Real>
struct StationaryResult {
  std::vector<Real> dplus;
  std::vector<Real> lplus;
  std::vector<Real> s;
};

template <std::floating_point Real>
struct ProgressiveResult {
  std::vector<Real> omega_minus;
  std::vector<Real> uminus;
  std::vector<Real> p;
};

// L+D+L+* = LDL* - tau I; nullopt when a pivot is NaN.
template <std::floating_point Real>
std::optional<StationaryResult<Real>> dstqds(const Representation<Real>& rep, Real tau) {
  const std::size_t n = rep.size();
  StationaryResult<Real> r{std::vector<Real>(n), std::vector<Real>(n - 1), std::vector<Real>(n)};
  detail::stationary<Real>(rep, tau, r.dplus, r.lplus, r.s);
  if (detail::any_nan<Real>(r.dplus)) return std::nullopt;
  return r;
}

// U-D-U-* = LDL* - tau I; nullopt when a pivot is NaN.
template <std::floating_point Real>
std::optional<ProgressiveResult<Real>> dqds(const Representation<Real>& rep, Real tau) {
  const std::size_t n = rep.size();
  ProgressiveResult<Real> r{std::vector<Real>(n), std::vector<Real>(n - 1), std::vector<Real>(n)};
  detail::progressive<Real>(rep, tau, r.omega_minus, r.uminus, r.p);
  if (detail::any_nan<Real>(r.omega_minus)) return std::nullopt;
  return r;
}

template <std::floating_point Real>
struct TwistData {
  std::vector<Real> dplus, lplus, s;
  std::vector<Real> omega_minus, uminus, p;
  std::vector<Real> gamma;
  std::size_t r = 0;
};

namespace detail {

template <std::floating_point Real>
void twist_pivots(const Representation<Real>& rep, std::span<const Real> s,
                  std::span<const Real> omega, std::span<const Real> p, std::span<Real> gamma) {
  const std::size_t n = rep.size();
  for (std::size_t k = 0; k + 1 < n; ++k) gamma[k] = s[k] + (rep.d[k] / omega[k + 1]) * p[k + 1];
  gamma[n - 1] = s[n - 1] + rep.d[n - 1];
}

// Index of the smallest |gamma|, NaN excluded, ties to the smallest index.
template <std::floating_point Real>
std::optional<std::size_t> twist_index(std::span<const Real> gamma) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (std::isnan(gamma[k])) continue;
    if (!best || std::abs(gamma[k]) < std::abs(gamma[*best])) best = k;
  }
  return best;
}

}  // namespace detail

// Twisted factorizations of LDL* - lambda I; nullopt when every gamma is NaN.
template <std::floating_point Real>
std::optional<TwistData<Real>> compute_gammas(const Representation<Real>& rep, Real lambda) {
  const std::size_t n = rep.size();
  TwistData<Real> t;
  t.dplus.resize(n);
  t.lplus.resize(n - 1);
  t.s.resize(n);
  t.omega_minus.resize(n);
  t.uminus.resize(n - 1);
  t.p.resize(n);
  t.gamma.resize(n);
  detail::stationary<Real>(rep, lambda, t.dplus, t.lplus, t.s);
  detail::progressive<Real>(rep, lambda, t.omega_minus, t.uminus, t.p);
  detail::twist_pivots<Real>(rep, t.s, t.omega_minus, t.p, t.gamma);
  const auto r = detail::twist_index<Real>(t.gamma);
  if (!r) return std::nullopt;
  t.r = *r;
  return t;
}

// New node of the representation tree: LDL* - tau I. Fails on any non-finite entry.
template <std::floating_point Real>
std::optional<Representation<Real>> shift_representation(const Representation<Real>& rep,
                                                          Real tau) {
  auto f = dstqds(rep, tau);
  if (!f) return std::nullopt;
  auto finite = [](Real x) { return std::isfinite(x); };
  if (!std::all_of(f->dplus.begin(), f->dplus.end(), finite) ||
      !std::all_of(f->lplus.begin(), f->lplus.end(), finite))
    return std::nullopt;
  return Representation<Real>(std::move(f->dplus), std::move(f->lplus), rep.shift + tau,
                              rep.depth + 1);
}

}  // namespace mrrr
