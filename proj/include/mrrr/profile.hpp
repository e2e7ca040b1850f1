#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrrr/config.hpp"

namespace mrrr {

struct Profile {
  PrecisionProfile kind = PrecisionProfile::standard64;
  double eps_out = eps_double;
  double eps_work = eps_double;
  double gaptol = 1e-3;
  double perturb = 8 * eps_double;
  RqiMode rqi_mode = RqiMode::classic;
};

inline Profile standard64() { return {}; }

// Lower end of the admissible gaptol range: min(1e-3, eps_work sqrt(n) / eps_out).
inline double gaptol_lower_bound(const Profile& p, std::size_t n) {
  return std::min(1e-3, p.eps_work * std::sqrt(static_cast<double>(n)) / p.eps_out);
}

inline bool profile_accepts(const Profile& p, std::size_t n) {
  const double m = static_cast<double>(n);
  return m * p.eps_work <= p.eps_out * std::sqrt(m) && gaptol_lower_bound(p, n) <= p.gaptol &&
         p.gaptol <= 1e-3;
}

inline Profile mixed32in64(std::size_t n) {
  Profile p;
  p.kind = PrecisionProfile::mixed32in64;
  p.eps_out = eps_single;
  p.eps_work = eps_double;
  p.gaptol = 1e-5;
  p.perturb = eps_single / 8;
  p.rqi_mode = RqiMode::relaxed;
  if (!profile_accepts(p, n))
    throw std::domain_error("matrix size outside the single/double gaptol interval");
  return p;
}

// Admissible element growth and eigenvalue-refinement constants for the profile.
inline double kelg_bound(const Profile& p, std::size_t n) {
  return std::max(10.0, p.eps_out / (p.eps_work * std::sqrt(static_cast<double>(n))));
}

inline double krr_bound(const Profile& p, std::size_t n) {
  return std::max(10.0, p.eps_out / (p.eps_work * std::sqrt(static_cast<double>(n))) * p.gaptol);
}

inline SolverConfig make_config(const Profile& p, std::size_t n) {
  SolverConfig cfg;
  cfg.profile = p.kind;
  cfg.gaptol = p.gaptol;
  cfg.perturb_magnitude = p.perturb;
  cfg.rqi_mode = p.rqi_mode;
  cfg.eps_out = p.eps_out;
  cfg.rqi_tol1 = p.rqi_mode == RqiMode::classic ? p.eps_work : p.eps_out;
  cfg.rqi_tol2 = 4 * p.eps_work;
  cfg.bisect_rtol_classify = 1e-2 * p.gaptol;
  cfg.bisect_rtol_full = 4 * p.eps_work;
  cfg.growth_threshold = std::min(64.0, kelg_bound(p, n));
  cfg.depth_first = p.kind == PrecisionProfile::mixed32in64;
  return cfg;
}

inline SolverConfig make_config(PrecisionProfile kind, std::size_t n) {
  return make_config(kind == PrecisionProfile::standard64 ? standard64() : mixed32in64(n), n);
}

// Narrow a unit vector to the output format; renormalize when rounding moved the norm.
template <std::floating_point Out, std::floating_point Work>
std::vector<Out> convert_out(std::span<const Work> v) {
  std::vector<Out> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<Out>(v[i]);
  if constexpr (sizeof(Out) < sizeof(Work)) {
    Work sum = 0;
    for (Out x : out) sum += static_cast<Work>(x) * static_cast<Work>(x);
    const Work norm = std::sqrt(sum);
    const Work eps_out = std::numeric_limits<Out>::epsilon() / 2;
    if (norm > 0 && std::abs(norm - 1) > eps_out) {
      for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<Out>(v[i] / norm);
    }
  }
  return out;
}

}  // namespace mrrr
