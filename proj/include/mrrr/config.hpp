#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace mrrr {

enum class PrecisionProfile { standard64, mixed32in64 };

// Classic: stop RQI at tol1 = rqi_tol1 * n. Relaxed: tol1 = rqi_tol1 * sqrt(n).
enum class RqiMode { classic, relaxed };

inline constexpr double eps_double = 0x1p-53;
inline constexpr double eps_single = 0x1p-24;

struct SolverConfig {
  PrecisionProfile profile = PrecisionProfile::standard64;
  double gaptol = 1e-3;
  double split_tol_factor = 1.0;
  double perturb_magnitude = 8 * eps_double;
  double rqi_tol1 = eps_double;
  double rqi_tol2 = 4 * eps_double;
  double bisect_rtol_classify = 1e-5;
  double bisect_rtol_full = 4 * eps_double;
  std::size_t max_shift_attempts = 6;
  std::size_t worker_count = 1;
  std::uint64_t seed = 0x243f6a8885a308d3ULL;

  RqiMode rqi_mode = RqiMode::classic;
  double eps_out = eps_double;
  double growth_threshold = 64;
  std::size_t max_rqi_iterations = 10;
  std::size_t min_rtask_cluster = 64;
  std::size_t max_tree_depth = 16;
  bool depth_first = false;
  bool final_rqc = false;
  bool compute_vectors = true;

  void validate() const {
    if (!(gaptol > 0 && gaptol < 1))
      throw std::invalid_argument("gaptol must lie in (0, 1)");
    if (worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    if (max_shift_attempts < 1)
      throw std::invalid_argument("max_shift_attempts must be >= 1");
    if (!(split_tol_factor >= 0) || !(perturb_magnitude >= 0) || !(rqi_tol1 > 0) ||
        !(rqi_tol2 > 0) || !(bisect_rtol_classify > 0) || !(bisect_rtol_full > 0))
      throw std::invalid_argument("tolerances must be positive");
  }

  double tol1(std::size_t n) const {
    const double m = static_cast<double>(n);
    return rqi_mode == RqiMode::classic ? rqi_tol1 * m : rqi_tol1 * std::sqrt(m);
  }
};

}  // namespace mrrr
