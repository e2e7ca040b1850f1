#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrrr/solver.hpp"
#include "mrrr/tridiagonal.hpp"

namespace mrrr {

struct ResidualOrthogonality {
  double R = 0;
  double O = 0;
  bool sampled = false;  // O estimated from a subset of pairs
};

inline constexpr std::size_t exact_orthogonality_limit = 4000;

// R = max_i ||T x_i - lambda_i x_i||_1 / ||T||_1 and O = max_{i != j} |x_i . x_j|,
// evaluated in double on the stored (possibly single precision) data.
template <std::floating_point Out>
ResidualOrthogonality residual_orthogonality(const Tridiagonal<Out>& t, const EigenSystem<Out>& es) {
  ResidualOrthogonality ro;
  const std::size_t n = t.size();
  const std::size_t k = es.count();
  if (k == 0 || es.vectors.empty()) return ro;
  const auto a = t.alpha();
  const auto b = t.beta();
  const double norm = static_cast<double>(one_norm(t));
  for (std::size_t j = 0; j < k; ++j) {
    const auto x = es.column(j);
    const double lambda = static_cast<double>(es.values[j]);
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = (static_cast<double>(a[i]) - lambda) * static_cast<double>(x[i]);
      if (i > 0) r += static_cast<double>(b[i - 1]) * static_cast<double>(x[i - 1]);
      if (i + 1 < n) r += static_cast<double>(b[i]) * static_cast<double>(x[i + 1]);
      sum += std::abs(r);
    }
    ro.R = std::max(ro.R, norm > 0 ? sum / norm : sum);
  }
  if (k < 2) return ro;

  Eigen::MatrixXd X(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto x = es.column(j);
    for (std::size_t i = 0; i < n; ++i) X(i, j) = static_cast<double>(x[i]);
  }
  if (k <= exact_orthogonality_limit) {
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(k, k);
    G.selfadjointView<Eigen::Lower>().rankUpdate(X.transpose());
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = j + 1; i < k; ++i) ro.O = std::max(ro.O, std::abs(G(i, j)));
    return ro;
  }
  ro.sampled = true;
  std::mt19937_64 rng(k);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    auto pair = [&](std::size_t i) {
      if (i != j) ro.O = std::max(ro.O, std::abs(X.col(j).dot(X.col(i))));
    };
    for (std::size_t d = 1; d <= 2; ++d) {
      if (j >= d) pair(j - d);
      if (j + d < k) pair(j + d);
    }
    for (int s = 0; s < 64; ++s) pair(pick(rng));
  }
  return ro;
}

// b_p = mean / max of per-worker busy time.
inline double load_balance(std::span<const double> busy) {
  if (busy.empty()) throw std::invalid_argument("load_balance needs at least one worker");
  const double mx = *std::max_element(busy.begin(), busy.end());
  if (mx <= 0) return 1.0;
  const double mean = std::accumulate(busy.begin(), busy.end(), 0.0) / static_cast<double>(busy.size());
  return mean / mx;
}

inline double clustering(std::size_t largest_cluster, std::size_t n) {
  return static_cast<double>(std::max<std::size_t>(largest_cluster, 1)) / static_cast<double>(n);
}

struct QualityReport {
  std::size_t n = 0;
  std::string kind;
  std::string profile;
  double R = 0;
  double O = 0;
  bool O_sampled = false;
  double rho = 0;
  std::size_t d_max = 0;
  bool phi_fail = false;
  std::size_t uncertified_shift_count = 0;
  std::size_t total_shift_count = 0;
  std::size_t workers = 1;
  double t_values_s = 0;
  double t_vectors_s = 0;
  std::vector<double> busy_seconds;
};

// Orthogonality above which a run counts as a robustness failure. The single precision
// profile cannot go below the rounding floor eps_out * sqrt(n) of its stored vectors.
inline double robustness_o_threshold(const SolverConfig& cfg, std::size_t n) {
  const double m = static_cast<double>(n);
  return std::max(m * eps_double / cfg.gaptol,
                  cfg.profile == PrecisionProfile::mixed32in64 ? cfg.eps_out * std::sqrt(m) : 0.0);
}

template <std::floating_point Out>
QualityReport make_report(const Tridiagonal<Out>& t, const EigenSystem<Out>& es,
                          const SolverConfig& cfg, std::string kind) {
  QualityReport rep;
  rep.n = t.size();
  rep.kind = std::move(kind);
  rep.profile = cfg.profile == PrecisionProfile::standard64 ? "std64" : "mixed32";
  const auto ro = residual_orthogonality(t, es);
  rep.R = ro.R;
  rep.O = ro.O;
  rep.O_sampled = ro.sampled;
  rep.rho = clustering(es.stats.largest_cluster, rep.n);
  rep.d_max = es.stats.d_max;
  rep.uncertified_shift_count = es.stats.uncertified_count;
  rep.total_shift_count = es.stats.shift_count;
  rep.phi_fail = rep.uncertified_shift_count > 0 || rep.O > robustness_o_threshold(cfg, rep.n);
  rep.workers = cfg.worker_count;
  rep.t_values_s = es.stats.t_values_s;
  rep.t_vectors_s = es.stats.t_vectors_s;
  rep.busy_seconds = es.stats.busy_seconds;
  return rep;
}

inline double robustness_phi(std::span<const QualityReport> reports) {
  if (reports.empty()) return 1.0;
  const auto fails = std::count_if(reports.begin(), reports.end(),
                                   [](const QualityReport& r) { return r.phi_fail; });
  return 1.0 - static_cast<double>(fails) / static_cast<double>(reports.size());
}

struct OracleResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column-major n x n
};

inline constexpr std::size_t oracle_limit = 512;

// Cyclic Jacobi on the dense matrix; reference solution for small problems. Rotations use
// the Rutishauser form: the diagonal moves by t*a_pq and each off-diagonal pair by s, tau.
inline OracleResult oracle_eig(const Tridiagonal<double>& t) {
  const std::size_t n = t.size();
  if (n > oracle_limit) throw std::invalid_argument("oracle limit: n must be <= 512");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    A(i, i) = t.alpha()[i];
    if (i + 1 < n) A(i, i + 1) = A(i + 1, i) = t.beta()[i];
  }
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(n, n);
  const double target = static_cast<double>(n) * eps_double * A.norm();
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
  };
  auto rotate = [](double& x, double& y, double s, double tau) {
    const double gx = x;
    const double hy = y;
    x = gx - s * (hy + gx * tau);
    y = hy + s * (gx - hy * tau);
  };
  // One sweep past the stopping test polishes the diagonal at negligible cost.
  bool polish = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= target) {
      if (polish) break;
      polish = true;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2 * apq);
        const double tt = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1 / std::sqrt(tt * tt + 1);
        const double s = tt * c;
        const double tau = s / (1 + c);
        A(p, p) -= tt * apq;
        A(q, q) += tt * apq;
        A(p, q) = A(q, p) = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          rotate(A(k, p), A(k, q), s, tau);
          A(p, k) = A(k, p);
          A(q, k) = A(k, q);
        }
        for (std::size_t k = 0; k < n; ++k) rotate(V(k, p), V(k, q), s, tau);
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return A(a, a) < A(b, b); });
  OracleResult r;
  r.values.resize(n);
  r.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    r.values[j] = A(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) r.vectors[j * n + i] = V(i, order[j]);
  }
  return r;
}

struct OracleComparison {
  double max_value_deviation = 0;
  double min_alignment = 1;  // over eigenvalues with oracle gap above the threshold
  std::size_t aligned_checked = 0;
};

// Compares a full-spectrum solve against the oracle; vectors are checked where the
// oracle gap exceeds gap_threshold.
template <std::floating_point Out>
OracleComparison compare_with_oracle(const EigenSystem<Out>& es, const OracleResult& oracle,
                                     double gap_threshold) {
  OracleComparison c;
  const std::size_t n = es.n;
  for (std::size_t j = 0; j < es.count(); ++j) {
    const std::size_t idx = es.indices[j] - 1;
    c.max_value_deviation =
        std::max(c.max_value_deviation, std::abs(static_cast<double>(es.values[j]) - oracle.values[idx]));
    if (es.vectors.empty()) continue;
    double gap = std::numeric_limits<double>::infinity();
    if (idx > 0) gap = std::min(gap, oracle.values[idx] - oracle.values[idx - 1]);
    if (idx + 1 < n) gap = std::min(gap, oracle.values[idx + 1] - oracle.values[idx]);
    if (!(gap > gap_threshold)) continue;
    const auto x = es.column(j);
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += static_cast<double>(x[i]) * oracle.vectors[idx * n + i];
    c.min_alignment = std::min(c.min_alignment, std::abs(dot));
    ++c.aligned_checked;
  }
  return c;
}

}  // namespace mrrr
