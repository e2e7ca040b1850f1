#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mrrr/config.hpp"
#include "mrrr/tridiagonal.hpp"

namespace mrrr {

enum class MatrixKind { uniform, geometric, one21, clement, wilkinson, legendre, laguerre, hermite };

inline constexpr std::array<MatrixKind, 8> all_kinds = {
    MatrixKind::uniform, MatrixKind::geometric, MatrixKind::one21,    MatrixKind::clement,
    MatrixKind::wilkinson, MatrixKind::legendre, MatrixKind::laguerre, MatrixKind::hermite};

inline std::string_view kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::uniform: return "uniform";
    case MatrixKind::geometric: return "geometric";
    case MatrixKind::one21: return "one21";
    case MatrixKind::clement: return "clement";
    case MatrixKind::wilkinson: return "wilkinson";
    case MatrixKind::legendre: return "legendre";
    case MatrixKind::laguerre: return "laguerre";
    case MatrixKind::hermite: return "hermite";
  }
  return "unknown";
}

inline std::optional<MatrixKind> parse_kind(std::string_view name) {
  for (MatrixKind k : all_kinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

// Uniform and geometric are diagonal matrices carrying the prescribed spectra.
inline Tridiagonal<double> generate(MatrixKind kind, std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double eps = eps_double;
  std::vector<double> a(n, 0.0);
  std::vector<double> b(n - 1, 0.0);
  const double dn = static_cast<double>(n);
  switch (kind) {
    case MatrixKind::uniform:
      for (std::size_t k = 0; k < n; ++k)
        a[k] = n == 1 ? eps : eps + static_cast<double>(k) * (1 - eps) / (dn - 1);
      break;
    case MatrixKind::geometric:
      for (std::size_t k = 0; k < n; ++k)
        a[k] = n == 1 ? 1.0 : std::pow(eps, (dn - 1 - static_cast<double>(k)) / (dn - 1));
      break;
    case MatrixKind::one21:
      std::fill(a.begin(), a.end(), 2.0);
      std::fill(b.begin(), b.end(), 1.0);
      break;
    case MatrixKind::clement:
      for (std::size_t k = 1; k < n; ++k)
        b[k - 1] = std::sqrt(static_cast<double>(k) * static_cast<double>(n - k));
      break;
    case MatrixKind::wilkinson: {
      if (n % 2 == 0) throw std::invalid_argument("n must be odd");
      const std::size_t m = (n - 1) / 2;
      for (std::size_t i = 0; i < n; ++i)
        a[i] = static_cast<double>(i < m ? m - i : i - m);
      std::fill(b.begin(), b.end(), 1.0);
      break;
    }
    case MatrixKind::legendre:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double k = static_cast<double>(i + 2);
        b[i] = k / std::sqrt((2 * k - 1) * (2 * k + 1));
      }
      break;
    case MatrixKind::laguerre:
      for (std::size_t i = 0; i < n; ++i) a[i] = 2.0 * static_cast<double>(i + 1) + 1.0;
      for (std::size_t i = 0; i + 1 < n; ++i) b[i] = static_cast<double>(i + 2);
      break;
    case MatrixKind::hermite:
      for (std::size_t i = 0; i + 1 < n; ++i) b[i] = std::sqrt(static_cast<double>(i + 1));
      break;
  }
  return Tridiagonal<double>(std::move(a), std::move(b));
}

}  // namespace mrrr
