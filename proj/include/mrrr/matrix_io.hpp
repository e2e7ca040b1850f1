#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrrr/tridiagonal.hpp"

namespace mrrr {

// Malformed matrix text input.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Format: n, then n diagonal entries, then n-1 off-diagonal entries, one per line.
inline Tridiagonal<double> read_tridiagonal(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw DataError("expected a positive matrix size on line 1");
  auto read_values = [&](std::size_t count, const char* what) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::string token;
      if (!(in >> token)) throw DataError(std::string("too few ") + what + " entries");
      std::size_t used = 0;
      try {
        v[i] = std::stod(token, &used);
      } catch (const std::exception&) {
        throw DataError("not a number: " + token);
      }
      if (used != token.size()) throw DataError("not a number: " + token);
    }
    return v;
  };
  auto alpha = read_values(static_cast<std::size_t>(n), "diagonal");
  auto beta = read_values(static_cast<std::size_t>(n - 1), "off-diagonal");
  std::string extra;
  if (in >> extra) throw DataError("trailing data after off-diagonal entries");
  try {
    return Tridiagonal<double>(std::move(alpha), std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

inline Tridiagonal<double> read_tridiagonal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_tridiagonal(in);
}

inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <std::floating_point Real>
void write_tridiagonal(std::ostream& out, const Tridiagonal<Real>& t) {
  out << t.size() << '\n';
  for (Real a : t.alpha()) out << format_real(static_cast<double>(a)) << '\n';
  for (Real b : t.beta()) out << format_real(static_cast<double>(b)) << '\n';
}

}  // namespace mrrr
