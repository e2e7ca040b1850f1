#pragma once

#include <json.hpp>
#include <ostream>
#include <span>
#include <string>

#include "mrrr/matrix_io.hpp"
#include "mrrr/metrics.hpp"

namespace mrrr {

inline nlohmann::ordered_json to_json(const QualityReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["kind"] = r.kind;
  j["profile"] = r.profile;
  j["R"] = r.R;
  j["O"] = r.O;
  j["rho"] = r.rho;
  j["d_max"] = r.d_max;
  j["phi_fail"] = r.phi_fail;
  j["workers"] = r.workers;
  j["t_values_s"] = r.t_values_s;
  j["t_vectors_s"] = r.t_vectors_s;
  return j;
}

inline constexpr const char* csv_header = "n,kind,profile,R,O,rho,d_max,phi_fail,workers,t_values_s,t_vectors_s";

inline std::string to_csv_row(const QualityReport& r) {
  return std::to_string(r.n) + ',' + r.kind + ',' + r.profile + ',' + format_real(r.R) + ',' +
         format_real(r.O) + ',' + format_real(r.rho) + ',' + std::to_string(r.d_max) + ',' +
         (r.phi_fail ? "1" : "0") + ',' + std::to_string(r.workers) + ',' +
         format_real(r.t_values_s) + ',' + format_real(r.t_vectors_s);
}

inline void write_csv(std::ostream& out, std::span<const QualityReport> reports) {
  out << csv_header << '\n';
  for (const auto& r : reports) out << to_csv_row(r) << '\n';
}

}  // namespace mrrr
