#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mrrr/mrrr.hpp"
#include "mrrr/report.hpp"

namespace {

enum Exit : int { ok = 0, robustness = 2, usage = 64, data = 65, internal = 70 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_workers() {
  if (const char* env = std::getenv("MRRR_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct SolveArgs {
  std::string input;
  bool all = false;
  std::optional<long long> il, iu;
  std::optional<double> vl, vu;
  std::string profile = "std64";
  std::size_t workers = default_workers();
  std::uint64_t seed = mrrr::SolverConfig{}.seed;
  std::string out;
  std::string vectors_out;
  std::string kind = "file";
};

void add_solve_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("input", a.input, "matrix file")->required();
  cmd->add_flag("--all", a.all, "all eigenpairs (default)");
  cmd->add_option("--il", a.il, "first index (1-based)");
  cmd->add_option("--iu", a.iu, "last index (1-based)");
  cmd->add_option("--vl", a.vl, "lower value bound");
  cmd->add_option("--vu", a.vu, "upper value bound (exclusive)");
  cmd->add_option("--profile", a.profile, "std64 or mixed32")
      ->check(CLI::IsMember({"std64", "mixed32"}));
  cmd->add_option("--workers", a.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "seed of the root perturbation");
  cmd->add_option("--kind", a.kind, "label written to the report");
}

mrrr::Selection selection_of(const SolveArgs& a, std::size_t n) {
  const bool by_index = a.il || a.iu;
  const bool by_value = a.vl || a.vu;
  if ((a.all && (by_index || by_value)) || (by_index && by_value))
    throw UsageError("choose one of --all, --il/--iu, --vl/--vu");
  if (by_index) {
    if (!a.il || !a.iu) throw UsageError("--il and --iu must be given together");
    if (*a.il < 1 || *a.il > *a.iu || static_cast<std::size_t>(*a.iu) > n)
      throw UsageError("index range must satisfy 1 <= il <= iu <= n");
    return mrrr::Selection::by_index(static_cast<std::size_t>(*a.il), static_cast<std::size_t>(*a.iu));
  }
  if (by_value) {
    if (!a.vl || !a.vu) throw UsageError("--vl and --vu must be given together");
    if (!(*a.vl < *a.vu)) throw UsageError("value range must satisfy vl < vu");
    return mrrr::Selection::by_value(*a.vl, *a.vu);
  }
  return mrrr::Selection::all();
}

mrrr::SolverConfig config_of(const SolveArgs& a, std::size_t n) {
  auto cfg = mrrr::make_config(
      a.profile == "mixed32" ? mrrr::PrecisionProfile::mixed32in64 : mrrr::PrecisionProfile::standard64, n);
  cfg.worker_count = a.workers;
  cfg.seed = a.seed;
  return cfg;
}

template <class Out>
void write_vectors(const std::string& path, const mrrr::EigenSystem<Out>& es) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << es.n << ' ' << es.count() << '\n';
  for (Out x : es.vectors) out << mrrr::format_real(static_cast<double>(x)) << '\n';
}

void emit_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

template <class Out>
mrrr::QualityReport solve_and_report(const mrrr::Tridiagonal<double>& input, const mrrr::Selection& sel,
                                     const mrrr::SolverConfig& cfg, const std::string& kind,
                                     const std::string& vectors_out) {
  const auto t = input.template cast<Out>();
  const auto es = mrrr::solve(t, sel, cfg);
  if (!vectors_out.empty()) write_vectors(vectors_out, es);
  return mrrr::make_report(t, es, cfg, kind);
}

int cmd_generate(const std::string& kind_name, long long n, const std::string& out_path) {
  const auto kind = mrrr::parse_kind(kind_name);
  if (!kind) throw UsageError("unknown matrix kind: " + kind_name);
  if (n < 1) throw UsageError("n must be >= 1");
  mrrr::Tridiagonal<double> t;
  try {
    t = mrrr::generate(*kind, static_cast<std::size_t>(n));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (out_path.empty() || out_path == "-") {
    mrrr::write_tridiagonal(std::cout, t);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    mrrr::write_tridiagonal(out, t);
  }
  return ok;
}

int cmd_solve(const SolveArgs& a) {
  const auto input = mrrr::read_tridiagonal_file(a.input);
  const auto sel = selection_of(a, input.size());
  const auto cfg = config_of(a, input.size());
  const auto rep = a.profile == "mixed32"
                       ? solve_and_report<float>(input, sel, cfg, a.kind, a.vectors_out)
                       : solve_and_report<double>(input, sel, cfg, a.kind, a.vectors_out);
  emit_json(a.out, mrrr::to_json(rep));
  return rep.uncertified_shift_count > 0 ? robustness : ok;
}

template <class Out>
int verify_with(const mrrr::Tridiagonal<double>& input, const mrrr::Selection& sel,
                const mrrr::SolverConfig& cfg) {
  const auto t = input.template cast<Out>();
  const auto es = mrrr::solve(t, sel, cfg);
  const auto oracle = mrrr::oracle_eig(t.template cast<double>());
  const double norm = mrrr::one_norm(input);
  const auto cmp = mrrr::compare_with_oracle(es, oracle, 1e-3 * norm);
  const double n = static_cast<double>(input.size());
  const double value_tol = cfg.profile == mrrr::PrecisionProfile::standard64
                               ? 100 * n * mrrr::eps_double * norm
                               : 100 * std::sqrt(n) * cfg.eps_out * norm;
  const double align_tol = 1 - 1e-6;
  std::cout << "max eigenvalue deviation: " << mrrr::format_real(cmp.max_value_deviation)
            << " (tolerance " << mrrr::format_real(value_tol) << ")\n"
            << "min vector alignment: " << mrrr::format_real(cmp.min_alignment) << " over "
            << cmp.aligned_checked << " well-separated eigenvectors (tolerance "
            << mrrr::format_real(align_tol) << ")\n";
  const bool pass = cmp.max_value_deviation <= value_tol && cmp.min_alignment >= align_tol;
  std::cout << (pass ? "agreement: yes" : "agreement: no") << '\n';
  return pass ? ok : 1;
}

int cmd_verify(const SolveArgs& a) {
  const auto input = mrrr::read_tridiagonal_file(a.input);
  if (input.size() > mrrr::oracle_limit)
    throw mrrr::DataError("oracle limit: verify accepts n <= " + std::to_string(mrrr::oracle_limit));
  const auto sel = selection_of(a, input.size());
  const auto cfg = config_of(a, input.size());
  return a.profile == "mixed32" ? verify_with<float>(input, sel, cfg) : verify_with<double>(input, sel, cfg);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_sweep(const std::string& profile, const std::string& sizes, const std::string& kinds,
              const std::string& out_path, std::size_t workers, std::uint64_t seed) {
  std::vector<std::size_t> ns;
  for (const auto& s : split_list(sizes)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 1) throw UsageError("bad size: " + s);
    ns.push_back(static_cast<std::size_t>(v));
  }
  std::vector<mrrr::MatrixKind> ks;
  for (const auto& k : split_list(kinds)) {
    const auto kind = mrrr::parse_kind(k);
    if (!kind) throw UsageError("unknown matrix kind: " + k);
    ks.push_back(*kind);
  }
  if (ns.empty() || ks.empty()) throw UsageError("sweep needs at least one size and one kind");
  std::vector<mrrr::QualityReport> reports;
  bool flagged = false;
  for (auto kind : ks) {
    for (std::size_t n : ns) {
      std::size_t m = n;
      if (kind == mrrr::MatrixKind::wilkinson && m % 2 == 0) ++m;
      const auto t = mrrr::generate(kind, m);
      SolveArgs a;
      a.profile = profile;
      a.workers = workers;
      a.seed = seed;
      const auto cfg = config_of(a, m);
      const std::string name(mrrr::kind_name(kind));
      auto rep = profile == "mixed32"
                     ? solve_and_report<float>(t, mrrr::Selection::all(), cfg, name, "")
                     : solve_and_report<double>(t, mrrr::Selection::all(), cfg, name, "");
      flagged = flagged || rep.uncertified_shift_count > 0;
      reports.push_back(std::move(rep));
    }
  }
  if (out_path.empty() || out_path == "-") {
    mrrr::write_csv(std::cout, reports);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    mrrr::write_csv(out, reports);
  }
  return flagged ? robustness : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric tridiagonal eigensolver (MRRR)"};
  app.require_subcommand(1);

  std::string gen_kind, gen_out;
  long long gen_n = 0;
  auto* gen = app.add_subcommand("generate", "write a test matrix");
  gen->add_option("kind", gen_kind, "uniform|geometric|one21|clement|wilkinson|legendre|laguerre|hermite")
      ->required();
  gen->add_option("n", gen_n, "matrix size")->required();
  gen->add_option("out", gen_out, "output file (default stdout)");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "compute eigenpairs and write a quality report");
  add_solve_flags(solve, solve_args);
  solve->add_option("--out", solve_args.out, "report JSON path (default stdout)");
  solve->add_option("--vectors-out", solve_args.vectors_out, "eigenvector dump, column-major text");

  SolveArgs verify_args;
  auto* verify = app.add_subcommand("verify", "compare against the dense Jacobi oracle (n <= 512)");
  add_solve_flags(verify, verify_args);

  std::string sw_profile = "std64", sw_sizes = "101,501,1001,2001", sw_out;
  std::string sw_kinds = "uniform,geometric,one21,clement,wilkinson,legendre,laguerre,hermite";
  std::size_t sw_workers = default_workers();
  std::uint64_t sw_seed = mrrr::SolverConfig{}.seed;
  auto* sweep = app.add_subcommand("sweep", "quality reports over generated matrices, as CSV");
  sweep->add_option("--profile", sw_profile)->check(CLI::IsMember({"std64", "mixed32"}));
  sweep->add_option("--sizes", sw_sizes, "comma separated sizes");
  sweep->add_option("--kinds", sw_kinds, "comma separated kinds");
  sweep->add_option("--out", sw_out, "CSV path (default stdout)");
  sweep->add_option("--workers", sw_workers)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sw_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*gen) return cmd_generate(gen_kind, gen_n, gen_out);
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_args);
    if (*sweep) return cmd_sweep(sw_profile, sw_sizes, sw_kinds, sw_out, sw_workers, sw_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const mrrr::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
  return usage;
}
