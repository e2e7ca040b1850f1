#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrrr/config.hpp"
#include "mrrr/eigenvector.hpp"
#include "mrrr/profile.hpp"
#include "mrrr/representation.hpp"
#include "mrrr/rrr.hpp"
#include "mrrr/sturm.hpp"
#include "mrrr/task_pool.hpp"
#include "mrrr/tridiagonal.hpp"

namespace mrrr {

struct Selection {
  enum class Kind { all, by_index, by_value };
  Kind kind = Kind::all;
  std::size_t il = 0;  // 1-based, inclusive
  std::size_t iu = 0;
  double vl = 0;  // half-open [vl, vu)
  double vu = 0;

  static Selection all() { return {}; }
  static Selection by_index(std::size_t il, std::size_t iu) {
    return {Kind::by_index, il, iu, 0, 0};
  }
  static Selection by_value(double vl, double vu) { return {Kind::by_value, 0, 0, vl, vu}; }
};

struct SolveStats {
  std::size_t d_max = 0;
  std::size_t largest_cluster = 0;  // largest root-level group
  std::size_t shift_count = 0;
  std::size_t uncertified_count = 0;
  std::size_t blocks = 0;
  std::uint64_t eigenvalue_ops = 0;  // flop proxy: kernel sweeps times block size
  std::uint64_t eigenvector_ops = 0;
  std::size_t rqi_iterations = 0;
  std::size_t rqi_max_iterations = 0;
  std::size_t singletons_over_6_iterations = 0;
  std::size_t bisection_fallbacks = 0;
  std::size_t bracket_repairs = 0;
  std::size_t s_tasks = 0;
  std::size_t c_tasks = 0;
  std::size_t r_tasks = 0;
  std::size_t peak_live_representations = 0;
  double t_values_s = 0;
  double t_vectors_s = 0;
  std::vector<double> busy_seconds;  // per worker, both phases
};

template <std::floating_point Out>
struct EigenSystem {
  std::size_t n = 0;
  std::vector<std::size_t> indices;  // global 1-based indices, ascending
  std::vector<Out> values;
  std::vector<Out> errors;
  std::vector<Out> vectors;  // column-major n x count(); empty in eigenvalue-only mode
  SolveStats stats;

  std::size_t count() const { return values.size(); }
  std::span<const Out> column(std::size_t j) const {
    return std::span<const Out>(vectors).subspan(j * n, n);
  }
};

namespace detail {

using Work = double;

struct BlockPlan {
  std::size_t offset = 0;
  Tridiagonal<Work> tridiag;
  std::size_t lo = 0;  // requested local range [lo, hi), 0-based
  std::size_t hi = 0;
  std::size_t col_base = 0;
  Root<Work> root;
  std::vector<Interval<Work>> initial;  // intervals for [lo, hi) in root coordinates
};

struct Node {
  Representation<Work> rep;
  std::size_t first = 0;  // block-local index of ivals[0]
  std::vector<Interval<Work>> ivals;
  Work left_gap = std::numeric_limits<Work>::infinity();
  Work right_gap = std::numeric_limits<Work>::infinity();
  std::atomic<std::size_t> dependents{0};
  std::atomic<std::size_t> refinements_left{0};
};

inline void atomic_max(std::atomic<std::size_t>& a, std::size_t v) {
  std::size_t cur = a.load();
  while (cur < v && !a.compare_exchange_weak(cur, v)) {
  }
}

template <std::floating_point Out>
class TreeRunner {
 public:
  TreeRunner(const SolverConfig& cfg, std::size_t n, std::size_t total_pairs,
             std::vector<Out>& values, std::vector<Out>& errors, std::vector<Out>& vectors,
             Work scale)
      : cfg_(cfg),
        n_(n),
        values_(values),
        errors_(errors),
        vectors_(vectors),
        scale_(scale),
        nleft_(total_pairs) {}

  void start(TaskPool& pool, const BlockPlan& block, std::shared_ptr<Node> root) {
    pool_ = &pool;
    live_.fetch_add(1);
    atomic_max(peak_live_, live_.load());
    const auto part = classify<Work>(root->ivals, static_cast<Work>(cfg_.gaptol));
    emit(block, std::move(root), part);
  }

  void collect(SolveStats& st) const {
    st.d_max = std::max(st.d_max, d_max_.load());
    st.shift_count += shifts_.load();
    st.uncertified_count += uncertified_.load();
    st.eigenvector_ops += ops_.load();
    st.rqi_iterations += rqi_iters_.load();
    st.rqi_max_iterations = std::max(st.rqi_max_iterations, rqi_max_.load());
    st.singletons_over_6_iterations += rqi_over6_.load();
    st.bisection_fallbacks += fallbacks_.load();
    st.bracket_repairs += repairs_.load();
    st.s_tasks += s_tasks_.load();
    st.c_tasks += c_tasks_.load();
    st.r_tasks += r_tasks_.load();
    st.peak_live_representations = std::max(st.peak_live_representations, peak_live_.load());
  }

 private:
  std::size_t s_max() const {
    const std::size_t left = nleft_.load();
    const std::size_t w = cfg_.worker_count;
    return std::max<std::size_t>(1, (left + w - 1) / w);
  }

  bool requested(const BlockPlan& block, std::size_t local) const {
    return local >= block.lo && local < block.hi;
  }

  bool inline_children(const Node& node) const { return cfg_.depth_first && node.rep.depth >= 1; }

  void release(Node& node) {
    if (node.dependents.fetch_sub(1) == 1) {
      node.rep = Representation<Work>();
      node.ivals.clear();
      node.ivals.shrink_to_fit();
      live_.fetch_sub(1);
    }
  }

  struct Pending {
    bool cluster;
    std::size_t first;
    std::size_t last;
  };

  void emit(const BlockPlan& block, std::shared_ptr<Node> node, const Partition& part) {
    std::vector<Pending> tasks;
    const std::size_t cap = s_max();
    const bool too_deep = node->rep.depth >= cfg_.max_tree_depth;
    bool open = false;
    auto close = [&] { open = false; };
    for (const auto& g : part.groups) {
      const bool wanted_any = node->first + g.last >= block.lo && node->first + g.first < block.hi;
      if (!wanted_any) {
        close();
        continue;
      }
      if (g.kind == GroupKind::cluster && !too_deep) {
        close();
        tasks.push_back({true, g.first, g.last});
        continue;
      }
      for (std::size_t j = g.first; j <= g.last; ++j) {
        if (!requested(block, node->first + j)) {
          close();
          continue;
        }
        if (open && tasks.back().last + 1 == j && tasks.back().last - tasks.back().first + 1 < cap) {
          tasks.back().last = j;
        } else {
          tasks.push_back({false, j, j});
          open = true;
        }
      }
      if (g.kind == GroupKind::cluster) {
        uncertified_.fetch_add(1);
        close();
      }
    }
    if (tasks.empty()) {
      node->dependents.store(1);
      release(*node);
      return;
    }
    node->dependents.store(tasks.size());
    const bool inl = inline_children(*node);
    for (const auto& t : tasks) {
      if (t.cluster) {
        auto job = [this, &block, node, t] { run_c(block, node, t.first, t.last); };
        if (inl)
          job();
        else
          pool_->submit(Priority::low, job);
      } else {
        auto job = [this, &block, node, t] { run_s(block, *node, t.first, t.last); };
        if (inl)
          job();
        else
          pool_->submit(Priority::medium, job);
      }
    }
  }

  Work gap_at(const Node& node, const BlockPlan& block, std::size_t j) const {
    const auto& iv = node.ivals;
    const Work left = j > 0 ? iv[j].lo - iv[j - 1].hi : node.left_gap;
    const Work right = j + 1 < iv.size() ? iv[j + 1].lo - iv[j].hi : node.right_gap;
    return std::clamp(std::min(left, right), Work(0), block.root.spdiam);
  }

  void run_s(const BlockPlan& block, Node& node, std::size_t first, std::size_t last) {
    s_tasks_.fetch_add(1);
    GetvecWorkspace<Work> ws;
    const std::size_t nb = block.tridiag.size();
    std::uint64_t ops = 0;
    for (std::size_t j = first; j <= last; ++j) {
      const std::size_t local = node.first + j;
      auto pair = rqi_singleton<Work>(node.rep, local + 1, node.ivals[j], cfg_,
                                      gap_at(node, block, j), ws);
      ops += pair.ops;
      rqi_iters_.fetch_add(pair.rqi_iters);
      atomic_max(rqi_max_, pair.rqi_iters);
      if (pair.rqi_iters > 6) rqi_over6_.fetch_add(1);
      if (pair.used_bisection) fallbacks_.fetch_add(1);
      const std::size_t col = block.col_base + (local - block.lo);
      values_[col] = static_cast<Out>(pair.value / scale_);
      errors_[col] = static_cast<Out>(pair.error / scale_);
      const auto converted = convert_out<Out, Work>(pair.vector);
      std::copy(converted.begin(), converted.end(),
                vectors_.begin() + static_cast<std::ptrdiff_t>(col * n_ + block.offset));
    }
    ops_.fetch_add(ops * nb);
    atomic_max(d_max_, node.rep.depth);
    nleft_.fetch_sub(last - first + 1);
    release(node);
  }

  void run_c(const BlockPlan& block, std::shared_ptr<Node> parent, std::size_t first,
             std::size_t last) {
    c_tasks_.fetch_add(1);
    const std::size_t nb = block.tridiag.size();
    const Work growth_limit = static_cast<Work>(cfg_.growth_threshold);
    auto sel = select_shift<Work>(parent->rep, first, last, parent->ivals, parent->first + 1,
                                  block.root.spdiam, cfg_, growth_limit);
    shifts_.fetch_add(1);
    if (!sel.certified) uncertified_.fetch_add(1);
    ops_.fetch_add(sel.ops * nb);

    auto child = std::make_shared<Node>();
    child->rep = std::move(sel.rep);
    child->first = parent->first + first;
    const auto& piv = parent->ivals;
    child->left_gap = first > 0 ? piv[first].lo - piv[first - 1].hi : parent->left_gap;
    child->right_gap = last + 1 < piv.size() ? piv[last + 1].lo - piv[last].hi : parent->right_gap;
    std::vector<Interval<Work>> source(piv.begin() + static_cast<std::ptrdiff_t>(first),
                                       piv.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    source.front() = sel.first_refined;
    source.back() = sel.last_refined;
    const Work tau = sel.tau;
    release(*parent);
    parent.reset();
    live_.fetch_add(1);
    atomic_max(peak_live_, live_.load());

    const std::size_t size = source.size();
    child->ivals.resize(size);
    const std::size_t cap = s_max();
    if (!cfg_.depth_first && cfg_.worker_count > 1 && size > cap &&
        size >= cfg_.min_rtask_cluster) {
      const std::size_t chunks = (size + cap - 1) / cap;
      auto shared_source = std::make_shared<std::vector<Interval<Work>>>(std::move(source));
      child->refinements_left.store(chunks);
      for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t a = c * cap;
        const std::size_t b = std::min(size, a + cap);
        pool_->submit(Priority::high, [this, &block, child, shared_source, tau, a, b] {
          r_tasks_.fetch_add(1);
          refine_slice(block, *child, *shared_source, tau, a, b);
          if (child->refinements_left.fetch_sub(1) == 1) finish_cluster(block, child);
        });
      }
      return;
    }
    refine_slice(block, *child, source, tau, 0, size);
    finish_cluster(block, child);
  }

  void refine_slice(const BlockPlan& block, Node& child, const std::vector<Interval<Work>>& source,
                    Work tau, std::size_t a, std::size_t b) {
    auto res = refine_all<Work>(child.rep, tau, child.first + a + 1,
                                std::span<const Interval<Work>>(source).subspan(a, b - a),
                                static_cast<Work>(cfg_.bisect_rtol_classify));
    std::copy(res.intervals.begin(), res.intervals.end(),
              child.ivals.begin() + static_cast<std::ptrdiff_t>(a));
    repairs_.fetch_add(res.bracket_repairs);
    ops_.fetch_add(res.negcounts * block.tridiag.size());
  }

  void finish_cluster(const BlockPlan& block, std::shared_ptr<Node> child) {
    const auto part = classify<Work>(child->ivals, static_cast<Work>(cfg_.gaptol));
    emit(block, std::move(child), part);
  }

  const SolverConfig& cfg_;
  std::size_t n_;
  std::vector<Out>& values_;
  std::vector<Out>& errors_;
  std::vector<Out>& vectors_;
  Work scale_;
  TaskPool* pool_ = nullptr;
  std::atomic<std::size_t> nleft_;
  std::atomic<std::size_t> d_max_{0}, shifts_{0}, uncertified_{0}, rqi_iters_{0}, rqi_max_{0},
      rqi_over6_{0}, fallbacks_{0}, repairs_{0}, s_tasks_{0}, c_tasks_{0}, r_tasks_{0}, live_{0},
      peak_live_{0};
  std::atomic<std::uint64_t> ops_{0};
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::size_t offset) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(offset) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Requested local ranges per block for a global index selection. Eigenvalues that
// cannot be told apart at full accuracy are assigned in block order.
inline void map_index_selection(std::vector<BlockPlan>& blocks, std::size_t il, std::size_t iu,
                                const SolverConfig& cfg, std::uint64_t& ops) {
  Interval<Work> span{std::numeric_limits<Work>::infinity(), -std::numeric_limits<Work>::infinity()};
  for (const auto& b : blocks) {
    const auto g = gershgorin(b.tridiag);
    span.lo = std::min(span.lo, g.lo);
    span.hi = std::max(span.hi, g.hi);
  }
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.tridiag.size();
  auto global = [&](Work x) {
    std::size_t c = 0;
    for (const auto& b : blocks) c += negcount_t(b.tridiag, x);
    return c;
  };
  auto locate = [&](std::size_t k) {
    auto tr = bisect_traced<Work>(global, k, span, static_cast<Work>(cfg.bisect_rtol_full),
                                  bisection_atol<Work>());
    ops += tr.evaluations * n;
    return tr.result;
  };
  auto assign = [&](Interval<Work> iv, std::size_t below_target, bool upper) {
    std::vector<std::size_t> lo(blocks.size()), amb(blocks.size());
    std::size_t sum = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      lo[b] = negcount_t(blocks[b].tridiag, iv.lo);
      amb[b] = negcount_t(blocks[b].tridiag, iv.hi) - lo[b];
      sum += lo[b];
    }
    ops += 2 * n;
    std::size_t need = below_target > sum ? below_target - sum : 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::size_t take = std::min(need, amb[b]);
      need -= take;
      if (upper)
        blocks[b].hi = lo[b] + take;
      else
        blocks[b].lo = lo[b] + take;
    }
  };
  assign(locate(il), il - 1, false);
  assign(locate(iu), iu, true);
  for (auto& b : blocks) b.hi = std::max(b.hi, b.lo);
}

}  // namespace detail

// Eigenpairs of t for the selection. Arithmetic runs in double; results are returned in
// the input precision.
template <std::floating_point Out>
EigenSystem<Out> solve(const Tridiagonal<Out>& t, const Selection& selection,
                       const SolverConfig& cfg) {
  using detail::Work;
  using Clock = std::chrono::steady_clock;
  cfg.validate();
  const std::size_t n = t.size();
  if (selection.kind == Selection::Kind::by_index &&
      !(selection.il >= 1 && selection.il <= selection.iu && selection.iu <= n))
    throw std::invalid_argument("index selection must satisfy 1 <= il <= iu <= n");
  if (selection.kind == Selection::Kind::by_value &&
      !(selection.vl < selection.vu && std::isfinite(selection.vl) && std::isfinite(selection.vu)))
    throw std::invalid_argument("value selection must satisfy vl < vu");

  EigenSystem<Out> es;
  es.n = n;
  SolveStats& st = es.stats;
  st.busy_seconds.assign(cfg.worker_count, 0.0);
  const auto t0 = Clock::now();

  const auto scaled = scale_for_solve(t.template cast<Work>());
  const Work factor = scaled.factor;
  std::vector<detail::BlockPlan> blocks;
  for (auto& b : split(scaled.tridiag, cfg)) {
    detail::BlockPlan plan;
    plan.offset = b.offset;
    plan.tridiag = std::move(b.tridiag);
    plan.hi = plan.tridiag.size();
    blocks.push_back(std::move(plan));
  }
  st.blocks = blocks.size();

  std::uint64_t value_ops = 0;
  if (selection.kind == Selection::Kind::by_index) {
    detail::map_index_selection(blocks, selection.il, selection.iu, cfg, value_ops);
  } else if (selection.kind == Selection::Kind::by_value) {
    for (auto& b : blocks) {
      b.lo = negcount_t(b.tridiag, static_cast<Work>(selection.vl * factor));
      b.hi = negcount_t(b.tridiag, static_cast<Work>(selection.vu * factor));
      value_ops += 2 * b.tridiag.size();
    }
  }

  std::size_t total = 0;
  std::size_t below = 0;
  for (auto& b : blocks) {
    b.col_base = total;
    total += b.hi - b.lo;
    below += b.lo;
  }
  es.indices.resize(total);
  std::iota(es.indices.begin(), es.indices.end(), below + 1);
  std::vector<Out> values(total), errors(total);
  std::vector<Out> vectors;
  if (cfg.compute_vectors) vectors.assign(total * n, Out(0));

  // Phase A: roots and eigenvalue approximations.
  const Work rtol_a = static_cast<Work>(cfg.compute_vectors ? cfg.bisect_rtol_classify
                                                            : cfg.bisect_rtol_full);
  const Work atol = bisection_atol<Work>();
  std::vector<std::size_t> tree_pairs;
  std::size_t tree_total = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    auto& b = blocks[bi];
    if (b.hi == b.lo) continue;
    if (b.tridiag.size() == 1) {
      values[b.col_base] = static_cast<Out>(b.tridiag.alpha()[0] / factor);
      errors[b.col_base] = 0;
      if (cfg.compute_vectors) vectors[b.col_base * n + b.offset] = Out(1);
      st.largest_cluster = std::max<std::size_t>(st.largest_cluster, 1);
      continue;
    }
    std::mt19937_64 rng(detail::mix_seed(cfg.seed, b.offset));
    b.root = make_root(b.tridiag, cfg, rng);
    b.initial.resize(b.hi - b.lo);
    tree_pairs.push_back(bi);
    tree_total += b.hi - b.lo;
  }
  {
    TaskPool pool(cfg.worker_count);
    std::atomic<std::uint64_t> ops{0};
    const std::size_t chunk =
        std::max<std::size_t>(1, (tree_total + 4 * cfg.worker_count - 1) / (4 * cfg.worker_count));
    for (std::size_t bi : tree_pairs) {
      auto& b = blocks[bi];
      const std::size_t count = b.hi - b.lo;
      for (std::size_t a = 0; a < count; a += chunk) {
        const std::size_t e = std::min(count, a + chunk);
        pool.submit(Priority::high, [&b, &ops, a, e, rtol_a, atol] {
          const auto g = gershgorin(b.tridiag);
          Interval<Work> start{g.lo - b.root.mu, g.hi - b.root.mu};
          auto counter = [&b](Work x) { return negcount_ldl(b.root.rep, x); };
          std::uint64_t evals = 0;
          for (std::size_t j = a; j < e; ++j) {
            auto tr = bisect_traced<Work>(counter, b.lo + j + 1, start, rtol_a, atol);
            evals += tr.evaluations;
            b.initial[j] = tr.result;
            start.lo = tr.result.lo;
          }
          ops.fetch_add(evals * b.tridiag.size());
        });
      }
    }
    pool.run();
    value_ops += ops.load();
    for (std::size_t w = 0; w < cfg.worker_count; ++w) st.busy_seconds[w] += pool.busy_seconds()[w];
  }

  // Extend each block's working range to whole clusters and attach outer gaps.
  std::vector<std::shared_ptr<detail::Node>> roots(blocks.size());
  for (std::size_t bi : tree_pairs) {
    auto& b = blocks[bi];
    const std::size_t nb = b.tridiag.size();
    const Work gaptol = static_cast<Work>(cfg.gaptol);
    auto counter = [&b](Work x) { return negcount_ldl(b.root.rep, x); };
    const auto g = gershgorin(b.tridiag);
    const Interval<Work> whole{g.lo - b.root.mu, g.hi - b.root.mu};
    auto approx = [&](std::size_t local) {
      auto tr = bisect_traced<Work>(counter, local + 1, whole, rtol_a, atol);
      value_ops += tr.evaluations * nb;
      return tr.result;
    };
    auto node = std::make_shared<detail::Node>();
    std::deque<Interval<Work>> iv(b.initial.begin(), b.initial.end());
    std::size_t wlo = b.lo;
    std::size_t whi = b.hi;
    while (wlo > 0) {
      const auto prev = approx(wlo - 1);
      if (reldist(prev, iv.front()) < gaptol) {
        iv.push_front(prev);
        --wlo;
      } else {
        node->left_gap = iv.front().lo - prev.hi;
        break;
      }
    }
    while (whi < nb) {
      const auto next = approx(whi);
      if (reldist(iv.back(), next) < gaptol) {
        iv.push_back(next);
        ++whi;
      } else {
        node->right_gap = next.lo - iv.back().hi;
        break;
      }
    }
    node->rep = b.root.rep;
    node->first = wlo;
    node->ivals.assign(iv.begin(), iv.end());
    const auto part = classify<Work>(node->ivals, gaptol);
    st.largest_cluster = std::max(st.largest_cluster, part.largest());
    roots[bi] = std::move(node);
  }
  const auto t1 = Clock::now();
  st.eigenvalue_ops = value_ops;
  st.t_values_s = std::chrono::duration<double>(t1 - t0).count();

  if (!cfg.compute_vectors) {
    for (std::size_t bi : tree_pairs) {
      const auto& b = blocks[bi];
      for (std::size_t j = 0; j < b.hi - b.lo; ++j) {
        values[b.col_base + j] = static_cast<Out>((b.initial[j].mid() + b.root.mu) / factor);
        errors[b.col_base + j] = static_cast<Out>(b.initial[j].half_width() / factor);
      }
    }
  } else {
    // Phase B: representation tree and eigenvectors.
    detail::TreeRunner<Out> runner(cfg, n, tree_total, values, errors, vectors, factor);
    TaskPool pool(cfg.worker_count);
    for (std::size_t bi : tree_pairs) runner.start(pool, blocks[bi], roots[bi]);
    roots.clear();
    pool.run();
    runner.collect(st);
    for (std::size_t w = 0; w < cfg.worker_count; ++w) st.busy_seconds[w] += pool.busy_seconds()[w];
  }
  st.t_vectors_s = std::chrono::duration<double>(Clock::now() - t1).count();

  // Global ascending order across blocks.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  es.values.resize(total);
  es.errors.resize(total);
  for (std::size_t j = 0; j < total; ++j) {
    es.values[j] = values[order[j]];
    es.errors[j] = errors[order[j]];
  }
  if (cfg.compute_vectors) {
    std::vector<bool> done(total, false);
    std::vector<Out> tmp(n);
    for (std::size_t s = 0; s < total; ++s) {
      if (done[s] || order[s] == s) continue;
      // cycle: position j receives column order[j]
      auto col = [&](std::size_t j) { return vectors.begin() + static_cast<std::ptrdiff_t>(j * n); };
      std::copy(col(s), col(s) + static_cast<std::ptrdiff_t>(n), tmp.begin());
      std::size_t j = s;
      while (order[j] != s) {
        std::copy(col(order[j]), col(order[j]) + static_cast<std::ptrdiff_t>(n), col(j));
        done[j] = true;
        j = order[j];
      }
      std::copy(tmp.begin(), tmp.end(), col(j));
      done[j] = true;
    }
    es.vectors = std::move(vectors);
  }
  return es;
}

}  // namespace mrrr
