// Copyright 2026 The xorgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Random-game experiments. Trial t of a configuration uses seed + t, so
// results do not depend on the thread count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "xorgames/classical.hpp"
#include "xorgames/error.hpp"
#include "xorgames/families.hpp"
#include "xorgames/game.hpp"
#include "xorgames/pref_merp.hpp"
#include "xorgames/refutation.hpp"
#include "xorgames/word.hpp"

namespace xorgames {

struct ExperimentConfig {
  std::string name;
  int k = 3;
  std::vector<int> ns{30};
  std::vector<double> densities{3.3};  // C = m / n
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // cg_scaling only
  int bfs_max_n = 2;
  std::size_t bfs_max_len = 40;
  std::size_t bfs_state_cap = 2'000'000;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out) const {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Thread count: hardware concurrency, capped by XORGAMES_THREADS when set.
inline unsigned experiment_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("XORGAMES_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Runs fn(t) for t in [0, count) and returns the results in trial order.
template <typename T, typename Fn>
std::vector<T> run_trials(std::size_t count, Fn fn) {
  std::vector<T> out(count);
  const unsigned threads = std::min<std::size_t>(experiment_threads(), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t t = 0; t < count; ++t) out[t] = fn(t);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < count; t += threads) out[t] = fn(t);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

inline std::size_t clause_count(int n, double density) {
  if (density < 0) throw InvalidParameter("density must be non-negative");
  return static_cast<std::size_t>(std::ceil(density * n - 1e-9));
}

inline void validate(const ExperimentConfig& c) {
  if (c.trials < 1) throw InvalidParameter("trials must be >= 1");
  if (c.k < 1) throw InvalidParameter("k must be >= 1");
  for (int n : c.ns) {
    if (n < 1) throw InvalidParameter("n must be >= 1");
  }
  for (double d : c.densities) {
    if (!(d > 0)) throw InvalidParameter("densities must be positive");
  }
}

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace detail

/// Fraction of random games with a PREF, per (n, C).
inline CsvTable experiment_pref_threshold(const ExperimentConfig& c) {
  validate(c);
  CsvTable t{{"k", "n", "C", "m", "trials", "pref_count", "pref_fraction", "delta",
              "per_trial_bound", "wall_ms"},
             {}};
  for (int n : c.ns) {
    for (double density : c.densities) {
      const auto start = std::chrono::steady_clock::now();
      const std::size_t m = std::max<std::size_t>(1, clause_count(n, density));
      const auto hits = run_trials<int>(c.trials, [&](std::size_t trial) {
        return find_pref(random_game(c.k, n, m, c.seed + trial)).has_value() ? 1 : 0;
      });
      const long long count = std::accumulate(hits.begin(), hits.end(), 0LL);
      const long long delta = static_cast<long long>(m) - static_cast<long long>(c.k) * n;
      t.rows.push_back({std::to_string(c.k), std::to_string(n), format_real(density),
                        std::to_string(m), std::to_string(c.trials), std::to_string(count),
                        format_real(static_cast<double>(count) / c.trials), std::to_string(delta),
                        delta > 0 ? format_real(1.0 - std::ldexp(1.0, -static_cast<int>(std::min(delta, 1000LL))))
                                  : "",
                        format_real(detail::elapsed_ms(start))});
    }
  }
  return t;
}

/// Fraction of random games the classical players win outright, per (n, C).
inline CsvTable experiment_classical_sat(const ExperimentConfig& c) {
  validate(c);
  CsvTable t{{"k", "n", "C", "m", "trials", "sat_count", "sat_fraction", "wall_ms"}, {}};
  for (int n : c.ns) {
    for (double density : c.densities) {
      const auto start = std::chrono::steady_clock::now();
      const std::size_t m = std::max<std::size_t>(1, clause_count(n, density));
      const auto hits = run_trials<int>(c.trials, [&](std::size_t trial) {
        return classical_value1(random_game(c.k, n, m, c.seed + trial)).has_value() ? 1 : 0;
      });
      const long long count = std::accumulate(hits.begin(), hits.end(), 0LL);
      t.rows.push_back({std::to_string(c.k), std::to_string(n), format_real(density),
                        std::to_string(m), std::to_string(c.trials), std::to_string(count),
                        format_real(static_cast<double>(count) / c.trials),
                        format_real(detail::elapsed_ms(start))});
    }
  }
  return t;
}

/// Bipartite graph on ([n],3) and ([n],2) with one edge per query joining its
/// wire-3 and wire-2 letters. Returns the fraction of ([n],3) vertices in the
/// component that holds the most of them.
inline double wire3_coverage(int n, const std::vector<Clause>& clauses) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  std::vector<std::size_t> parent(2 * static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Clause& cl : clauses) {
    if (cl.query.size() < 3) throw InvalidParameter("wire3_coverage needs k >= 3");
    const std::size_t a = find(static_cast<std::size_t>(cl.query[2] - 1));
    const std::size_t b = find(static_cast<std::size_t>(n + cl.query[1] - 1));
    if (a != b) parent[a] = b;
  }
  std::vector<std::size_t> size(parent.size(), 0);
  for (int j = 0; j < n; ++j) ++size[find(static_cast<std::size_t>(j))];
  return static_cast<double>(*std::max_element(size.begin(), size.end())) / n;
}

inline std::vector<double> shift_gadget_coverages(int n, std::size_t m, std::size_t trials,
                                                  std::uint64_t seed) {
  return run_trials<double>(trials, [&](std::size_t trial) {
    if (m == 0) return wire3_coverage(n, {});
    return wire3_coverage(n, random_game(3, n, m, seed + trial).clauses());
  });
}

inline constexpr double kCoverageTarget = 0.95;

inline CsvTable experiment_shift_gadget_graph(const ExperimentConfig& c) {
  validate(c);
  CsvTable t{{"n", "C", "m", "trials", "mean_coverage", "min_coverage", "trials_at_least_0.95",
              "wall_ms"},
             {}};
  for (int n : c.ns) {
    for (double density : c.densities) {
      const auto start = std::chrono::steady_clock::now();
      const std::size_t m = clause_count(n, density);
      const auto cov = shift_gadget_coverages(n, m, c.trials, c.seed);
      const double mean = std::accumulate(cov.begin(), cov.end(), 0.0) / cov.size();
      const auto good = std::count_if(cov.begin(), cov.end(),
                                      [](double v) { return v >= kCoverageTarget; });
      t.rows.push_back({std::to_string(n), format_real(density), std::to_string(m),
                        std::to_string(c.trials), format_real(mean),
                        format_real(*std::min_element(cov.begin(), cov.end())),
                        std::to_string(good), format_real(detail::elapsed_ms(start))});
    }
  }
  return t;
}

struct CgScalingRow {
  int n = 0;
  std::size_t m = 0;
  std::size_t pref_l1 = 0;
  std::size_t built_length = 0;
  double bound = 0.0;
  BfsResult bfs;
  bool bfs_run = false;
  double ratio = 0.0;  // built / (k |z|_1 (log2 |z|_1 + 1))
  double wall_ms = 0.0;
};

inline CgScalingRow cg_scaling_row(int n, const ExperimentConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  const Game g = capped_ghz(n);
  CgScalingRow row;
  row.n = n;
  row.m = g.m();
  const auto pref = find_pref(g);
  if (!pref) throw std::logic_error("capped GHZ without a PREF");
  BigInt l1 = 0;
  for (const BigInt& v : pref->z) l1 += boost::multiprecision::abs(v);
  row.pref_l1 = l1.convert_to<std::size_t>();
  const RefutationCertificate cert = build_refutation_symmetric(g, pref->z, "cg" + std::to_string(n));
  row.built_length = cert.indices.size();
  row.bound = value_upper_bound_from_refutation(g.m(), row.built_length);
  const double zl = static_cast<double>(row.pref_l1);
  row.ratio = row.built_length / (g.k() * zl * (std::log2(zl) + 1.0));
  if (n <= c.bfs_max_n) {
    row.bfs = min_refutation_bfs(g, c.bfs_max_len, c.bfs_state_cap);
    row.bfs_run = true;
  }
  row.wall_ms = detail::elapsed_ms(start);
  return row;
}

inline CsvTable experiment_cg_scaling(const ExperimentConfig& c) {
  validate(c);
  CsvTable t{{"n", "m", "pref_l1", "lower_bound_2^(n+1)-2", "built_length", "value_bound",
              "bfs_min_length", "ratio", "wall_ms"},
             {}};
  for (int n : c.ns) {
    if (n < 2 || n > 12) throw InvalidParameter("cg_scaling supports 2 <= n <= 12");
    const CgScalingRow r = cg_scaling_row(n, c);
    std::string bfs;
    if (r.bfs_run) {
      switch (r.bfs.status) {
        case BfsStatus::kFound: bfs = std::to_string(r.bfs.indices.size()); break;
        case BfsStatus::kNotFoundWithinLength: bfs = ">" + std::to_string(c.bfs_max_len); break;
        case BfsStatus::kStateCapExceeded: bfs = "state_cap"; break;
      }
    }
    t.rows.push_back({std::to_string(n), std::to_string(r.m), std::to_string(r.pref_l1),
                      std::to_string((std::size_t{1} << (n + 1)) - 2),
                      std::to_string(r.built_length), format_real(r.bound), bfs,
                      format_real(r.ratio), format_real(r.wall_ms)});
  }
  return t;
}

inline CsvTable run_experiment(const ExperimentConfig& c) {
  if (c.name == "pref_threshold") return experiment_pref_threshold(c);
  if (c.name == "classical_sat") return experiment_classical_sat(c);
  if (c.name == "shift_gadget_graph") return experiment_shift_gadget_graph(c);
  if (c.name == "cg_scaling") return experiment_cg_scaling(c);
  throw InvalidParameter("unknown experiment '" + c.name + "'");
}

}  // namespace xorgames
