#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "coloring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rainbow.hpp"
#include "rational.hpp"

namespace antiramsey {

struct SearchResult {
  std::uint64_t value = 0;
  bool exact = false;
  EdgeColoring witness;
  Rational fraction;
  std::uint64_t evaluations = 0;
};

struct ExactOptions {
  // Maximum number of complete colorings the enumeration may visit.
  std::uint64_t budget = 100'000'000;
  // Enumerate one coloring per orbit of color relabelings.
  bool color_symmetry_pruning = true;
};

/// Number of leaves the exhaustive enumeration visits: r^E without pruning,
/// and the number of restricted growth strings of length E using at most r
/// symbols (sum of Stirling numbers S(E, j), j <= r) with pruning.
inline BigInt exhaustive_leaf_count(int n, int r, bool pruning) {
  const auto edges = static_cast<std::int64_t>(EdgeColoring::pair_count(n));
  if (!pruning) return ipow(r, static_cast<std::uint64_t>(edges));
  const int top = static_cast<int>(std::min<std::int64_t>(r, edges));
  // stirling[j] = S(i, j) as i grows.
  std::vector<BigInt> stirling(top + 1, 0);
  stirling[0] = 1;
  for (std::int64_t i = 1; i <= edges; ++i) {
    for (int j = top; j >= 1; --j) stirling[j] = stirling[j] * j + stirling[j - 1];
    stirling[0] = 0;
  }
  BigInt total = 0;
  for (int j = 0; j <= top; ++j) total += stirling[j];
  return total;
}

namespace detail {

// Copies of H in K_n as lists of global edge indices, bucketed by their
// largest edge so a depth-first coloring can score a copy the moment its last
// edge is colored.
struct CopiesByLastEdge {
  std::vector<std::uint32_t> offsets;  // per edge, into copies
  std::vector<std::uint32_t> edges;    // e entries per copy
  int per_copy = 0;

  CopiesByLastEdge(const Graph& h, int n) {
    const EmbeddingPatterns patterns(h);
    const EdgeColoring shape(n, 1);
    per_copy = h.size();
    const int m = h.order();
    std::vector<std::vector<std::uint32_t>> buckets(shape.edge_count());
    std::vector<int> chosen(m);
    std::vector<std::uint32_t> global(patterns.local_pairs());
    auto descend = [&](auto&& self, int depth, int next) -> void {
      if (depth == m) {
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j)
            global[patterns.local_index(i, j)] = static_cast<std::uint32_t>(shape.index(chosen[i], chosen[j]));
        for (std::size_t p = 0; p < patterns.pattern_count(); ++p) {
          std::uint32_t last = 0;
          for (auto s : patterns.pattern(p)) last = std::max(last, global[s]);
          for (auto s : patterns.pattern(p)) buckets[last].push_back(global[s]);
        }
        return;
      }
      for (int w = next; w <= n - (m - depth); ++w) {
        chosen[depth] = w;
        self(self, depth + 1, w + 1);
      }
    };
    descend(descend, 0, 0);
    offsets.push_back(0);
    for (const auto& b : buckets) {
      edges.insert(edges.end(), b.begin(), b.end());
      offsets.push_back(static_cast<std::uint32_t>(edges.size()));
    }
  }
};

}  // namespace detail

/// rb_r(H; n) by exhaustive enumeration of r-colorings of K_n.
///
/// Edges are colored in pair order. With pruning the first edge is fixed to
/// color 0 and each later edge may only introduce the next unused color, one
/// representative per color-relabeling orbit. The witness is the first
/// maximizing coloring in this order.
inline SearchResult exact_rb(const Graph& h, int n, int r, const ExactOptions& options = {}) {
  if (n < h.order()) fail(ErrorKind::domain, "n must be >= the pattern order");
  if (n < 2) fail(ErrorKind::domain, "n must be >= 2");
  if (r < 1) fail(ErrorKind::domain, "r must be >= 1");
  const BigInt leaves = exhaustive_leaf_count(n, r, options.color_symmetry_pruning);
  if (leaves > options.budget)
    fail(ErrorKind::budget, "exhaustive search over " + leaves.str() + " colorings exceeds the budget of " +
                                std::to_string(options.budget));

  const detail::CopiesByLastEdge copies(h, n);
  const int edge_total = static_cast<int>(EdgeColoring::pair_count(n));
  std::vector<Color> current(edge_total, 0);
  std::vector<Color> best_colors;
  std::int64_t best = -1;
  std::uint64_t visited = 0;
  const bool wide = r > 64;
  std::vector<std::uint64_t> stamp(wide ? r : 0, 0);
  std::uint64_t epoch = 0;

  auto rainbow = [&](const std::uint32_t* copy) {
    if (!wide) {
      std::uint64_t seen = 0;
      for (int i = 0; i < copies.per_copy; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << current[copy[i]];
        if (seen & bit) return false;
        seen |= bit;
      }
      return true;
    }
    ++epoch;
    for (int i = 0; i < copies.per_copy; ++i) {
      if (stamp[current[copy[i]]] == epoch) return false;
      stamp[current[copy[i]]] = epoch;
    }
    return true;
  };

  auto descend = [&](auto&& self, int edge, int used, std::int64_t score) -> void {
    if (edge == edge_total) {
      ++visited;
      if (score > best) {
        best = score;
        best_colors = current;
      }
      return;
    }
    const int limit = options.color_symmetry_pruning ? std::min(r, used + 1) : r;
    for (int color = 0; color < limit; ++color) {
      current[edge] = static_cast<Color>(color);
      std::int64_t gained = 0;
      const auto begin = copies.offsets[edge], end = copies.offsets[edge + 1];
      if (copies.per_copy == 0) {
        gained = end - begin;
      } else {
        for (auto at = begin; at < end; at += copies.per_copy) gained += rainbow(&copies.edges[at]);
      }
      self(self, edge + 1, std::max(used, color + 1), score + gained);
    }
  };
  descend(descend, 0, 0, 0);

  SearchResult out;
  out.value = static_cast<std::uint64_t>(best);
  out.exact = true;
  out.witness = EdgeColoring(n, r, std::move(best_colors));
  out.fraction = make_rational(BigInt(out.value), copies_in_complete(h, n));
  out.evaluations = visited;
  return out;
}

enum class AcceptanceRule { greedy, annealing };

struct SearchParams {
  std::uint64_t seed = 1;
  int restarts = 4;
  std::uint64_t iterations = 200'000;
  AcceptanceRule rule = AcceptanceRule::annealing;
  double initial_temperature = 2.0;
  // Temperature is multiplied by this after every iteration.
  double cooling = 0.99995;
  unsigned threads = 1;
};

inline void validate(const SearchParams& p) {
  if (p.restarts < 1) fail(ErrorKind::domain, "restarts must be positive");
  if (!(p.cooling > 0 && p.cooling < 1)) fail(ErrorKind::domain, "cooling factor must lie in (0, 1)");
  if (!(p.initial_temperature >= 0)) fail(ErrorKind::domain, "temperature must be >= 0");
}

namespace detail {

struct RestartOutcome {
  std::uint64_t value = 0;
  EdgeColoring witness;
  std::uint64_t evaluations = 0;
};

inline RestartOutcome run_restart(const RainbowCounter& counter, EdgeColoring start, const SearchParams& params,
                                  std::uint64_t sub_seed) {
  const int n = start.vertices();
  const int r = start.colors_available();
  std::mt19937_64 rng(mix_seed(sub_seed, 1));
  auto unit = [](std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; };

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  RestartOutcome out;
  auto current_value = static_cast<std::int64_t>(counter.count(start));
  out.value = static_cast<std::uint64_t>(current_value);
  out.witness = start;
  out.evaluations = 1;
  EdgeColoring& current = start;
  if (r < 2) return out;

  double temperature = params.initial_temperature;
  for (std::uint64_t it = 0; it < params.iterations; ++it) {
    if (params.rule == AcceptanceRule::greedy) {
      bool moved = false;
      for (std::size_t e = 0; e < pairs.size() && !moved; ++e) {
        for (int color = 0; color < r && !moved; ++color) {
          if (color == current.at(e)) continue;
          const auto delta = counter.recolor_delta(current, pairs[e].first, pairs[e].second, static_cast<Color>(color));
          ++out.evaluations;
          if (delta > 0) {
            current.set(e, static_cast<Color>(color));
            current_value += delta;
            moved = true;
          }
        }
      }
      if (!moved) break;
    } else {
      const auto e = static_cast<std::size_t>(uniform_below(rng, pairs.size()));
      auto color = static_cast<Color>(uniform_below(rng, r - 1));
      if (color >= current.at(e)) ++color;
      const auto delta = counter.recolor_delta(current, pairs[e].first, pairs[e].second, color);
      ++out.evaluations;
      const bool accept =
          delta >= 0 || (temperature > 0 && unit(rng) < std::exp(static_cast<double>(delta) / temperature));
      if (accept) {
        current.set(e, color);
        current_value += delta;
      }
      temperature *= params.cooling;
    }
    if (current_value > static_cast<std::int64_t>(out.value)) {
      out.value = static_cast<std::uint64_t>(current_value);
      out.witness = current;
    }
  }
  return out;
}

}  // namespace detail

/// Seeded stochastic local search for a lower bound on rb_r(H; n).
///
/// Moves recolor one edge; the change in rainbow count is evaluated from the
/// copies through that edge only. Restart i starts from `warm_start` when
/// given, else from random_coloring(n, r, mix_seed(seed, i)). Restarts may run
/// on separate threads; the merged result keeps the largest value, breaking
/// ties by the lexicographically smallest serialized witness.
inline SearchResult local_search(const Graph& h, int n, int r, const SearchParams& params,
                                 const std::optional<EdgeColoring>& warm_start = std::nullopt) {
  validate(params);
  if (n < h.order()) fail(ErrorKind::domain, "n must be >= the pattern order");
  if (warm_start && (warm_start->vertices() != n || warm_start->colors_available() > r))
    fail(ErrorKind::domain, "warm start must be a coloring of K_n with at most r colors");
  const RainbowCounter counter(h);

  std::vector<detail::RestartOutcome> outcomes(params.restarts);
  auto run = [&](int i) {
    const std::uint64_t sub_seed = mix_seed(params.seed, static_cast<std::uint64_t>(i));
    EdgeColoring start = warm_start ? EdgeColoring(n, r, warm_start->colors()) : random_coloring(n, r, sub_seed);
    outcomes[i] = detail::run_restart(counter, std::move(start), params, sub_seed);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(params.threads, static_cast<unsigned>(params.restarts)));
  if (threads == 1) {
    for (int i = 0; i < params.restarts; ++i) run(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < params.restarts; i += static_cast<int>(threads)) run(i);
      });
  }

  SearchResult out;
  std::string best_serial;
  bool have = false;
  for (auto& o : outcomes) {
    out.evaluations += o.evaluations;
    if (!have || o.value > out.value) {
      out.value = o.value;
      out.witness = o.witness;
      best_serial = serialize_coloring(o.witness);
      have = true;
    } else if (o.value == out.value) {
      auto serial = serialize_coloring(o.witness);
      if (serial < best_serial) {
        best_serial = std::move(serial);
        out.witness = o.witness;
      }
    }
  }
  out.exact = false;
  out.fraction = make_rational(BigInt(out.value), copies_in_complete(h, n));
  return out;
}

enum class TableMode { exact, search };

struct ConvergenceRow {
  int n = 0;
  SearchResult result;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool all_exact = true;
  // Empty when some row is heuristic and the check was skipped.
  std::optional<bool> monotone;
};

/// Rows for n_min..n_max. In exact mode the normalized sequence must be
/// non-increasing and (n-m) rb(n) <= n rb(n-1) between consecutive rows.
inline ConvergenceTable convergence_table(const Graph& h, int r, int n_min, int n_max, TableMode mode,
                                          const ExactOptions& exact_options = {}, const SearchParams& params = {}) {
  if (n_min > n_max) fail(ErrorKind::domain, "empty n range");
  ConvergenceTable table;
  for (int n = std::max(n_min, 2); n <= n_max; ++n) {
    if (n < h.order()) fail(ErrorKind::domain, "n range starts below the pattern order");
    ConvergenceRow row{n, mode == TableMode::exact ? exact_rb(h, n, r, exact_options) : local_search(h, n, r, params)};
    table.all_exact = table.all_exact && row.result.exact;
    table.rows.push_back(std::move(row));
  }
  if (table.all_exact) {
    std::vector<RbValue> values;
    bool ok = true;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      values.push_back({table.rows[i].n, BigInt(table.rows[i].result.value)});
      if (i > 0 && table.rows[i].result.fraction > table.rows[i - 1].result.fraction) ok = false;
    }
    table.monotone = ok && monotonicity_check(h, values);
  }
  return table;
}

}  // namespace antiramsey
