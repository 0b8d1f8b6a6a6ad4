#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "coloring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace antiramsey {

/// The distinct edge images of H inside a fixed m-vertex set.
///
/// Every copy of H on an m-subset {s_0 < ... < s_{m-1}} is one of these
/// patterns, written over local pair indices of K_m. There are exactly
/// m!/|Aut(H)| of them, computed once per H so the counting loop only streams
/// subsets.
class EmbeddingPatterns {
 public:
  static constexpr int max_order = Graph::max_brute_force_order;
  static constexpr int max_local_pairs = max_order * (max_order - 1) / 2;

  explicit EmbeddingPatterns(const Graph& h) : m_(h.order()), e_(h.size()) {
    if (m_ > max_order)
      fail(ErrorKind::limit, "rainbow counting supports patterns with m <= " + std::to_string(max_order));
    std::vector<int> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> masks;
    do {
      std::uint64_t mask = 0;
      for (const auto& edge : h.edges()) mask |= std::uint64_t{1} << local_index(perm[edge.u], perm[edge.v]);
      masks.push_back(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    pair_count_ = m_ * (m_ - 1) / 2;
    by_pair_.assign(pair_count_, {});
    for (std::size_t p = 0; p < masks.size(); ++p) {
      for (int lp = 0; lp < pair_count_; ++lp) {
        if ((masks[p] >> lp) & 1u) {
          slots_.push_back(static_cast<std::uint8_t>(lp));
          by_pair_[lp].push_back(static_cast<std::uint32_t>(p));
        }
      }
    }
  }

  int order() const noexcept { return m_; }
  int edges() const noexcept { return e_; }
  int local_pairs() const noexcept { return pair_count_; }
  std::size_t pattern_count() const noexcept { return e_ == 0 ? 1 : slots_.size() / e_; }

  /// Local pair indices of pattern p.
  std::span<const std::uint8_t> pattern(std::size_t p) const {
    return {slots_.data() + p * e_, static_cast<std::size_t>(e_)};
  }

  const std::vector<std::uint32_t>& patterns_through(int local_pair) const { return by_pair_[local_pair]; }

  int local_index(int i, int j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * m_ - i * (i + 1) / 2 + (j - i - 1);
  }

 private:
  int m_;
  int e_;
  int pair_count_ = 0;
  std::vector<std::uint8_t> slots_;
  std::vector<std::vector<std::uint32_t>> by_pair_;
};

namespace detail {

// Distinctness of the colors a pattern picks out of `local`. `stamp` is a
// scratch array indexed by color for palettes wider than 64.
struct DistinctColors {
  explicit DistinctColors(int r) : wide_(r > 64), stamp_(wide_ ? r : 0, 0) {}

  bool operator()(std::span<const std::uint8_t> slots, const Color* local) {
    if (!wide_) {
      std::uint64_t seen = 0;
      for (auto s : slots) {
        const std::uint64_t bit = std::uint64_t{1} << local[s];
        if (seen & bit) return false;
        seen |= bit;
      }
      return true;
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (auto s : slots) {
      if (stamp_[local[s]] == epoch_) return false;
      stamp_[local[s]] = epoch_;
    }
    return true;
  }

  bool wide_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

inline void check_host(const Graph& h, const EdgeColoring& c) {
  if (c.vertices() < h.order())
    fail(ErrorKind::domain, "host K_" + std::to_string(c.vertices()) + " is smaller than the pattern order " +
                                std::to_string(h.order()));
  if (copies_in_complete(h, c.vertices()) > std::numeric_limits<std::uint64_t>::max())
    fail(ErrorKind::resource, "copy count would overflow 64 bits");
}

}  // namespace detail

/// Streams m-subsets of K_n and tests every embedding pattern for rainbowness.
class RainbowCounter {
 public:
  explicit RainbowCounter(const Graph& h) : graph_(h), patterns_(h) {}

  const Graph& graph() const noexcept { return graph_; }
  const EmbeddingPatterns& patterns() const noexcept { return patterns_; }

  /// Number of rainbow copies of H under c. Subsets are split across
  /// `threads` workers by their smallest vertex; the sum is partition-free.
  std::uint64_t count(const EdgeColoring& c, unsigned threads = 1) const {
    detail::check_host(graph_, c);
    const int n = c.vertices();
    const int m = patterns_.order();
    if (graph_.size() > c.colors_available() && graph_.size() >= 2) return 0;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::vector<std::uint64_t> partial(threads, 0);
    auto work = [&](unsigned worker) {
      std::uint64_t total = 0;
      for (int first = static_cast<int>(worker); first <= n - m; first += static_cast<int>(threads))
        total += count_from(c, first);
      partial[worker] = total;
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }

  /// Change in the rainbow count if edge (u, v) were recolored to `color`.
  /// Only the copies through (u, v) are examined.
  std::int64_t recolor_delta(const EdgeColoring& c, int u, int v, Color color) const {
    const Color old = c.at(u, v);
    if (old == color || graph_.size() == 0) return 0;
    if (u > v) std::swap(u, v);
    const int n = c.vertices();
    const int m = patterns_.order();
    detail::DistinctColors distinct(c.colors_available());
    std::array<int, Graph::max_vertices> others{};
    std::array<int, Graph::max_vertices> chosen{};
    std::array<Color, EmbeddingPatterns::max_local_pairs> local{};
    std::int64_t delta = 0;

    auto evaluate = [&]() {
      // Merge u and v into the sorted selection of the other m-2 vertices.
      int pu = -1, pv = -1, o = 0;
      for (int i = 0; i < m; ++i) {
        const int pending = pu < 0 ? u : v;
        if (pv < 0 && (o == m - 2 || pending < others[o])) {
          chosen[i] = pending;
          (pu < 0 ? pu : pv) = i;
        } else {
          chosen[i] = others[o++];
        }
      }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) local[patterns_.local_index(i, j)] = c.at(chosen[i], chosen[j]);
      const int slot = patterns_.local_index(pu, pv);
      for (auto p : patterns_.patterns_through(slot)) {
        const auto pat = patterns_.pattern(p);
        local[slot] = old;
        const bool before = distinct(pat, local.data());
        local[slot] = color;
        const bool after = distinct(pat, local.data());
        delta += static_cast<int>(after) - static_cast<int>(before);
      }
    };

    auto choose = [&](auto&& self, int depth, int next) -> void {
      if (depth == m - 2) {
        evaluate();
        return;
      }
      for (int w = next; w < n; ++w) {
        if (w == u || w == v) continue;
        others[depth] = w;
        self(self, depth + 1, w + 1);
      }
    };
    choose(choose, 0, 0);
    return delta;
  }

 private:
  std::uint64_t count_from(const EdgeColoring& c, int first) const {
    const int n = c.vertices();
    const int m = patterns_.order();
    const std::size_t pattern_count = patterns_.pattern_count();
    detail::DistinctColors distinct(c.colors_available());
    std::array<int, Graph::max_vertices> chosen{};
    std::array<Color, EmbeddingPatterns::max_local_pairs> local{};
    std::uint64_t total = 0;
    chosen[0] = first;
    if (m == 1) return 1;

    auto descend = [&](auto&& self, int depth) -> void {
      for (int w = chosen[depth - 1] + 1; w <= n - (m - depth); ++w) {
        chosen[depth] = w;
        for (int i = 0; i < depth; ++i) local[patterns_.local_index(i, depth)] = c.at(chosen[i], w);
        if (depth + 1 == m) {
          for (std::size_t p = 0; p < pattern_count; ++p) total += distinct(patterns_.pattern(p), local.data());
        } else {
          self(self, depth + 1);
        }
      }
    };
    descend(descend, 1);
    return total;
  }

  Graph graph_;
  EmbeddingPatterns patterns_;
};

inline std::uint64_t count_rainbow_copies(const Graph& h, const EdgeColoring& c, unsigned threads = 1) {
  return RainbowCounter(h).count(c, threads);
}

/// Rainbow copies over all copies of H in K_n, exact.
inline Rational rainbow_fraction(const Graph& h, const EdgeColoring& c) {
  const std::uint64_t rainbow = count_rainbow_copies(h, c);
  return make_rational(BigInt(rainbow), copies_in_complete(h, c.vertices()));
}

struct ColorDegreeProfile {
  std::vector<int> center_set;
  // q[i]: edges of color i from the center set to a vertex outside it.
  std::vector<std::uint64_t> q;
};

inline ColorDegreeProfile color_degree_profile(const EdgeColoring& c, std::vector<int> centers) {
  const int n = c.vertices();
  if (centers.empty()) fail(ErrorKind::domain, "center set must be nonempty");
  std::vector<bool> inside(n, false);
  for (int v : centers) {
    if (v < 0 || v >= n) fail(ErrorKind::domain, "vertex " + std::to_string(v) + " out of range");
    if (inside[v]) fail(ErrorKind::domain, "vertex " + std::to_string(v) + " repeated in center set");
    inside[v] = true;
  }
  std::sort(centers.begin(), centers.end());
  ColorDegreeProfile out{std::move(centers), std::vector<std::uint64_t>(c.colors_available(), 0)};
  for (int v : out.center_set)
    for (int w = 0; w < n; ++w)
      if (!inside[w]) ++out.q[c.at(v, w)];
  return out;
}

}  // namespace antiramsey
