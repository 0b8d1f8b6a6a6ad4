#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "rational.hpp"

namespace antiramsey {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A small labeled pattern graph on vertices 0..m-1.
///
/// Edges are kept normalized (u < v) and sorted, so two graphs built from the
/// same edge set compare equal. Adjacency is a 16-bit mask per vertex.
class Graph {
 public:
  static constexpr int max_vertices = 16;
  // Brute-force automorphism enumeration is only attempted up to this order.
  static constexpr int max_brute_force_order = 10;

  Graph() = default;

  Graph(int m, std::vector<Edge> edges, std::optional<std::uint64_t> known_automorphisms = {},
        std::string name = {})
      : m_(m), edges_(std::move(edges)), name_(std::move(name)) {
    if (m_ < 1) fail(ErrorKind::domain, "graph needs at least one vertex");
    if (m_ > max_vertices)
      fail(ErrorKind::limit, "graph order " + std::to_string(m_) + " exceeds " + std::to_string(max_vertices));
    for (auto& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= m_) fail(ErrorKind::domain, "edge endpoint out of range");
      if (e.u == e.v) fail(ErrorKind::domain, "self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      fail(ErrorKind::domain, "duplicate edge");
    for (const auto& e : edges_) {
      adjacency_[e.u] |= std::uint16_t(1u << e.v);
      adjacency_[e.v] |= std::uint16_t(1u << e.u);
    }
    automorphisms_ = known_automorphisms;
    if (!automorphisms_ && m_ <= max_brute_force_order) automorphisms_ = count_automorphisms_brute_force();
  }

  int order() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }
  std::uint16_t neighbors(int v) const { return adjacency_.at(v); }
  bool adjacent(int u, int v) const { return (adjacency_.at(u) >> v) & 1u; }
  std::optional<std::uint64_t> cached_automorphisms() const noexcept { return automorphisms_; }

  // Backtracking over partial vertex maps; edges among assigned vertices must
  // map to edges and non-edges to non-edges.
  std::uint64_t count_automorphisms_brute_force() const {
    if (m_ > max_brute_force_order)
      fail(ErrorKind::limit, "brute-force automorphism count needs m <= " + std::to_string(max_brute_force_order));
    std::array<int, max_vertices> image{};
    std::uint32_t used = 0;
    std::uint64_t count = 0;
    auto extend = [&](auto&& self, int depth) -> void {
      if (depth == m_) {
        ++count;
        return;
      }
      for (int w = 0; w < m_; ++w) {
        if ((used >> w) & 1u) continue;
        if (__builtin_popcount(adjacency_[depth]) != __builtin_popcount(adjacency_[w])) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev) ok = adjacent(depth, prev) == adjacent(w, image[prev]);
        if (!ok) continue;
        image[depth] = w;
        used |= 1u << w;
        self(self, depth + 1);
        used &= ~(1u << w);
      }
    };
    extend(extend, 0);
    return count;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.m_ == b.m_ && a.edges_ == b.edges_; }

 private:
  int m_ = 1;
  std::vector<Edge> edges_;
  std::array<std::uint16_t, max_vertices> adjacency_{};
  std::optional<std::uint64_t> automorphisms_;
  std::string name_;
};

namespace detail {

inline int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorKind::parse, "malformed graph spec '" + std::string(spec) + "'");
  return value;
}

inline void check_order(int m) {
  if (m > Graph::max_vertices)
    fail(ErrorKind::limit, "graph order " + std::to_string(m) + " exceeds " + std::to_string(Graph::max_vertices));
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

// |Aut(K_{1,s-1})|; K_{1,1} is a single edge and can be flipped.
inline std::uint64_t star_automorphisms(int s) { return s == 2 ? 2 : factorial_u64(s - 1); }

}  // namespace detail

inline Graph complete_graph(int a) {
  detail::check_order(a);
  if (a < 1) fail(ErrorKind::domain, "K<a> needs a >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.push_back({u, v});
  return Graph(a, std::move(edges), detail::factorial_u64(a), "K" + std::to_string(a));
}

inline Graph complete_minus_edge() {
  // K_4 without the edge {2,3}.
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4, "K4-e");
}

/// K_{1,m-1} with center 0.
inline Graph star_graph(int m) {
  detail::check_order(m);
  if (m < 2) fail(ErrorKind::domain, "S<m> needs m >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < m; ++v) edges.push_back({0, v});
  return Graph(m, std::move(edges), detail::star_automorphisms(m), "S" + std::to_string(m));
}

inline Graph path_graph(int k) {
  detail::check_order(k + 1);
  if (k < 1) fail(ErrorKind::domain, "P<k> needs k >= 1 edges");
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.push_back({v, v + 1});
  return Graph(k + 1, std::move(edges), 2, "P" + std::to_string(k));
}

inline Graph cycle_graph(int k) {
  detail::check_order(k);
  if (k < 3) fail(ErrorKind::domain, "C<k> needs k >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.push_back({v, (v + 1) % k});
  return Graph(k, std::move(edges), 2 * static_cast<std::uint64_t>(k), "C" + std::to_string(k));
}

inline Graph matching_graph(int k) {
  detail::check_order(2 * k);
  if (k < 1) fail(ErrorKind::domain, "M<k> needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Graph(2 * k, std::move(edges), detail::factorial_u64(k) << k, "M" + std::to_string(k));
}

/// Disjoint stars laid out in the given order; each component's center is its
/// first vertex.
inline Graph disjoint_stars_graph(const std::vector<int>& parts) {
  if (parts.empty()) fail(ErrorKind::domain, "stars: needs at least one part");
  int m = 0;
  for (int p : parts) {
    if (p < 2) fail(ErrorKind::domain, "stars: parts must be >= 2");
    m += p;
    detail::check_order(m);
  }
  std::vector<Edge> edges;
  std::string name = "stars:";
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v = 1; v < parts[i]; ++v) edges.push_back({offset, offset + v});
    offset += parts[i];
    name += (i ? "," : "") + std::to_string(parts[i]);
  }
  // Components of equal order can be permuted among themselves.
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t aut = 1;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    aut *= detail::factorial_u64(static_cast<int>(j - i));
    i = j;
  }
  for (int p : parts) aut *= detail::star_automorphisms(p);
  return Graph(m, std::move(edges), aut, std::move(name));
}

/// Parses `K<a>`, `K4-e`, `S<m>`, `P<k>`, `C<k>`, `M<k>` or `stars:<m1>,<m2>,...`.
inline Graph build_graph(std::string_view spec) {
  auto bad = [&]() { fail(ErrorKind::parse, "malformed graph spec '" + std::string(spec) + "'"); };
  if (spec == "K4-e") return complete_minus_edge();
  if (spec.starts_with("stars:")) {
    std::vector<int> parts;
    std::string_view rest = spec.substr(6);
    while (true) {
      auto comma = rest.find(',');
      parts.push_back(detail::parse_int(rest.substr(0, comma), spec));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return disjoint_stars_graph(parts);
  }
  if (spec.size() < 2) bad();
  int value = detail::parse_int(spec.substr(1), spec);
  switch (spec[0]) {
    case 'K': return complete_graph(value);
    case 'S': return star_graph(value);
    case 'P': return path_graph(value);
    case 'C': return cycle_graph(value);
    case 'M': return matching_graph(value);
    default: bad();
  }
  return {};
}

inline std::uint64_t automorphism_count(const Graph& h) {
  if (auto cached = h.cached_automorphisms()) return *cached;
  fail(ErrorKind::limit, "automorphism count for a non-built-in graph needs m <= " +
                             std::to_string(Graph::max_brute_force_order));
}

/// Number of copies of H in K_n: binom(n, m) * m! / |Aut(H)|.
inline BigInt copies_in_complete(const Graph& h, int n) {
  if (n < h.order())
    fail(ErrorKind::domain, "n = " + std::to_string(n) + " is smaller than the pattern order");
  BigInt arrangements = binomial(n, h.order()) * factorial(h.order());
  return arrangements / automorphism_count(h);
}

/// {"m": int, "edges": [[u, v], ...]} with u < v in ascending order.
inline nlohmann::ordered_json to_json(const Graph& h) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : h.edges()) edges.push_back({e.u, e.v});
  nlohmann::ordered_json out;
  out["m"] = h.order();
  out["edges"] = std::move(edges);
  return out;
}

template <typename Json>
Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::parse, "edge must be [u, v]");
      edges.push_back({e[0].template get<int>(), e[1].template get<int>()});
    }
    return Graph(j.at("m").template get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::parse, std::string("graph json: ") + ex.what());
  }
}

}  // namespace antiramsey
