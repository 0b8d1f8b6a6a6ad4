#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace antiramsey {

using Color = std::uint16_t;

/// An r-edge-coloring of K_n.
///
/// Colors live in a dense array indexed by the pair (u, v), u < v, in
/// row-major upper-triangular order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
class EdgeColoring {
 public:
  static constexpr int max_colors = 65535;

  EdgeColoring() = default;

  EdgeColoring(int n, int r, std::vector<Color> colors) : n_(n), r_(r), colors_(std::move(colors)) {
    validate_shape(n_, r_);
    if (colors_.size() != pair_count(n_))
      fail(ErrorKind::domain, "coloring of K_" + std::to_string(n_) + " needs " + std::to_string(pair_count(n_)) +
                                  " entries, got " + std::to_string(colors_.size()));
    for (Color c : colors_)
      if (c >= r_) fail(ErrorKind::domain, "color " + std::to_string(c) + " out of range for r = " + std::to_string(r_));
  }

  // Constant coloring with every edge colored `fill`.
  EdgeColoring(int n, int r, Color fill = 0) : EdgeColoring(n, r, std::vector<Color>(checked_pairs(n, r), fill)) {}

  static std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

  int vertices() const noexcept { return n_; }
  int colors_available() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return colors_.size(); }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  std::size_t index(int u, int v) const noexcept {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
  }

  Color at(int u, int v) const { return colors_[index(u, v)]; }
  Color at(std::size_t edge) const { return colors_[edge]; }

  void set(int u, int v, Color c) { set(index(u, v), c); }
  void set(std::size_t edge, Color c) {
    if (c >= r_) fail(ErrorKind::domain, "color " + std::to_string(c) + " out of range");
    colors_[edge] = c;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  static void validate_shape(int n, int r) {
    if (n < 2) fail(ErrorKind::domain, "coloring needs n >= 2");
    if (r < 1 || r > max_colors) fail(ErrorKind::domain, "coloring needs 1 <= r <= " + std::to_string(max_colors));
  }
  static std::size_t checked_pairs(int n, int r) {
    validate_shape(n, r);
    return pair_count(n);
  }

  int n_ = 2;
  int r_ = 1;
  std::vector<Color> colors_ = {0};
};

/// Uniform draw from {0..bound-1} out of a std::mt19937_64 stream, by
/// rejection of the top partial block so every color is equally likely.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

/// SplitMix64 step; used to derive independent sub-seeds (restarts, samples).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// I.i.d. uniform colors in pair order, drawn from mt19937_64(seed).
inline EdgeColoring random_coloring(int n, int r, std::uint64_t seed) {
  EdgeColoring out(n, r);
  std::mt19937_64 rng(seed);
  for (std::size_t e = 0; e < out.edge_count(); ++e) out.set(e, static_cast<Color>(uniform_below(rng, r)));
  return out;
}

namespace detail {

inline void blow_up_block(const EdgeColoring& base, EdgeColoring& out, int offset, int size) {
  const int parts = base.vertices();
  if (size < 2) return;
  if (size <= parts) {
    // Too small to split into `parts` blocks: singletons colored by the base
    // restricted to its first `size` vertices.
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) out.set(offset + i, offset + j, base.at(i, j));
    return;
  }
  std::vector<int> start(parts + 1, offset);
  const int small = size / parts;
  const int large_count = size % parts;
  for (int i = 0; i < parts; ++i) start[i + 1] = start[i] + small + (i < large_count ? 1 : 0);
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j) {
      const Color c = base.at(i, j);
      for (int u = start[i]; u < start[i + 1]; ++u)
        for (int v = start[j]; v < start[j + 1]; ++v) out.set(u, v, c);
    }
  for (int i = 0; i < parts; ++i) blow_up_block(base, out, start[i], start[i + 1] - start[i]);
}

}  // namespace detail

/// Recursive blow-up of `base` onto K_n.
///
/// The n vertices are cut into base.n contiguous parts of sizes ceil(n/m) and
/// floor(n/m), larger parts first. Cross edges take the base color of their
/// part pair and each part is colored the same way at its own size. A part
/// with at most base.n vertices is colored by the base restricted to its
/// first |part| vertices, which also makes blow_up(base, base.n) == base.
inline EdgeColoring blow_up(const EdgeColoring& base, int n) {
  if (n < base.vertices())
    fail(ErrorKind::domain, "blow-up target n = " + std::to_string(n) + " is smaller than the base order");
  EdgeColoring out(n, base.colors_available());
  detail::blow_up_block(base, out, 0, n);
  return out;
}

/// K_5 on a 5-cycle: cycle edges (0,1),(1,2),(2,3),(3,4),(4,0) get colors
/// 0..4 and diagonals (2,4),(3,0),(4,1),(0,2),(1,3) get colors 0..4. It holds
/// 10 rainbow copies of K4-e.
inline EdgeColoring figure_k5_coloring() {
  EdgeColoring out(5, 5);
  for (int i = 0; i < 5; ++i) {
    out.set(i, (i + 1) % 5, static_cast<Color>(i));
    out.set((i + 2) % 5, (i + 4) % 5, static_cast<Color>(i));
  }
  return out;
}

/// K_a with every edge a distinct color, numbered in pair order.
inline EdgeColoring rainbow_complete_coloring(int a) {
  if (a < 2) fail(ErrorKind::domain, "rainbow:<a> needs a >= 2");
  const auto pairs = EdgeColoring::pair_count(a);
  if (pairs > static_cast<std::size_t>(EdgeColoring::max_colors)) fail(ErrorKind::limit, "rainbow:<a> has too many colors");
  std::vector<Color> colors(pairs);
  for (std::size_t e = 0; e < pairs; ++e) colors[e] = static_cast<Color>(e);
  return EdgeColoring(a, static_cast<int>(pairs), std::move(colors));
}

inline bool is_builtin_coloring(std::string_view name) { return name == "fig-k5" || name.starts_with("rainbow:"); }

inline EdgeColoring builtin_base_coloring(std::string_view name) {
  if (name == "fig-k5") return figure_k5_coloring();
  if (name.starts_with("rainbow:")) {
    const std::string digits(name.substr(8));
    std::size_t used = 0;
    int a = 0;
    try {
      a = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (digits.empty() || used != digits.size()) fail(ErrorKind::parse, "malformed builtin '" + std::string(name) + "'");
    return rainbow_complete_coloring(a);
  }
  fail(ErrorKind::parse, "unknown builtin coloring '" + std::string(name) + "'");
}

/// {"n": int, "r": int, "colors": [[u, v, c], ...]} with pairs in sorted order.
inline nlohmann::ordered_json coloring_to_json(const EdgeColoring& c) {
  nlohmann::ordered_json triples = nlohmann::ordered_json::array();
  const int n = c.vertices();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) triples.push_back({u, v, c.at(u, v)});
  nlohmann::ordered_json out;
  out["n"] = n;
  out["r"] = c.colors_available();
  out["colors"] = std::move(triples);
  return out;
}

inline std::string serialize_coloring(const EdgeColoring& c) { return coloring_to_json(c).dump(); }

template <typename Json>
EdgeColoring coloring_from_json(const Json& j) {
  try {
    const int n = j.at("n").template get<int>();
    const int r = j.at("r").template get<int>();
    EdgeColoring out(n, r);
    std::vector<bool> seen(out.edge_count(), false);
    for (const auto& t : j.at("colors")) {
      if (!t.is_array() || t.size() != 3) fail(ErrorKind::parse, "color entry must be [u, v, c]");
      const int u = t[0].template get<int>(), v = t[1].template get<int>(), col = t[2].template get<int>();
      if (u < 0 || v >= n || u >= v) fail(ErrorKind::parse, "bad pair [" + std::to_string(u) + ", " + std::to_string(v) + "]");
      if (col < 0 || col >= r) fail(ErrorKind::parse, "color " + std::to_string(col) + " out of range [0, " + std::to_string(r) + ")");
      const auto e = out.index(u, v);
      if (seen[e]) fail(ErrorKind::parse, "duplicate pair [" + std::to_string(u) + ", " + std::to_string(v) + "]");
      seen[e] = true;
      out.set(e, static_cast<Color>(col));
    }
    for (bool s : seen)
      if (!s) fail(ErrorKind::parse, "coloring is missing pairs");
    return out;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::parse, std::string("coloring json: ") + ex.what());
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::parse) throw;
    fail(ErrorKind::parse, ex.what());
  }
}

inline EdgeColoring parse_coloring(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::parse, "malformed coloring JSON");
  return coloring_from_json(j);
}

}  // namespace antiramsey
