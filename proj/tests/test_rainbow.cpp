#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "antiramsey/bounds.hpp"
#include "antiramsey/rainbow.hpp"
#include "oracle.hpp"

using namespace antiramsey;

namespace {

EdgeColoring relabel_colors(const EdgeColoring& c, const std::vector<int>& perm) {
  EdgeColoring out(c.vertices(), c.colors_available());
  for (std::size_t e = 0; e < c.edge_count(); ++e) out.set(e, static_cast<Color>(perm[c.at(e)]));
  return out;
}

EdgeColoring relabel_vertices(const EdgeColoring& c, const std::vector<int>& perm) {
  EdgeColoring out(c.vertices(), c.colors_available());
  for (int u = 0; u < c.vertices(); ++u)
    for (int v = u + 1; v < c.vertices(); ++v) out.set(perm[u], perm[v], c.at(u, v));
  return out;
}

}  // namespace

TEST(EmbeddingPatterns, CountIsArrangementsOverAutomorphisms) {
  for (const char* spec : {"K3", "K4", "K4-e", "P2", "P3", "C4", "C5", "S4", "M2", "stars:3,2", "K6"}) {
    const Graph h = build_graph(spec);
    const EmbeddingPatterns patterns(h);
    EXPECT_EQ(patterns.pattern_count() * automorphism_count(h), factorial(h.order())) << spec;
  }
}

TEST(CountRainbow, Examples) {
  EXPECT_EQ(count_rainbow_copies(build_graph("K4-e"), figure_k5_coloring()), 10u);
  EXPECT_EQ(count_rainbow_copies(build_graph("K3"), builtin_base_coloring("rainbow:5")), 10u);
  EXPECT_EQ(count_rainbow_copies(build_graph("P3"), EdgeColoring(7, 4, Color{2})), 0u);
}

TEST(CountRainbow, SingleEdgeAlwaysRainbow) {
  EXPECT_EQ(count_rainbow_copies(build_graph("K2"), EdgeColoring(6, 1)), 15u);
}

TEST(CountRainbow, HostTooSmall) { EXPECT_THROW(count_rainbow_copies(build_graph("K4"), EdgeColoring(3, 3)), Error); }

TEST(CountRainbow, PigeonholeZero) {
  // 5 edges, 4 colors.
  EXPECT_EQ(count_rainbow_copies(build_graph("K4-e"), random_coloring(8, 4, 3)), 0u);
}

TEST(CountRainbow, MatchesNaiveEnumerator) {
  std::uint64_t seed = 0;
  for (const char* spec : {"K2", "K3", "P2", "P3", "S4", "K4-e", "C4", "M2", "K4", "C5", "stars:3,2", "P4"}) {
    const Graph h = build_graph(spec);
    for (int n = std::max(h.order(), 2); n <= 7; ++n) {
      if (h.order() == 5 && n > 6) continue;
      for (int r : {2, 3, 5}) {
        const auto c = random_coloring(n, r, ++seed);
        const auto fast = count_rainbow_copies(h, c);
        EXPECT_EQ(fast, oracle::rainbow_by_maps(h, c)) << spec << " n=" << n << " r=" << r;
        EXPECT_EQ(fast, oracle::rainbow_in(oracle::copies(h, n), c)) << spec << " n=" << n << " r=" << r;
        EXPECT_LE(BigInt(fast), copies_in_complete(h, n));
      }
    }
  }
}

TEST(CountRainbow, WidePaletteMatchesNarrow) {
  // r > 64 takes the stamped-distinctness path.
  const auto narrow = random_coloring(9, 6, 11);
  const EdgeColoring wide(9, 200, narrow.colors());
  for (const char* spec : {"K3", "K4-e", "P3"}) {
    const Graph h = build_graph(spec);
    EXPECT_EQ(count_rainbow_copies(h, wide), count_rainbow_copies(h, narrow)) << spec;
  }
  const auto rainbow = builtin_base_coloring("rainbow:12");  // 66 colors
  EXPECT_EQ(count_rainbow_copies(build_graph("K4"), rainbow), 495u);
}

TEST(CountRainbow, InvariantUnderColorAndVertexRelabeling) {
  std::mt19937_64 rng(5);
  const Graph h = build_graph("K4-e");
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random_coloring(9, 5, 100 + trial);
    std::vector<int> colors(5), vertices(9);
    std::iota(colors.begin(), colors.end(), 0);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::shuffle(colors.begin(), colors.end(), rng);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    const auto base = count_rainbow_copies(h, c);
    EXPECT_EQ(count_rainbow_copies(h, relabel_colors(c, colors)), base);
    EXPECT_EQ(count_rainbow_copies(h, relabel_vertices(c, vertices)), base);
  }
}

TEST(CountRainbow, IndependentOfThreadPartition) {
  const Graph h = build_graph("K4-e");
  const auto c = random_coloring(20, 5, 77);
  const auto one = count_rainbow_copies(h, c, 1);
  for (unsigned t : {2u, 3u, 7u}) EXPECT_EQ(count_rainbow_copies(h, c, t), one);
}

TEST(CountRainbow, EqualsAllCopiesIffEveryCopyRainbow) {
  const Graph h = build_graph("K3");
  const auto rainbow = builtin_base_coloring("rainbow:6");
  EXPECT_EQ(BigInt(count_rainbow_copies(h, rainbow)), copies_in_complete(h, 6));
  EXPECT_LT(BigInt(count_rainbow_copies(h, random_coloring(6, 3, 4))), copies_in_complete(h, 6));
}

TEST(RecolorDelta, MatchesFullRecount) {
  std::mt19937_64 rng(9);
  for (const char* spec : {"K3", "K4-e", "P3", "S4", "M2", "K2"}) {
    const Graph h = build_graph(spec);
    const RainbowCounter counter(h);
    auto c = random_coloring(9, 4, 31);
    auto value = static_cast<std::int64_t>(counter.count(c));
    for (int step = 0; step < 60; ++step) {
      const int u = static_cast<int>(rng() % 9);
      int v = static_cast<int>(rng() % 8);
      if (v >= u) ++v;
      const auto color = static_cast<Color>(rng() % 4);
      const auto delta = counter.recolor_delta(c, u, v, color);
      c.set(u, v, color);
      value += delta;
      ASSERT_EQ(value, static_cast<std::int64_t>(counter.count(c))) << spec << " step " << step;
    }
  }
}

TEST(RainbowFraction, Examples) {
  EXPECT_EQ(rainbow_fraction(build_graph("K4-e"), figure_k5_coloring()), Rational(1, 3));
  EXPECT_EQ(rainbow_fraction(build_graph("K3"), EdgeColoring(6, 3)), Rational(0));
  EXPECT_EQ(rainbow_fraction(build_graph("K3"), builtin_base_coloring("rainbow:4")), Rational(1));
}

TEST(ColorDegreeProfile, FigureVertexZero) {
  // Edges at 0: (0,1)=0, (4,0)=4, (3,0)=1, (0,2)=3.
  const auto p = color_degree_profile(figure_k5_coloring(), {0});
  EXPECT_EQ(p.q, (std::vector<std::uint64_t>{1, 1, 0, 1, 1}));
}

TEST(ColorDegreeProfile, AllVerticesAndConstant) {
  const auto all = color_degree_profile(random_coloring(6, 3, 2), {0, 1, 2, 3, 4, 5});
  for (auto q : all.q) EXPECT_EQ(q, 0u);
  const auto constant = color_degree_profile(EdgeColoring(7, 3), {4});
  EXPECT_EQ(constant.q, (std::vector<std::uint64_t>{6, 0, 0}));
  EXPECT_THROW(color_degree_profile(EdgeColoring(7, 3), {7}), Error);
  EXPECT_THROW(color_degree_profile(EdgeColoring(7, 3), {}), Error);
}

TEST(ColorDegreeProfile, SumCountsEdgesLeavingTheCenterSet) {
  const auto c = random_coloring(10, 4, 8);
  for (std::vector<int> centers : {std::vector<int>{3}, {1, 5}, {0, 2, 9}}) {
    const auto p = color_degree_profile(c, centers);
    const auto k = static_cast<std::uint64_t>(centers.size());
    EXPECT_EQ(std::accumulate(p.q.begin(), p.q.end(), std::uint64_t{0}), k * (10 - k));
  }
}

TEST(ColorDegreeProfile, StarCountIsSumOfSymmetricSums) {
  for (int m : {3, 4, 5}) {
    const Graph star = build_graph("S" + std::to_string(m));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto c = random_coloring(9, 5, seed);
      Rational total = 0;
      for (int v = 0; v < 9; ++v) {
        const auto p = color_degree_profile(c, {v});
        std::vector<Rational> q(p.q.begin(), p.q.end());
        total += elementary_symmetric(q, m - 1);
      }
      EXPECT_EQ(total, Rational(count_rainbow_copies(star, c))) << "m=" << m;
    }
  }
}
