#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace antiramsey {

/// Expected rainbow fraction of any e-edge graph under a uniform random
/// r-coloring: binom(r, e) * e! / r^e (zero when e > r).
inline Rational random_baseline(int e, int r) {
  if (e < 0) fail(ErrorKind::domain, "edge count must be >= 0");
  if (r < 1) fail(ErrorKind::domain, "color count must be >= 1");
  return make_rational(binomial(r, e) * factorial(e), ipow(r, e));
}

/// Degree-d elementary symmetric polynomial of xs.
inline Rational elementary_symmetric(std::span<const Rational> xs, int d) {
  if (d < 0) return 0;
  std::vector<Rational> acc(d + 1, Rational(0));
  acc[0] = 1;
  for (const auto& x : xs)
    for (int j = d; j >= 1; --j) acc[j] += acc[j - 1] * x;
  return acc[d];
}

/// binom(n, d) * mean(xs)^d, an upper bound on elementary_symmetric(xs, d).
inline Rational maclaurin_upper(std::span<const Rational> xs, int d) {
  const int n = static_cast<int>(xs.size());
  if (d < 1 || d > n) fail(ErrorKind::domain, "degree must satisfy 1 <= d <= |xs|");
  Rational sum = 0;
  for (const auto& x : xs) {
    if (x <= 0) fail(ErrorKind::domain, "maclaurin inputs must be positive");
    sum += x;
  }
  return Rational(binomial(n, d)) * rpow(sum / n, d);
}

/// n * ((n-1)/r)^(m-1) * binom(r, m-1): upper bound on rainbow K_{1,m-1}
/// copies in any r-coloring of K_n.
inline Rational star_upper_bound(int n, int m, int r) {
  if (m < 2 || n < m) fail(ErrorKind::domain, "star bound needs n >= m >= 2");
  if (r < 1) fail(ErrorKind::domain, "color count must be >= 1");
  return Rational(n) * rpow(make_rational(n - 1, r), m - 1) * Rational(binomial(r, m - 1));
}

/// Multiset of star orders {m_1, ..., m_k}, each >= 2, stored non-increasing.
class StarPartition {
 public:
  explicit StarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(ErrorKind::domain, "star partition needs at least one part");
    for (int p : parts_)
      if (p < 2) fail(ErrorKind::domain, "star partition parts must be >= 2");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) m_ += p;
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int order() const noexcept { return m_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  int edge_count() const noexcept { return m_ - part_count(); }

  /// Product of M_s! over the multiplicities M_s of distinct part sizes.
  BigInt gamma() const {
    BigInt out = 1;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      out *= factorial(j - i);
      i = j;
    }
    return out;
  }

  /// binom(m - k; m_1 - 1, ..., m_k - 1).
  BigInt multinomial() const {
    BigInt out = factorial(edge_count());
    for (int p : parts_) out /= factorial(p - 1);
    return out;
  }

  int parts_of_size_two() const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), 2)); }

  /// gamma(P) * prod (m_i - 1)!, times 2 for every K_{1,1} component whose
  /// two endpoints can swap.
  BigInt automorphisms() const {
    BigInt out = gamma();
    for (int p : parts_) out *= factorial(p - 1);
    return out << parts_of_size_two();
  }

  Graph graph() const { return disjoint_stars_graph(parts_); }

  friend bool operator==(const StarPartition&, const StarPartition&) = default;

 private:
  std::vector<int> parts_;
  int m_ = 0;
};

/// All partitions of m into k parts of size >= 2, in lexicographically
/// decreasing order of the non-increasing part lists.
inline std::vector<StarPartition> star_partitions(int m, int k) {
  std::vector<StarPartition> out;
  std::vector<int> parts;
  auto build = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    for (int p = std::min(cap, remaining - 2 * (slots - 1)); p >= 2; --p) {
      if (p * slots < remaining) break;
      parts.push_back(p);
      self(self, remaining - p, slots - 1, p);
      parts.pop_back();
    }
  };
  if (k >= 1) build(build, m, k, m);
  return out;
}

inline std::vector<StarPartition> star_partitions(int m) {
  std::vector<StarPartition> out;
  for (int k = 1; 2 * k <= m; ++k)
    for (auto& p : star_partitions(m, k)) out.push_back(std::move(p));
  return out;
}

/// Leading-order rainbow count of the disjoint star union S_P in the best
/// r-coloring of K_n:
///   binom(m-k; P-1) * binom(r, m-k) * binom(n, m) * m! / (gamma(P) r^(m-k) 2^t)
/// where t counts K_{1,1} components. Normalized by copies of S_P in K_n this
/// is random_baseline(m - k, r).
inline Rational disjoint_stars_target(const StarPartition& partition, int r, int n) {
  const int m = partition.order();
  const int edges = partition.edge_count();
  if (r < m) fail(ErrorKind::domain, "disjoint star target needs r >= m");
  if (n < m) fail(ErrorKind::domain, "disjoint star target needs n >= m");
  const BigInt num = partition.multinomial() * binomial(r, edges) * binomial(n, m) * factorial(m);
  const BigInt den = (partition.gamma() * ipow(r, edges)) << partition.parts_of_size_two();
  return make_rational(num, den);
}

struct BlowupRecurrence {
  int parts = 2;     // a: vertices of the base coloring
  BigInt transversal_copies;  // t: rainbow copies with one vertex per part
  int pattern_order = 2;      // m
  Rational coefficient;       // t / (a^m - a)
};

/// Solves F(n) >= a F(n/a) + t (n/a)^m to leading order: F(n) ~ t n^m / (a^m - a).
inline BlowupRecurrence blowup_coefficient(int a, const BigInt& t, int m) {
  if (a < 2 || m < 2) fail(ErrorKind::domain, "blow-up recurrence needs a >= 2 and m >= 2");
  if (t < 0) fail(ErrorKind::domain, "transversal count must be >= 0");
  const BigInt den = ipow(a, m) - a;
  return {a, t, m, make_rational(t, den)};
}

struct CriterionCertificate {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

struct BoundsLimits {
  int max_complete_order = 12;
};

/// Decides a!/(a^a - a) > N!/N^N with N = binom(a, 2), exactly.
inline CriterionCertificate complete_graph_criterion(int a, const BoundsLimits& limits = {}) {
  if (a < 2) fail(ErrorKind::domain, "complete graph criterion needs a >= 2");
  if (a > limits.max_complete_order)
    fail(ErrorKind::resource, "a = " + std::to_string(a) + " exceeds the configured cap " +
                                  std::to_string(limits.max_complete_order));
  const std::int64_t pairs = static_cast<std::int64_t>(a) * (a - 1) / 2;
  CriterionCertificate out;
  out.lhs = make_rational(factorial(a), ipow(a, a) - a);
  out.rhs = make_rational(factorial(pairs), ipow(pairs, pairs));
  out.holds = out.lhs > out.rhs;
  return out;
}

struct DenseCriterionResult {
  bool applicable = false;
  bool holds = false;
  long double log_lhs = 0;  // c + (1-c) log(1-c)
  long double log_rhs = 0;  // 2/(m-1) + 1/(12 binom(m,2)^2)
};

/// Edge-density test: applicable when 2 pi m (1-c) > 1; holds when in addition
/// c + (1-c) log(1-c) >= 2/(m-1) + 1/(12 binom(m,2)^2) and e >= c binom(m,2).
/// Any comparison closer than `margin` to equality raises an indeterminate
/// error instead of being decided.
inline DenseCriterionResult dense1_criterion(int m, int e, long double c, long double margin = 1e-12L) {
  if (!(c > 0 && c < 1)) fail(ErrorKind::domain, "c must lie in (0, 1)");
  if (m < 2) fail(ErrorKind::domain, "dense criterion needs m >= 2");
  auto decide = [margin](long double diff, const char* what) {
    if (std::fabs(diff) < margin) fail(ErrorKind::indeterminate, std::string(what) + " is within the margin of equality");
    return diff > 0;
  };
  DenseCriterionResult out;
  out.applicable = decide(2 * std::numbers::pi_v<long double> * m * (1 - c) - 1, "2*pi*m*(1-c) > 1");
  if (!out.applicable) return out;
  const long double pairs = static_cast<long double>(m) * (m - 1) / 2;
  out.log_lhs = c + (1 - c) * std::log1p(-c);
  out.log_rhs = 2.0L / (m - 1) + 1.0L / (12 * pairs * pairs);
  const bool log_ok = decide(out.log_lhs - out.log_rhs, "log inequality");
  if (!log_ok) return out;
  // e >= c*binom(m,2) is non-strict; an exact tie sits inside the margin.
  out.holds = decide(e - c * pairs, "e >= c*binom(m,2)");
  return out;
}

/// True iff m >= 6 and e > m sqrt(m-1), compared as e^2 > m^2 (m-1).
inline bool dense2_criterion(int m, int e) {
  if (m < 2 || e < 0) fail(ErrorKind::domain, "dense2 criterion needs m >= 2 and e >= 0");
  const std::int64_t mm = m;
  return m >= 6 && static_cast<std::int64_t>(e) * e > mm * mm * (mm - 1);
}

/// (r+e)(r+1-e) / (r(r+1)), clamped at zero when r+1-e <= 0.
inline Rational recoloring_factor(int r, int e) {
  if (r < 1 || e < 0) fail(ErrorKind::domain, "recoloring factor needs r >= 1 and e >= 0");
  if (r + 1 - e <= 0) return 0;
  return make_rational(BigInt(r + e) * (r + 1 - e), BigInt(r) * (r + 1));
}

/// Lower bound on rb_r(H;n) from rb_{r+1}(H;n).
inline Rational recoloring_lower_bound(const BigInt& rb_next, int r, int e) {
  if (rb_next < 0) fail(ErrorKind::domain, "rb value must be >= 0");
  return recoloring_factor(r, e) * Rational(rb_next);
}

struct RbValue {
  int n = 0;
  BigInt rb;
};

/// Checks (n - m) rb(n) <= n rb(n-1) for each consecutive pair.
inline bool monotonicity_check(const Graph& h, std::span<const RbValue> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].n != values[i - 1].n + 1)
      fail(ErrorKind::domain, "gap between n = " + std::to_string(values[i - 1].n) + " and n = " +
                                  std::to_string(values[i].n));
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    const int n = values[i].n;
    if (BigInt(n - h.order()) * values[i].rb > BigInt(n) * values[i - 1].rb) return false;
  }
  return true;
}

}  // namespace antiramsey
