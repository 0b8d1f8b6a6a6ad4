#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "coloring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rainbow.hpp"
#include "rational.hpp"
#include "search.hpp"

namespace antiramsey::cli {

using ordered_json = nlohmann::ordered_json;

/// Ten significant digits; the exact "p/q" string is always printed beside it.
inline std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string decimal(const Rational& q) { return decimal(to_double(q)); }

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return 3;
    case ErrorKind::limit: return 4;
    case ErrorKind::domain: return 5;
    case ErrorKind::budget: return 6;
    case ErrorKind::indeterminate: return 7;
    case ErrorKind::resource: return 8;
    case ErrorKind::io: return 9;
  }
  return 1;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::io, "failed writing '" + path + "'");
}

/// A builtin name (`fig-k5`, `rainbow:<a>`) or a path to a coloring file.
inline EdgeColoring load_coloring(const std::string& source) {
  if (is_builtin_coloring(source)) return builtin_base_coloring(source);
  return parse_coloring(read_file(source));
}

/// One row of brute/search/table output.
struct ReportRow {
  int n = 0;
  int r = 0;
  std::string graph;
  std::uint64_t rb = 0;
  bool exact = false;
  Rational fraction;
  Rational baseline;

  std::string annotation() const {
    if (fraction > baseline) return "above random baseline";
    if (fraction == baseline) return "at random baseline";
    return exact ? "BELOW BASELINE (counting bug)" : "below random baseline";
  }

  ordered_json to_json() const {
    ordered_json j;
    j["n"] = n;
    j["r"] = r;
    j["graph"] = graph;
    j["rb"] = rb;
    j["exact"] = exact;
    j["fraction_decimal"] = decimal(fraction);
    j["fraction_exact"] = to_exact_string(fraction);
    j["baseline_exact"] = to_exact_string(baseline);
    j["annotation"] = annotation();
    return j;
  }

  static std::string csv_header() { return "n,r,graph,rb,exact,fraction_decimal,fraction_exact,baseline_exact"; }

  std::string csv() const {
    std::ostringstream s;
    s << n << ',' << r << ',' << graph << ',' << rb << ',' << (exact ? "true" : "false") << ',' << decimal(fraction)
      << ',' << to_exact_string(fraction) << ',' << to_exact_string(baseline);
    return s.str();
  }
};

inline ReportRow make_row(const std::string& spec, const Graph& h, int n, int r, const SearchResult& result) {
  return {n, r, spec, result.value, result.exact, result.fraction, random_baseline(h.size(), r)};
}

inline void print_row(std::ostream& out, const ReportRow& row) {
  out << std::left << std::setw(6) << row.n << std::setw(4) << row.r << std::setw(14) << row.rb << std::setw(7)
      << (row.exact ? "exact" : "lower") << std::setw(16) << decimal(row.fraction) << std::setw(24)
      << to_exact_string(row.fraction) << row.annotation() << '\n';
}

/// Parses a real in (0, 1) given as a decimal, "p/q", or "p/sqrt(q)".
inline long double parse_real(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return std::stold(text);
    const long double num = std::stold(text.substr(0, slash));
    std::string den = text.substr(slash + 1);
    if (den.starts_with("sqrt(") && den.ends_with(")")) return num / std::sqrt(std::stold(den.substr(5, den.size() - 6)));
    return num / std::stold(den);
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "bad real number '" + text + "'");
  }
}

struct Options {
  bool json = false;
  std::string graph;
  std::string coloring;
  std::string base;
  std::string out_path;
  std::string warm_path;
  std::string csv_path;
  std::string mode = "exact";
  std::string rule = "anneal";
  int n = 0;
  int r = 0;
  int e = 0;
  int a = 0;
  int m = 0;
  int n_min = 0;
  int n_max = 0;
  std::string c_text;
  std::string t_text;
  std::string rb_text;
  std::uint64_t budget = ExactOptions{}.budget;
  bool no_prune = false;
  unsigned threads = 1;
  std::uint64_t samples = 0;
  SearchParams search;
};

inline void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

inline int cmd_count(const Options& o, std::ostream& out) {
  const Graph h = build_graph(o.graph);
  const EdgeColoring c = load_coloring(o.coloring);
  const std::uint64_t count = count_rainbow_copies(h, c, o.threads);
  const BigInt copies = copies_in_complete(h, c.vertices());
  const Rational fraction = make_rational(BigInt(count), copies);
  if (o.json) {
    ordered_json j;
    j["graph"] = o.graph;
    j["n"] = c.vertices();
    j["r"] = c.colors_available();
    j["count"] = count;
    j["copies"] = copies.str();
    j["fraction_exact"] = to_exact_string(fraction);
    j["fraction_decimal"] = decimal(fraction);
    emit(out, j);
  } else {
    out << count << "  fraction=" << boost::multiprecision::numerator(fraction) << '/'
        << boost::multiprecision::denominator(fraction) << "  (" << decimal(fraction) << " of " << copies
        << " copies)\n";
  }
  return 0;
}

inline int cmd_baseline(const Options& o, std::ostream& out) {
  const Rational b = random_baseline(o.e, o.r);
  if (o.json) {
    ordered_json j;
    j["edges"] = o.e;
    j["colors"] = o.r;
    j["baseline_exact"] = to_exact_string(b);
    j["baseline_decimal"] = decimal(b);
    emit(out, j);
  } else {
    out << boost::multiprecision::numerator(b) << '/' << boost::multiprecision::denominator(b) << " ≈ " << decimal(b)
        << '\n';
  }
  return 0;
}

inline void report_search(const Options& o, const Graph& h, const SearchResult& result, std::ostream& out) {
  if (!o.out_path.empty()) write_file(o.out_path, serialize_coloring(result.witness) + "\n");
  const ReportRow row = make_row(o.graph, h, o.n, o.r, result);
  if (o.json) {
    ordered_json j = row.to_json();
    j["evaluations"] = result.evaluations;
    j["witness"] = coloring_to_json(result.witness);
    emit(out, j);
  } else {
    out << (result.exact ? "rb" : "rb >=") << ' ' << result.value << "  fraction=" << to_exact_string(result.fraction)
        << " (" << decimal(result.fraction) << ")  baseline=" << to_exact_string(row.baseline) << " ("
        << decimal(row.baseline) << ")  " << row.annotation() << "  evaluations=" << result.evaluations << '\n';
  }
}

inline int cmd_brute(const Options& o, std::ostream& out) {
  const Graph h = build_graph(o.graph);
  const SearchResult result = exact_rb(h, o.n, o.r, {o.budget, !o.no_prune});
  report_search(o, h, result, out);
  return 0;
}

inline SearchParams search_params(const Options& o) {
  SearchParams p = o.search;
  if (o.rule == "greedy") p.rule = AcceptanceRule::greedy;
  else if (o.rule == "anneal") p.rule = AcceptanceRule::annealing;
  else fail(ErrorKind::parse, "unknown rule '" + o.rule + "'");
  p.threads = o.threads;
  return p;
}

inline int cmd_search(const Options& o, std::ostream& out) {
  const Graph h = build_graph(o.graph);
  std::optional<EdgeColoring> warm;
  if (!o.warm_path.empty()) warm = load_coloring(o.warm_path);
  const SearchResult result = local_search(h, o.n, o.r, search_params(o), warm);
  report_search(o, h, result, out);
  return 0;
}

inline int cmd_blowup(const Options& o, std::ostream& out) {
  const EdgeColoring base = load_coloring(o.base);
  const EdgeColoring result = blow_up(base, o.n);
  write_file(o.out_path, serialize_coloring(result) + "\n");
  std::optional<std::uint64_t> count;
  std::optional<Rational> fraction;
  if (!o.graph.empty()) {
    const Graph h = build_graph(o.graph);
    count = count_rainbow_copies(h, result, o.threads);
    fraction = make_rational(BigInt(*count), copies_in_complete(h, o.n));
  }
  if (o.json) {
    ordered_json j;
    j["base"] = o.base;
    j["n"] = o.n;
    j["r"] = result.colors_available();
    j["out"] = o.out_path;
    if (count) {
      j["graph"] = o.graph;
      j["count"] = *count;
      j["fraction_exact"] = to_exact_string(*fraction);
      j["fraction_decimal"] = decimal(*fraction);
    }
    emit(out, j);
  } else {
    out << "wrote blow-up of " << o.base << " on " << o.n << " vertices (" << result.colors_available()
        << " colors) to " << o.out_path << '\n';
    if (count)
      out << o.graph << " rainbow copies: " << *count << "  fraction=" << to_exact_string(*fraction) << " ("
          << decimal(*fraction) << ")\n";
  }
  return 0;
}

inline std::string verdict(bool b) { return b ? "TRUE" : "FALSE"; }

inline int cmd_bounds_complete(const Options& o, std::ostream& out) {
  const auto cert = complete_graph_criterion(o.a);
  const auto pairs = static_cast<std::int64_t>(o.a) * (o.a - 1) / 2;
  if (o.json) {
    ordered_json j;
    j["criterion"] = "complete";
    j["a"] = o.a;
    j["colors"] = pairs;
    j["holds"] = cert.holds;
    j["lhs"] = to_exact_string(cert.lhs);
    j["rhs"] = to_exact_string(cert.rhs);
    emit(out, j);
  } else {
    out << "K" << o.a << " not " << pairs << "-anti-common: " << verdict(cert.holds) << "  (a!/(a^a-a) = "
        << to_exact_string(cert.lhs) << " vs N!/N^N = " << to_exact_string(cert.rhs) << ")\n";
  }
  return 0;
}

inline int cmd_bounds_dense1(const Options& o, std::ostream& out) {
  const long double c = parse_real(o.c_text);
  const auto result = dense1_criterion(o.m, o.e, c);
  const auto pairs = static_cast<std::int64_t>(o.m) * (o.m - 1) / 2;
  if (o.json) {
    ordered_json j;
    j["criterion"] = "dense1";
    j["m"] = o.m;
    j["e"] = o.e;
    j["c"] = decimal(static_cast<double>(c));
    j["applicable"] = result.applicable;
    j["holds"] = result.holds;
    if (result.applicable) {
      j["log_lhs"] = decimal(static_cast<double>(result.log_lhs));
      j["log_rhs"] = decimal(static_cast<double>(result.log_rhs));
    }
    emit(out, j);
  } else {
    out << "applicable: " << verdict(result.applicable) << "  not " << pairs
        << "-anti-common: " << verdict(result.holds);
    if (result.applicable)
      out << "  (c+(1-c)log(1-c) = " << decimal(static_cast<double>(result.log_lhs)) << " vs "
          << decimal(static_cast<double>(result.log_rhs)) << ")";
    out << '\n';
  }
  return 0;
}

inline int cmd_bounds_dense2(const Options& o, std::ostream& out) {
  const bool holds = dense2_criterion(o.m, o.e);
  const auto pairs = static_cast<std::int64_t>(o.m) * (o.m - 1) / 2;
  if (o.json) {
    ordered_json j;
    j["criterion"] = "dense2";
    j["m"] = o.m;
    j["e"] = o.e;
    j["holds"] = holds;
    j["e_squared"] = static_cast<std::int64_t>(o.e) * o.e;
    j["m_squared_times_m_minus_1"] = static_cast<std::int64_t>(o.m) * o.m * (o.m - 1);
    emit(out, j);
  } else {
    out << "not " << pairs << "-anti-common: " << verdict(holds) << "  (e^2 = " << static_cast<std::int64_t>(o.e) * o.e
        << " vs m^2(m-1) = " << static_cast<std::int64_t>(o.m) * o.m * (o.m - 1) << ")\n";
  }
  return 0;
}

inline int cmd_bounds_recolor(const Options& o, std::ostream& out) {
  BigInt rb_next;
  try {
    rb_next = BigInt(o.rb_text);
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "bad integer '" + o.rb_text + "'");
  }
  const Rational factor = recoloring_factor(o.r, o.e);
  const Rational bound = recoloring_lower_bound(rb_next, o.r, o.e);
  if (o.json) {
    ordered_json j;
    j["criterion"] = "recolor";
    j["rb_next"] = rb_next.str();
    j["r"] = o.r;
    j["e"] = o.e;
    j["factor"] = to_exact_string(factor);
    j["lower_bound"] = to_exact_string(bound);
    emit(out, j);
  } else {
    out << "rb_" << o.r << " >= " << to_exact_string(factor) << " * " << rb_next << " = " << to_exact_string(bound)
        << " (" << decimal(bound) << ")\n";
  }
  return 0;
}

inline int cmd_bounds_blowup(const Options& o, std::ostream& out) {
  BigInt t;
  try {
    t = BigInt(o.t_text);
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "bad integer '" + o.t_text + "'");
  }
  const auto rec = blowup_coefficient(o.a, t, o.m);
  if (o.json) {
    ordered_json j;
    j["criterion"] = "blowup-coef";
    j["a"] = o.a;
    j["t"] = t.str();
    j["m"] = o.m;
    j["coefficient"] = to_exact_string(rec.coefficient);
    emit(out, j);
  } else {
    out << "F(n) >= " << to_exact_string(rec.coefficient) << " n^" << o.m << " + O(n^" << o.m - 1 << ")  ("
        << decimal(rec.coefficient) << ")\n";
  }
  return 0;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const Graph h = build_graph(o.graph);
  TableMode mode;
  if (o.mode == "exact") mode = TableMode::exact;
  else if (o.mode == "search") mode = TableMode::search;
  else fail(ErrorKind::parse, "unknown mode '" + o.mode + "'");
  const auto table = convergence_table(h, o.r, o.n_min, o.n_max, mode, {o.budget, !o.no_prune}, search_params(o));

  std::vector<ReportRow> rows;
  for (const auto& row : table.rows) rows.push_back(make_row(o.graph, h, row.n, o.r, row.result));
  const std::string monotone = table.monotone ? (*table.monotone ? "monotone" : "VIOLATED") : "skipped (heuristic rows)";

  if (!o.csv_path.empty()) {
    std::string csv = ReportRow::csv_header() + "\n";
    for (const auto& row : rows) csv += row.csv() + "\n";
    write_file(o.csv_path, csv);
  }
  if (o.json) {
    ordered_json j;
    j["graph"] = o.graph;
    j["r"] = o.r;
    j["mode"] = o.mode;
    j["monotonicity"] = monotone;
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(row.to_json());
    j["rows"] = std::move(arr);
    emit(out, j);
  } else {
    out << std::left << std::setw(6) << "n" << std::setw(4) << "r" << std::setw(14) << "rb" << std::setw(7) << "kind"
        << std::setw(16) << "fraction" << std::setw(24) << "exact" << "note\n";
    for (const auto& row : rows) print_row(out, row);
    out << "monotonicity: " << monotone << '\n';
  }
  return 0;
}

/// Monte Carlo estimate of the rainbow fraction under uniform random colorings.
/// Sample i uses random_coloring(n, r, mix_seed(seed, i)).
struct MonteCarloSummary {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
};

inline MonteCarloSummary monte_carlo(const Graph& h, int n, int r, std::uint64_t seed, std::uint64_t samples,
                                     unsigned threads = 1) {
  if (samples < 1) fail(ErrorKind::domain, "need at least one sample");
  const RainbowCounter counter(h);
  const double copies = copies_in_complete(h, n).convert_to<double>();
  double sum = 0, sum_sq = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double f = static_cast<double>(counter.count(random_coloring(n, r, mix_seed(seed, i)), threads)) / copies;
    sum += f;
    sum_sq += f * f;
  }
  MonteCarloSummary s;
  s.samples = samples;
  s.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double var = (sum_sq - sum * s.mean) / static_cast<double>(samples - 1);
    s.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return s;
}

inline int cmd_mc(const Options& o, std::ostream& out) {
  const Graph h = build_graph(o.graph);
  const auto s = monte_carlo(h, o.n, o.r, o.search.seed, o.samples, o.threads);
  const Rational baseline = random_baseline(h.size(), o.r);
  if (o.json) {
    ordered_json j;
    j["graph"] = o.graph;
    j["n"] = o.n;
    j["r"] = o.r;
    j["seed"] = o.search.seed;
    j["samples"] = s.samples;
    j["mean"] = decimal(s.mean);
    j["standard_error"] = decimal(s.standard_error);
    j["baseline_exact"] = to_exact_string(baseline);
    j["baseline_decimal"] = decimal(baseline);
    emit(out, j);
  } else {
    out << "mean=" << decimal(s.mean) << "  stderr=" << decimal(s.standard_error) << "  samples=" << s.samples
        << "  baseline=" << to_exact_string(baseline) << " (" << decimal(baseline) << ")\n";
  }
  return 0;
}

/// Entry point shared by the binary and the tests. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Anti-Ramsey multiplicity toolkit: rainbow counts, searches, blow-ups and bounds", "antiramsey"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit one JSON object"); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Count rainbow copies of a graph in a coloring");
  count->add_option("--graph", o.graph, "Graph spec")->required();
  count->add_option("--coloring", o.coloring, "Coloring file or builtin name")->required();
  add_json(count);
  add_threads(count);

  auto* baseline = app.add_subcommand("baseline", "Random-coloring rainbow fraction");
  baseline->add_option("--edges", o.e, "Edge count e")->required();
  baseline->add_option("--colors", o.r, "Color count r")->required();
  add_json(baseline);

  auto* brute = app.add_subcommand("brute", "Exact rb by exhaustive enumeration");
  brute->add_option("--graph", o.graph, "Graph spec")->required();
  brute->add_option("--n", o.n, "Host order")->required();
  brute->add_option("--colors", o.r, "Color count")->required();
  brute->add_option("--budget", o.budget, "Maximum colorings to enumerate");
  brute->add_flag("--no-prune", o.no_prune, "Disable color-symmetry pruning");
  brute->add_option("--out", o.out_path, "Write the witness coloring here");
  add_json(brute);

  auto* search = app.add_subcommand("search", "Heuristic lower bound by local search");
  search->add_option("--graph", o.graph, "Graph spec")->required();
  search->add_option("--n", o.n, "Host order")->required();
  search->add_option("--colors", o.r, "Color count")->required();
  search->add_option("--seed", o.search.seed, "Random seed")->required();
  search->add_option("--restarts", o.search.restarts, "Independent restarts");
  search->add_option("--iters", o.search.iterations, "Iterations per restart");
  search->add_option("--rule", o.rule, "greedy or anneal");
  search->add_option("--t0", o.search.initial_temperature, "Initial annealing temperature");
  search->add_option("--cooling", o.search.cooling, "Geometric cooling factor in (0,1)");
  search->add_option("--warm", o.warm_path, "Start every restart from this coloring");
  search->add_option("--out", o.out_path, "Write the witness coloring here");
  add_json(search);
  add_threads(search);

  auto* blowup = app.add_subcommand("blowup", "Recursive blow-up of a base coloring");
  blowup->add_option("--base", o.base, "Base coloring file or builtin name")->required();
  blowup->add_option("--n", o.n, "Target order")->required();
  blowup->add_option("--out", o.out_path, "Output coloring file")->required();
  blowup->add_option("--graph", o.graph, "Also count rainbow copies of this graph");
  add_json(blowup);
  add_threads(blowup);

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and criteria");
  bounds->require_subcommand(1);
  auto* complete = bounds->add_subcommand("complete", "K_a is not binom(a,2)-anti-common");
  complete->add_option("--a", o.a, "Order of the complete graph")->required();
  add_json(complete);
  auto* dense1 = bounds->add_subcommand("dense1", "Edge-density criterion with constant c");
  dense1->add_option("--m", o.m, "Vertices")->required();
  dense1->add_option("--e", o.e, "Edges")->required();
  dense1->add_option("--c", o.c_text, "Constant in (0,1): decimal, p/q or p/sqrt(q)")->required();
  add_json(dense1);
  auto* dense2 = bounds->add_subcommand("dense2", "e > m sqrt(m-1) criterion");
  dense2->add_option("--m", o.m, "Vertices")->required();
  dense2->add_option("--e", o.e, "Edges")->required();
  add_json(dense2);
  auto* recolor = bounds->add_subcommand("recolor", "Lower bound on rb_r from rb_{r+1}");
  recolor->add_option("--rb", o.rb_text, "rb_{r+1}(H;n)")->required();
  recolor->add_option("--r", o.r, "r")->required();
  recolor->add_option("--e", o.e, "Edges of H")->required();
  add_json(recolor);
  auto* blowup_coef = bounds->add_subcommand("blowup-coef", "Leading coefficient of the blow-up recurrence");
  blowup_coef->add_option("--a", o.a, "Base order")->required();
  blowup_coef->add_option("--t", o.t_text, "Transversal rainbow copies")->required();
  blowup_coef->add_option("--m", o.m, "Pattern order")->required();
  add_json(blowup_coef);

  auto* table = app.add_subcommand("table", "Convergence table of rb over a range of n");
  table->add_option("--graph", o.graph, "Graph spec")->required();
  table->add_option("--colors", o.r, "Color count")->required();
  table->add_option("--n-min", o.n_min, "Smallest n")->required();
  table->add_option("--n-max", o.n_max, "Largest n")->required();
  table->add_option("--mode", o.mode, "exact or search");
  table->add_option("--csv", o.csv_path, "Write rows as CSV");
  table->add_option("--budget", o.budget, "Exhaustive budget per row");
  table->add_flag("--no-prune", o.no_prune, "Disable color-symmetry pruning");
  table->add_option("--seed", o.search.seed, "Seed for search mode");
  table->add_option("--restarts", o.search.restarts, "Restarts for search mode");
  table->add_option("--iters", o.search.iterations, "Iterations for search mode");
  add_json(table);

  auto* mc = app.add_subcommand("mc", "Monte Carlo rainbow fraction of uniform random colorings");
  mc->add_option("--graph", o.graph, "Graph spec")->required();
  mc->add_option("--n", o.n, "Host order")->required();
  mc->add_option("--colors", o.r, "Color count")->required();
  mc->add_option("--seed", o.search.seed, "Random seed")->required();
  mc->add_option("--samples", o.samples, "Number of sampled colorings")->required();
  add_json(mc);
  add_threads(mc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*baseline) return cmd_baseline(o, out);
    if (*brute) return cmd_brute(o, out);
    if (*search) return cmd_search(o, out);
    if (*blowup) return cmd_blowup(o, out);
    if (*complete) return cmd_bounds_complete(o, out);
    if (*dense1) return cmd_bounds_dense1(o, out);
    if (*dense2) return cmd_bounds_dense2(o, out);
    if (*recolor) return cmd_bounds_recolor(o, out);
    if (*blowup_coef) return cmd_bounds_blowup(o, out);
    if (*table) return cmd_table(o, out);
    if (*mc) return cmd_mc(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace antiramsey::cli
