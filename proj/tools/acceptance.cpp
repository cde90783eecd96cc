// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "twoxor/enumeration.hpp"
#include "twoxor/graph.hpp"
#include "twoxor/montecarlo.hpp"
#include "twoxor/sampler.hpp"
#include "twoxor/sequences.hpp"
#include "twoxor/special_functions.hpp"
#include "twoxor/theory.hpp"
#include "twoxor/xorsat.hpp"

using namespace twoxor;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

// Criterion 1: count solvable label vectors by brute force for every labeled graph.
Outcome solvable_fraction_exact() {
  std::uint64_t graphs = 0, failures = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) edges.push_back(slots[i]);
      const Graph g = build_graph(n, edges);
      const std::size_t m = g.edge_count();
      std::uint64_t solvable = 0;
      EdgeLabels labels(m);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        for (std::size_t i = 0; i < m; ++i) labels[i] = static_cast<std::uint8_t>(bits >> i & 1);
        solvable += solve(g, labels, false).satisfiable;
      }
      // solvable / 2^m == 2^{-X} exactly
      const auto x = static_cast<std::uint64_t>(component_summary(g).cyclic_rank);
      if ((solvable << x) != (std::uint64_t{1} << m)) ++failures;
      ++graphs;
    }
  }
  return {failures == 0, std::to_string(graphs) + " labeled graphs, " + std::to_string(failures) + " mismatches"};
}

Outcome solver_cross_oracle() {
  Rng rng(SeedSpec{kSeed, 1});
  std::uint64_t disagreements = 0;
  const int instances = 10000;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(50);
    const double p = std::min(1.0, rng.uniform() * 3.0 / static_cast<double>(n));
    const Graph g = sample_gnp(n, p, rng);
    const EdgeLabels labels = sample_labels(g.edge_count(), rng.uniform(), rng);
    if (solve(g, labels, false).satisfiable != gf2_solvability_oracle(g, labels)) ++disagreements;
  }
  return {disagreements == 0, std::to_string(instances) + " instances, " + std::to_string(disagreements) +
                                  " disagreements"};
}

Outcome sequence_golden() {
  const auto eps = epsilon_seq(100);
  const auto f = f_seq(100);
  const auto c = wright_c_seq(100);
  bool ok = eps[1] == Rational(5, 24) && eps[2] == Rational(385, 1152) && f[1] == Rational(5, 48) &&
            f[2] == Rational(745, 4608) && c[1] == Rational(5, 24) && c[2] == Rational(5, 16);
  std::size_t bound = 0, conv = 0;
  for (std::size_t r = 1; r <= 100; ++r) {
    const Rational hi = eps[r] / 2;
    const Rational lo = hi * Rational(static_cast<long>(r - 1), static_cast<long>(r));
    if (f[r] < lo || f[r] > hi) ++bound;
    Rational s = 0;
    for (std::size_t k = 0; k <= r; ++k) s += f[k] * f[r - k];
    if (s != eps[r]) ++conv;
  }
  ok = ok && bound == 0 && conv == 0;
  return {ok, "golden values " + std::string(ok ? "exact" : "checked") + ", bound violations " +
                  std::to_string(bound) + ", convolution violations " + std::to_string(conv)};
}

Outcome a_series_vs_contour() {
  double worst = 0.0, worst_a = 0.0;
  for (double y : {0.25, 3.25, 6.25, 9.25})
    for (double mu : {-5.0, -2.0, 0.0, 2.0, 5.0}) {
      const double s = a_series(y, mu).value;
      const double c = a_contour(y, mu).value;
      worst = std::max(worst, std::abs(s - c) / std::abs(s));
      for (double shift : {-0.5, 1.0}) {
        const double a = std::max(1.0, 1.0 - mu / 2.0) + shift;
        const double other = a_contour(y, mu, a).value;
        worst_a = std::max(worst_a, std::abs(other - c) / std::abs(c));
      }
    }
  return {worst <= 1e-8 && worst_a <= 1e-9,
          "max rel(series, contour) " + fmt(worst) + ", max rel change over a " + fmt(worst_a)};
}

Outcome a_asymptotics() {
  const double ratio = a_series(0.25, -30.0).value / a_asymptotic(0.25, -30.0).value;
  return {std::abs(ratio - 1.0) <= 0.02, "series/asymptotic " + fmt(ratio)};
}

Outcome subcritical() {
  const ModelSpec spec = ModelSpec::from_gamma(GraphModel::Gnp, 100000, 0.5, 0.5);
  const Estimate e = estimate_solvability(spec, 20000, SeedSpec{kSeed, 0}, Method::RaoBlackwell);
  const double theory = subcritical_graph(0.5, 0.5);
  const double tol = std::max(3.0 * e.std_error, 0.02 * theory);
  return {std::abs(e.mean - theory) <= tol, "estimate " + fmt(e.mean) + " +- " + fmt(e.std_error) +
                                                ", theory " + fmt(theory) + ", ratio " + fmt(e.mean / theory)};
}

// Criteria 7 and 8 share one sample of graphs.
const PairedRatio& critical_sample() {
  static const PairedRatio paired = [] {
    const ModelSpec spec{GraphModel::Gnp, 100000, 0.0, 0.5};
    return estimate_bipartite_ratio(spec, 20000, SeedSpec{kSeed, 1u << 20});
  }();
  return paired;
}

Outcome critical_window() {
  const auto& s = critical_sample();
  Prediction p = critical_prediction(100000, 0.0, 0.5);
  const Comparison cmp = compare_to_theory(s.half, p);
  return {cmp.ratio >= 0.9 && cmp.ratio <= 1.1, "estimate " + fmt(s.half.mean) + " +- " + fmt(s.half.std_error) +
                                                     ", theory " + fmt(p.value) + ", ratio " + fmt(cmp.ratio) +
                                                     ", z " + fmt(cmp.z)};
}

Outcome bipartite_ratio() {
  const auto& s = critical_sample();
  const double target = bipartite_factor();
  const double dev = std::abs(s.ratio - target);
  return {dev <= 3.0 * s.ratio_stderr, "ratio " + fmt(s.ratio) + " +- " + fmt(s.ratio_stderr) + ", target " +
                                           fmt(target) + ", deviation " + fmt(dev / s.ratio_stderr) + " sigma"};
}

Outcome counting() {
  const auto rec = count_connected(9);
  const auto brute = count_connected_brute(6);
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 0; m <= n * (n - 1) / 2; ++m) mismatches += rec.at(n, m) != brute.at(n, m);
  bool cayley = true;
  for (std::size_t n = 1; n <= 9; ++n) {
    BigInt expected = 1;
    if (n >= 2) mpz_ui_pow_ui(expected.get_mpz_t(), n, n - 2);
    cayley = cayley && rec.at(n, n - 1) == expected;
  }
  return {mismatches == 0 && cayley, std::to_string(mismatches) + " mismatches vs brute force, Cayley " +
                                         (cayley ? "holds" : "fails") + " for n <= 9"};
}

Outcome even_bound() {
  const auto all = count_connected(7);
  const auto even = count_connected_even(7);
  std::size_t violations = 0, cells = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t m = n - 1; m <= n * (n - 1) / 2; ++m) {
      BigInt lhs = even.at(n, m);
      lhs <<= static_cast<mp_bitcnt_t>(m + 1 - n);
      violations += lhs > all.at(n, m);
      ++cells;
    }
  return {violations == 0, std::to_string(cells) + " (n, m) cells, " + std::to_string(violations) + " violations"};
}

Outcome tree_minimizer() {
  bool ok = true;
  std::string detail;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto r = tree_minimizer_report(n);
    ok = ok && r.ok;
    detail += "n=" + std::to_string(n) + ":" + std::to_string(r.minimum) + "/" + std::to_string(r.expected) + " ";
  }
  detail.pop_back();
  return {ok, "min/expected " + detail};
}

Outcome bad_cycle_identity() {
  double worst = 0.0;
  for (int g = 1; g <= 9; ++g)
    for (double phat : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double gamma = g / 10.0;
      worst = std::max(worst, std::abs(std::exp(-expected_bad_cycles(gamma, phat)) - subcritical_graph(gamma, phat)));
    }
  return {worst <= 1e-12, "max abs difference " + fmt(worst)};
}

Outcome max_excess_scaling() {
  const double lambda = 4.0;
  const ModelSpec spec{GraphModel::Gnm, 1000000, lambda, 0.5};
  const Estimate e = estimate_max_excess(spec, 500, SeedSpec{kSeed, 1u << 24});
  const double scaled = e.mean / (lambda * lambda * lambda);
  return {scaled >= 0.53 && scaled <= 0.80,
          "mean excess " + fmt(e.mean) + " +- " + fmt(e.std_error) + ", / lambda^3 = " + fmt(scaled)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "solvable_fraction_exact", 10, solvable_fraction_exact},
      {2, "solver_cross_oracle", 10, solver_cross_oracle},
      {3, "sequence_golden_values", 5, sequence_golden},
      {4, "a_series_vs_contour", 30, a_series_vs_contour},
      {5, "a_negative_asymptotics", 1, a_asymptotics},
      {6, "subcritical_reproduction", 120, subcritical},
      {7, "critical_window_reproduction", 300, critical_window},
      {8, "bipartite_ratio", 300, bipartite_ratio},
      {9, "connected_counts", 30, counting},
      {10, "even_component_bound", 300, even_bound},
      {11, "tree_even_path_minimum", 30, tree_minimizer},
      {12, "bad_cycle_identity", 1, bad_cycle_identity},
      {13, "max_excess_scaling", 600, max_excess_scaling},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("[%s] criterion %2d %-30s %s; %.2fs (limit %gs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
