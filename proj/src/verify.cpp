#include "twoxor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "twoxor/enumeration.hpp"
#include "twoxor/graph.hpp"
#include "twoxor/montecarlo.hpp"
#include "twoxor/sampler.hpp"
#include "twoxor/special_functions.hpp"
#include "twoxor/theory.hpp"
#include "twoxor/xorsat.hpp"

namespace twoxor {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::append(std::vector<CheckResult> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

namespace {

constexpr std::uint64_t kVerifySeed = 0x5eed2024;

CheckResult check(std::string suite, std::string name, bool ok, std::string detail = {}) {
  return {std::move(suite), std::move(name), ok, std::move(detail)};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::vector<CheckResult> graph_suite() {
  std::vector<CheckResult> out;
  Rng rng(SeedSpec{kVerifySeed, 1});
  std::size_t mismatches = 0, rank_violations = 0, monotone_violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng.below(100);
    const double p = rng.uniform() * 4.0 / static_cast<double>(n);
    const Graph g = sample_gnp(n, std::min(1.0, p), rng);
    const auto s = component_summary(g);
    const auto fast = graph_stats(g);
    if (s.component_count != fast.component_count || s.cyclic_rank != fast.cyclic_rank ||
        s.max_excess != fast.max_excess)
      ++mismatches;
    const bool forest = s.max_excess == -1;
    if (s.cyclic_rank < 0 || (s.cyclic_rank == 0) != forest) ++rank_violations;
    // add one absent edge and check monotonicity
    if (g.edge_count() < pair_count(n)) {
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      for (;;) {
        const Edge e = pair_at(n, rng.below(pair_count(n)));
        if (!std::binary_search(edges.begin(), edges.end(), e)) {
          edges.push_back(e);
          break;
        }
      }
      const auto bigger = component_summary(build_graph(n, std::move(edges)));
      if (bigger.cyclic_rank < s.cyclic_rank || bigger.max_excess < s.max_excess) ++monotone_violations;
    }
  }
  out.push_back(check("graph", "summary_matches_union_find", mismatches == 0, str(mismatches) + " mismatches"));
  out.push_back(check("graph", "rank_nonnegative_forest_iff_zero", rank_violations == 0, str(rank_violations)));
  out.push_back(check("graph", "edge_insertion_monotone", monotone_violations == 0, str(monotone_violations)));
  const auto k4 = component_summary(complete_graph(4));
  out.push_back(check("graph", "k4_summary", k4.component_count == 1 && k4.cyclic_rank == 3 && k4.max_excess == 2));
  return out;
}

std::vector<CheckResult> sampler_suite() {
  std::vector<CheckResult> out;
  const SeedSpec seed{kVerifySeed, 7};
  const bool same = sample_gnp(2000, 1.5 / 2000, seed) == sample_gnp(2000, 1.5 / 2000, seed) &&
                    sample_gnm(2000, 1500, seed) == sample_gnm(2000, 1500, seed) &&
                    sample_labels(1000, 0.3, seed) == sample_labels(1000, 0.3, seed);
  out.push_back(check("sampler", "reproducible_streams", same));
  out.push_back(check("sampler", "critical_m_rounding",
                      critical_m(1000, 0) == 500 && critical_m(1000, 1) == 550 && critical_m(1000, -1) == 450));
  // Binomial edge count mean, 4 sigma.
  const std::size_t n = 2000;
  const double p = 1.0 / n;
  const double total = static_cast<double>(pair_count(n));
  double sum = 0.0;
  const int reps = 400;
  for (int i = 0; i < reps; ++i)
    sum += static_cast<double>(sample_gnp(n, p, SeedSpec{kVerifySeed, 100 + static_cast<std::uint64_t>(i)}).edge_count());
  const double mean = sum / reps;
  const double se = std::sqrt(total * p * (1 - p) / reps);
  out.push_back(check("sampler", "gnp_edge_count_mean", std::abs(mean - total * p) <= 4 * se,
                      "mean " + str(mean) + " expected " + str(total * p)));
  return out;
}

std::vector<CheckResult> xorsat_suite() {
  std::vector<CheckResult> out;
  Rng rng(SeedSpec{kVerifySeed, 2});
  std::size_t disagreements = 0, bipartite_mismatch = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + rng.below(49);
    const Graph g = sample_gnp(n, std::min(1.0, rng.uniform() * 3.0 / static_cast<double>(n)), rng);
    const EdgeLabels labels = sample_labels(g.edge_count(), 0.5, rng);
    if (solve(g, labels, false).satisfiable != gf2_solvability_oracle(g, labels)) ++disagreements;
    if (is_bipartite(g) != solve(g, EdgeLabels(g.edge_count(), 1), false).satisfiable) ++bipartite_mismatch;
  }
  out.push_back(check("xorsat", "union_find_matches_gf2", disagreements == 0, str(disagreements) + " disagreements"));
  out.push_back(check("xorsat", "bipartite_is_all_ones_system", bipartite_mismatch == 0));

  // Exhaustive: solvable label fraction equals 2^{-X} for every graph on n <= 5.
  std::size_t graphs = 0, failures = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) edges.push_back(slots[i]);
      const Graph g = build_graph(n, edges);
      const auto e = g.edge_count();
      std::uint64_t solvable = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e); ++bits) {
        EdgeLabels labels(e);
        for (std::size_t i = 0; i < e; ++i) labels[i] = static_cast<std::uint8_t>(bits >> i & 1);
        solvable += solve(g, labels, false).satisfiable;
      }
      const auto x = component_summary(g).cyclic_rank;
      if (solvable << x != (std::uint64_t{1} << e)) ++failures;
      ++graphs;
    }
  }
  out.push_back(check("xorsat", "solvable_fraction_is_two_to_minus_rank", failures == 0,
                      str(graphs) + " graphs, " + str(failures) + " failures"));
  const Graph tri = complete_graph(3);
  out.push_back(check("xorsat", "triangle_general_phat",
                      conditional_solvability_probability(tri, Rational(1, 4)) == Rational(9, 16)));
  return out;
}

std::vector<CheckResult> special_suite() {
  std::vector<CheckResult> out;
  double worst = 0.0;
  for (double y : {0.25, 3.25, 6.25, 9.25})
    for (double mu : {-5.0, -2.0, 0.0, 2.0, 5.0}) {
      const double s = a_series(y, mu).value;
      const double c = a_contour(y, mu).value;
      worst = std::max(worst, std::abs(s - c) / std::abs(s));
    }
  out.push_back(check("special_functions", "series_matches_contour", worst <= 1e-8, "max rel diff " + str(worst)));
  const double a1 = a_contour(2.25, 1.0, 0.5).value, a2 = a_contour(2.25, 1.0, 2.0).value;
  out.push_back(check("special_functions", "contour_independent_of_line", std::abs(a1 - a2) <= 1e-9,
                      "diff " + str(std::abs(a1 - a2))));
  const double ratio = a_series(0.25, -30.0).value / a_asymptotic(0.25, -30.0).value;
  out.push_back(check("special_functions", "negative_asymptotics_mu_minus30", std::abs(ratio - 1.0) <= 0.02,
                      "ratio " + str(ratio)));
  out.push_back(check("special_functions", "reciprocal_gamma_poles",
                      reciprocal_gamma(0.0) == 0.0 && reciprocal_gamma(-3.0) == 0.0 && reciprocal_gamma(1.0) == 1.0));
  return out;
}

std::vector<CheckResult> theory_suite() {
  std::vector<CheckResult> out;
  double worst = 0.0;
  for (int gi = 1; gi <= 9; ++gi)
    for (double phat : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double gamma = gi / 10.0;
      worst = std::max(worst, std::abs(std::exp(-expected_bad_cycles(gamma, phat)) - subcritical_graph(gamma, phat)));
    }
  out.push_back(check("theory", "bad_cycle_identity", worst <= 1e-12, "max diff " + str(worst)));
  const double c = c_lambda(-8.0);
  const double band = c / c_lambda_asymptotic(-8.0);
  out.push_back(check("theory", "c_negative_branch_lambda_minus8", band >= 0.9 && band <= 1.1, "ratio " + str(band)));
  bool positive = true;
  for (double lambda = -10.0; lambda <= 6.0; lambda += 1.0) positive = positive && c_lambda(lambda) > 0.0;
  out.push_back(check("theory", "c_positive_on_grid", positive));
  return out;
}

std::vector<CheckResult> enumeration_suite() {
  std::vector<CheckResult> out;
  const auto rec = count_connected(9);
  const auto brute = count_connected_brute(6);
  bool equal = true;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 0; m <= n * (n - 1) / 2; ++m) equal = equal && rec.at(n, m) == brute.at(n, m);
  out.push_back(check("enumeration", "recurrence_matches_brute_force", equal));
  bool cayley = true;
  for (std::size_t n = 1; n <= 9; ++n) {
    BigInt expected = 1;
    if (n >= 2) mpz_ui_pow_ui(expected.get_mpz_t(), n, n - 2);
    cayley = cayley && rec.at(n, n - 1) == expected;
  }
  out.push_back(check("enumeration", "cayley_trees", cayley));
  const auto even = count_connected_even(6);
  bool bound = true;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = n - 1; m <= n * (n - 1) / 2; ++m) {
      BigInt scaled = even.at(n, m);
      scaled <<= static_cast<mp_bitcnt_t>(m + 1 - n);
      bound = bound && scaled <= rec.at(n, m);
    }
  out.push_back(check("enumeration", "even_cycle_bound", bound));
  bool trees = true;
  for (std::size_t n = 2; n <= 7; ++n) trees = trees && verify_tree_minimizer(n);
  out.push_back(check("enumeration", "tree_even_paths_minimized_by_path", trees));
  const Rational exact = exact_solvability(3, GnmExact{3}, Rational(1, 2));
  out.push_back(check("enumeration", "triangle_exact", exact == Rational(1, 2)));
  return out;
}

struct Suite {
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"graph", graph_suite},
      {"sampler", sampler_suite},
      {"xorsat", xorsat_suite},
      {"sequences",
       [] { return check_sequence_tables(epsilon_seq(100), f_seq(100), wright_c_seq(100)); }},
      {"special_functions", special_suite},
      {"theory", theory_suite},
      {"enumeration", enumeration_suite},
  };
  return all;
}

}  // namespace

std::vector<CheckResult> check_sequence_tables(const SequenceTable& eps, const SequenceTable& f,
                                               const SequenceTable& c) {
  std::vector<CheckResult> out;
  const std::string s = "sequences";
  out.push_back(check(s, "golden_values",
                      eps[1] == Rational(5, 24) && eps[2] == Rational(385, 1152) && f[1] == Rational(5, 48) &&
                          f[2] == Rational(745, 4608) && c[1] == Rational(5, 24) && c[2] == Rational(5, 16)));
  const std::size_t top = std::min({eps.last_index(), f.last_index(), c.last_index()});
  std::size_t bound_fail = 0, conv_fail = 0, rec_fail = 0, sign_fail = 0;
  for (std::size_t r = 1; r <= top; ++r) {
    const Rational upper = eps[r] / 2;
    const Rational lower = upper * Rational(static_cast<long>(r) - 1, static_cast<long>(r));
    if (f[r] < lower || f[r] > upper) ++bound_fail;
    Rational conv = 0;
    for (std::size_t k = 0; k <= r; ++k) conv += f[k] * f[r - k];
    if (conv != eps[r]) ++conv_fail;
    Rational rhs = 0;
    for (std::size_t k = 1; k <= r; ++k) rhs += static_cast<long>(k) * c[k] * eps[r - k];
    if (rhs != static_cast<long>(r) * eps[r]) ++rec_fail;
    if (sgn(eps[r]) <= 0 || sgn(f[r]) <= 0 || sgn(c[r]) <= 0) ++sign_fail;
  }
  out.push_back(check(s, "f_two_sided_bound", bound_fail == 0, str(bound_fail) + " violations up to r=" + str(top)));
  out.push_back(check(s, "convolution_square", conv_fail == 0, str(conv_fail) + " violations"));
  out.push_back(check(s, "wright_recurrence", rec_fail == 0, str(rec_fail) + " violations"));
  out.push_back(check(s, "positivity", sign_fail == 0));
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

VerifyReport run_verify(const std::vector<std::string>& wanted) {
  for (const auto& w : wanted) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), w) == names.end())
      throw std::invalid_argument("unknown verify suite '" + w + "'");
  }
  VerifyReport report;
  for (const auto& s : suites()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), s.name) == wanted.end()) continue;
    try {
      report.append(s.run());
    } catch (const std::exception& e) {
      report.checks.push_back(check(s.name, "suite_completed", false, e.what()));
    }
  }
  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out << "RESULT suite=" << c.suite << " check=" << c.name << " status=" << (c.passed ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << " detail=\"" << c.detail << '"';
    out << '\n';
    failed += !c.passed;
  }
  out << report.checks.size() - failed << " of " << report.checks.size() << " checks passed";
  if (failed) out << "; " << failed << " FAILED";
  out << '\n';
}

int exit_code(const VerifyReport& report) { return report.passed() ? 0 : 1; }

}  // namespace twoxor
