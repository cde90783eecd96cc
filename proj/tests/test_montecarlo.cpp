#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "twoxor/enumeration.hpp"
#include "twoxor/montecarlo.hpp"
#include "twoxor/theory.hpp"

using namespace twoxor;

namespace {

// lambda that puts the G(n,p) edge probability at p.
double lambda_for_p(std::size_t n, double p) {
  const double nd = static_cast<double>(n);
  return (p * nd - 1) * std::cbrt(nd);
}

}  // namespace

TEST_CASE("empty graphs are always solvable") {
  const ModelSpec spec{GraphModel::Gnm, 50, -std::cbrt(50.0), 0.5};
  REQUIRE(critical_m(spec.n, spec.lambda) == 0);
  for (Method m : {Method::Indicator, Method::RaoBlackwell}) {
    const Estimate e = estimate_solvability(spec, 500, SeedSpec{1, 0}, m);
    CHECK(e.mean == 1.0);
    CHECK(e.std_error == 0.0);
    CHECK(e.samples == 500);
  }
  const Estimate ex = estimate_max_excess(spec, 200, SeedSpec{1, 0});
  CHECK(ex.mean == -1.0);
  CHECK(ex.std_error == 0.0);
}

TEST_CASE("Rao-Blackwell estimate matches exact enumeration on five vertices") {
  const ModelSpec spec{GraphModel::Gnp, 5, lambda_for_p(5, 0.3), 0.5};
  REQUIRE(critical_p(5, spec.lambda) == doctest::Approx(0.3).epsilon(1e-14));
  const double exact = exact_solvability(5, GnpExact{mpq_class(3, 10)}, mpq_class(1, 2)).get_d();
  const Estimate rb = estimate_solvability(spec, 1000000, SeedSpec{2, 0}, Method::RaoBlackwell);
  CHECK(std::abs(rb.mean - exact) <= 4 * rb.std_error);

  const Estimate ind = estimate_solvability(spec, 1000000, SeedSpec{3, 0}, Method::Indicator);
  CHECK(std::abs(ind.mean - exact) <= 4 * ind.std_error);
  CHECK(std::abs(ind.mean - rb.mean) <= 4 * std::hypot(ind.std_error, rb.std_error));
  CHECK(rb.std_error < ind.std_error);
  CHECK(ind.wilson_low <= ind.mean);
  CHECK(ind.wilson_high >= ind.mean);
}

TEST_CASE("phat = 1 estimates agree with exact enumeration") {
  const ModelSpec spec{GraphModel::Gnm, 6, 0.0, 1.0};
  const auto m = critical_m(6, 0.0);
  const double exact = exact_solvability(6, GnmExact{m}, mpq_class(1)).get_d();
  const Estimate rb = estimate_solvability(spec, 200000, SeedSpec{4, 0}, Method::RaoBlackwell);
  const Estimate ind = estimate_solvability(spec, 200000, SeedSpec{5, 0}, Method::Indicator);
  CHECK(std::abs(rb.mean - exact) <= 4 * rb.std_error);
  CHECK(std::abs(ind.mean - exact) <= 4 * ind.std_error);
}

TEST_CASE("general phat goes through the indicator only") {
  const ModelSpec spec{GraphModel::Gnp, 5, lambda_for_p(5, 0.5), 0.25};
  CHECK_THROWS_AS(estimate_solvability(spec, 10, SeedSpec{}, Method::RaoBlackwell), std::invalid_argument);
  const double exact = exact_solvability(5, GnpExact{mpq_class(1, 2)}, mpq_class(1, 4)).get_d();
  const Estimate e = estimate_solvability(spec, 200000, SeedSpec{6, 0}, Method::Indicator);
  CHECK(std::abs(e.mean - exact) <= 4 * e.std_error);
  CHECK_THROWS(estimate_solvability(ModelSpec{GraphModel::Gnp, 8, -10, 0.5}, 10, SeedSpec{}, Method::Indicator));
}

TEST_CASE("estimates are deterministic and partition-independent") {
  const ModelSpec spec{GraphModel::Gnp, 300, 0.0, 0.5};
  const Estimate whole = estimate_solvability(spec, 8000, SeedSpec{7, 0}, Method::RaoBlackwell);
  const Estimate again = estimate_solvability(spec, 8000, SeedSpec{7, 0}, Method::RaoBlackwell);
  CHECK(whole.sum == again.sum);
  CHECK(whole.mean == again.mean);
  CHECK(whole.std_error == again.std_error);

  std::vector<Estimate> parts;
  for (std::uint64_t j = 0; j < 8; ++j)
    parts.push_back(estimate_solvability(spec, 1000, SeedSpec{7, j}, Method::RaoBlackwell));
  const Estimate pooled = merge(parts);
  CHECK(pooled.samples == 8000);
  CHECK(pooled.sum == whole.sum);
  CHECK(pooled.mean == whole.mean);
  CHECK(pooled.std_error == whole.std_error);

  std::vector<Estimate> reversed(parts.rbegin(), parts.rend());
  CHECK(merge(reversed).mean == pooled.mean);
  CHECK(merge(std::vector<Estimate>{parts[3], parts[1]}).sum == merge(std::vector<Estimate>{parts[1], parts[3]}).sum);

  const Estimate single = merge(std::vector<Estimate>{parts[2]});
  CHECK(single.mean == parts[2].mean);
  CHECK(single.std_error == parts[2].std_error);
  CHECK(single.samples == parts[2].samples);

  CHECK_THROWS_AS(merge(std::vector<Estimate>{parts[0], parts[0]}), std::invalid_argument);
  Estimate other = parts[1];
  other.model.n = 301;
  CHECK_THROWS_AS(merge(std::vector<Estimate>{parts[0], other}), std::invalid_argument);
  CHECK_THROWS_AS(merge(std::vector<Estimate>{}), std::invalid_argument);
}

TEST_CASE("comparison with a prediction") {
  Estimate e;
  e.mean = 0.4;
  e.std_error = 0.01;
  Prediction p;
  p.value = 0.4;
  auto c = compare_to_theory(e, p);
  CHECK(c.ratio == 1.0);
  CHECK(c.z == 0.0);
  e.mean = 0.42;
  c = compare_to_theory(e, p);
  CHECK(c.z == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.ratio == doctest::Approx(1.05).epsilon(1e-12));
}

TEST_CASE("maximum excess") {
  const Estimate sub = estimate_max_excess(ModelSpec{GraphModel::Gnp, 100000, -5, 0.5}, 200, SeedSpec{8, 0});
  CHECK(sub.mean <= 0.05);
  const Estimate empty = estimate_max_excess(ModelSpec{GraphModel::Gnm, 10, -std::cbrt(10.0), 0.5}, 50, SeedSpec{});
  CHECK(empty.mean == -1.0);
}

TEST_CASE("conditioning on small excess raises solvability") {
  const auto r = estimate_conditional_solvability(ModelSpec{GraphModel::Gnp, 10000, 0.0, 0.5}, 20000,
                                                  SeedSpec{9, 0}, 1);
  CHECK(r.conditional_samples > 0);
  CHECK(r.conditional_samples < r.unconditional.samples);
  CHECK(r.conditional_mean > r.unconditional.mean);
  CHECK(r.z >= 3.0);
}

TEST_CASE("paired bipartite ratio") {
  const auto r = estimate_bipartite_ratio(ModelSpec{GraphModel::Gnp, 2000, 0.0, 0.5}, 4000, SeedSpec{10, 0});
  CHECK(r.bipartite.samples == 4000);
  CHECK(r.ratio == doctest::Approx(r.bipartite.mean / r.half.mean));
  CHECK(r.ratio_stderr > 0);
  // Bipartite implies X = 0 or only even cycles, so Pr(bipartite) <= E[2^-X] is not guaranteed per
  // graph, but both estimate probabilities.
  CHECK(r.bipartite.mean > 0);
  CHECK(r.bipartite.mean <= 1);
  const Estimate rb1 = estimate_solvability(ModelSpec{GraphModel::Gnp, 2000, 0.0, 1.0}, 4000, SeedSpec{10, 0},
                                            Method::RaoBlackwell);
  CHECK(rb1.sum == r.bipartite.sum);
}

TEST_CASE("graph statistics in one pass") {
  const auto s = graph_stats(build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}));
  CHECK(s.component_count == 3);
  CHECK(s.cyclic_rank == 1);
  CHECK(s.max_excess == 0);
  CHECK_FALSE(s.bipartite);
  CHECK(graph_stats(cycle_graph(6)).bipartite);
  CHECK(parse_method("indicator") == Method::Indicator);
  CHECK(parse_method("rao_blackwell") == Method::RaoBlackwell);
  CHECK_THROWS_AS(parse_method("magic"), std::invalid_argument);
}
