#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "twoxor/graph.hpp"
#include "twoxor/sampler.hpp"

using namespace twoxor;

TEST_CASE("critical parameterization") {
  CHECK(critical_p(1000, 0) == doctest::Approx(0.001).epsilon(1e-15));
  CHECK(critical_p(1000, 1) == doctest::Approx(0.0011).epsilon(1e-15));
  CHECK_THROWS_AS(critical_p(8, -10), std::invalid_argument);

  CHECK(critical_m(1000, 0) == 500);
  CHECK(critical_m(1000, 1) == 550);
  CHECK(critical_m(1000, -1) == 450);
  CHECK_THROWS_AS(critical_m(8, -10), std::invalid_argument);
  CHECK_THROWS_AS(critical_m(8, -3), std::invalid_argument);

  const auto spec = ModelSpec::from_gamma(GraphModel::Gnp, 1000, 0.5, 0.5);
  CHECK(critical_p(spec.n, spec.lambda) == doctest::Approx(0.5 / 1000).epsilon(1e-12));
  CHECK_THROWS(ModelSpec({GraphModel::Gnm, 8, -10, 0.5}).validate());
  CHECK_THROWS(ModelSpec({GraphModel::Gnp, 100, 0, 1.5}).validate());
  CHECK_NOTHROW(ModelSpec({GraphModel::Gnm, 100, 0, 0.5}).validate());
}

TEST_CASE("pair indexing is a bijection") {
  const std::size_t n = 9;
  std::uint64_t index = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++index) {
      CHECK(pair_index(n, u, v) == index);
      CHECK(pair_at(n, index) == Edge{u, v});
    }
  CHECK(index == pair_count(n));
}

TEST_CASE("extreme densities") {
  const SeedSpec seed{5, 0};
  CHECK(sample_gnp(30, 0.0, seed).edge_count() == 0);
  CHECK(sample_gnp(30, 1.0, seed) == complete_graph(30));
  CHECK(sample_gnm(30, 0, seed).edge_count() == 0);
  CHECK(sample_gnm(30, pair_count(30), seed) == complete_graph(30));
  CHECK(sample_gnm(30, pair_count(30) - 1, seed).edge_count() == pair_count(30) - 1);
  CHECK_THROWS(sample_gnm(5, 11, seed));
  CHECK_THROWS(sample_gnp(5, -0.1, seed));

  const auto zeros = sample_labels(100, 0.0, seed);
  const auto ones = sample_labels(100, 1.0, seed);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(zeros[i] == 0);
    CHECK(ones[i] == 1);
  }
}

TEST_CASE("identical seeds reproduce identical draws") {
  const SeedSpec a{2024, 3}, b{2024, 4};
  CHECK(sample_gnp(5000, 1.0 / 5000, a) == sample_gnp(5000, 1.0 / 5000, a));
  CHECK(sample_gnm(5000, 2500, a) == sample_gnm(5000, 2500, a));
  CHECK(sample_labels(5000, 0.5, a) == sample_labels(5000, 0.5, a));
  CHECK(sample_gnp(5000, 1.0 / 5000, a) != sample_gnp(5000, 1.0 / 5000, b));
  const ModelSpec spec{GraphModel::Gnm, 1000, 0.0, 0.5};
  Rng r1(a), r2(a);
  CHECK(sample_graph(spec, r1) == sample_graph(spec, r2));
}

TEST_CASE("G(n,p) edge count is binomial") {
  const std::size_t n = 10000;
  const double p = 1.0 / n;
  const double total = static_cast<double>(pair_count(n));
  const int reps = 2000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < reps; ++i) {
    const double e = static_cast<double>(sample_gnp(n, p, SeedSpec{77, static_cast<std::uint64_t>(i)}).edge_count());
    sum += e;
    sum_sq += e * e;
  }
  const double mean = sum / reps;
  const double var = sum_sq / reps - mean * mean;
  const double expected_var = total * p * (1 - p);
  CHECK(std::abs(mean - total * p) <= 4 * std::sqrt(expected_var / reps));
  // Sample variance of a near-Poisson count: relative standard error about sqrt(2/reps).
  CHECK(std::abs(var / expected_var - 1) <= 4 * std::sqrt(2.0 / reps));
}

TEST_CASE("G(n,m) is uniform over edge sets") {
  std::map<std::vector<Edge>, int> freq;
  const int reps = 100000;
  Rng rng(SeedSpec{8, 0});
  for (int i = 0; i < reps; ++i) {
    const Graph g = sample_gnm(5, 2, rng);
    ++freq[std::vector<Edge>(g.edges().begin(), g.edges().end())];
  }
  CHECK(freq.size() == 45);
  const double expect = reps / 45.0;
  const double sigma = std::sqrt(expect * (1 - 1 / 45.0));
  double chi2 = 0;
  for (const auto& [edges, count] : freq) {
    CHECK(std::abs(count - expect) <= 4 * sigma);
    chi2 += (count - expect) * (count - expect) / expect;
  }
  // 44 degrees of freedom; the 0.9999 quantile is about 86.
  CHECK(chi2 < 86);

  // The complement branch (m > N/2) must be uniform as well.
  std::map<std::vector<Edge>, int> dense;
  for (int i = 0; i < 45000; ++i) {
    const Graph g = sample_gnm(5, 8, rng);
    ++dense[std::vector<Edge>(g.edges().begin(), g.edges().end())];
  }
  CHECK(dense.size() == 45);
  for (const auto& [edges, count] : dense) CHECK(std::abs(count - 1000) <= 4 * std::sqrt(1000.0));
}

TEST_CASE("label bits are Bernoulli(phat)") {
  const std::size_t bits = 1000000;
  for (double phat : {0.5, 0.2}) {
    const auto labels = sample_labels(bits, phat, SeedSpec{9, 1});
    double ones = 0;
    for (auto b : labels) ones += b;
    CHECK(std::abs(ones / bits - phat) <= 4 * std::sqrt(phat * (1 - phat) / bits));
  }
}

TEST_CASE("neighbouring streams are uncorrelated") {
  const int len = 200000;
  Rng a(SeedSpec{42, 0}), b(SeedSpec{42, 1});
  double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
  for (int i = 0; i < len; ++i) {
    const double x = a.uniform(), y = b.uniform();
    sa += x;
    sb += y;
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  const double cov = sab / len - (sa / len) * (sb / len);
  const double corr = cov / std::sqrt((saa / len - sa * sa / len / len) * (sbb / len - sb * sb / len / len));
  CHECK(std::abs(corr) <= 4 / std::sqrt(static_cast<double>(len)));
}

TEST_CASE("bounded integers are unbiased") {
  Rng rng(SeedSpec{3, 3});
  std::vector<int> counts(7, 0);
  const int reps = 70000;
  for (int i = 0; i < reps; ++i) ++counts[rng.below(7)];
  for (int c : counts) CHECK(std::abs(c - 10000) <= 4 * std::sqrt(10000.0 * 6 / 7));
}
