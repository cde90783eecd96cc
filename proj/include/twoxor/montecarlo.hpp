#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

#include "twoxor/graph.hpp"
#include "twoxor/sampler.hpp"
#include "twoxor/theory.hpp"

namespace twoxor {

enum class Method { Indicator, RaoBlackwell };

std::string to_string(Method method);
Method parse_method(const std::string& text);

/// Samples are drawn in blocks of this size; block j of a run seeded with
/// stream_index s uses the stream s + j.
inline constexpr std::uint64_t kBlockSize = 1000;

/// Sample mean of a per-graph quantity, with its plug-in standard error.
///
/// The first and second moments are kept as exact rationals (every sampled
/// value is a dyadic rational), so merging is exactly associative and
/// commutative and the derived mean does not depend on how blocks were
/// distributed over workers.
struct Estimate {
  std::string quantity;  // "solvable" or "max_excess"
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  Method method = Method::Indicator;
  SeedSpec seed;
  ModelSpec model;

  // Wilson 95% interval; meaningful for 0/1-valued samples.
  double wilson_low = 0.0;
  double wilson_high = 1.0;

  mpq_class sum = 0;
  mpq_class sum_sq = 0;
  std::uint64_t first_block = 0;
  std::uint64_t block_count = 0;
};

/// Estimates Pr(S_n > 0).
///   Indicator:     draw graph and labels, record 1 if solvable.
///   RaoBlackwell:  draw the graph only, record Pr(solvable | G): (1/2)^{X(G)}
///                  for phat = 1/2, the bipartite indicator for phat = 1.
/// RaoBlackwell with any other phat throws std::invalid_argument.
Estimate estimate_solvability(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed, Method method);

/// Sample mean of the maximum component excess.
Estimate estimate_max_excess(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed);

/// Pools estimates of the same quantity over disjoint stream blocks.
Estimate merge(std::span<const Estimate> parts);

struct Comparison {
  double ratio = 0.0;  // mean / prediction
  double z = 0.0;      // (mean - prediction) / std_error
};

Comparison compare_to_theory(const Estimate& e, const Prediction& p);

/// Pr(bipartite) and E[(1/2)^X] from the same graphs, their ratio, and the
/// delta-method standard error of the ratio (using the paired covariance).
struct PairedRatio {
  Estimate bipartite;
  Estimate half;
  double ratio = 0.0;
  double ratio_stderr = 0.0;
};

PairedRatio estimate_bipartite_ratio(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed);

/// E[(1/2)^X] unconditionally and conditioned on max excess <= L, from the
/// same graphs; `z` is their difference over the root-sum-square standard error.
struct ConditionalSolvability {
  Estimate unconditional;
  double conditional_mean = 0.0;
  double conditional_stderr = 0.0;
  std::uint64_t conditional_samples = 0;
  double z = 0.0;
};

ConditionalSolvability estimate_conditional_solvability(const ModelSpec& spec, std::uint64_t samples,
                                                        SeedSpec seed, std::int64_t max_excess_bound);

/// Cyclic rank, component count, maximum excess and bipartiteness in one
/// union-find pass (the simulation hot path).
struct GraphStats {
  std::int64_t component_count = 0;
  std::int64_t cyclic_rank = 0;
  std::int64_t max_excess = -1;
  bool bipartite = true;
};

GraphStats graph_stats(const Graph& g);

}  // namespace twoxor
