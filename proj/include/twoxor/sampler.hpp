#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "twoxor/graph.hpp"
#include "twoxor/xorsat.hpp"

namespace twoxor {

enum class GraphModel { Gnp, Gnm };

std::string to_string(GraphModel model);
GraphModel parse_graph_model(const std::string& text);

/// A random-graph model in the near-critical parameterization
///   p = (1 + lambda n^{-1/3}) / n,   m = (n/2)(1 + lambda n^{-1/3}),
/// together with the label bias phat = Pr(b_e = 1).
struct ModelSpec {
  GraphModel model = GraphModel::Gnp;
  std::size_t n = 0;
  double lambda = 0.0;
  double phat = 0.5;

  /// Spec with average degree gamma = 2m/n = np, i.e. lambda = (gamma - 1) n^{1/3}.
  static ModelSpec from_gamma(GraphModel model, std::size_t n, double gamma, double phat);

  /// Throws std::invalid_argument if the derived p or m is out of range.
  void validate() const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// 64-bit Mersenne twister seeded through std::seed_seq from the four 32-bit
/// halves of (master_seed, stream_index); every stream is a reproducible,
/// independently seeded generator.
class Rng {
 public:
  explicit Rng(SeedSpec seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound) (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

double critical_p(std::size_t n, double lambda);
std::uint64_t critical_m(std::size_t n, double lambda);

Graph sample_gnp(std::size_t n, double p, SeedSpec seed);
Graph sample_gnm(std::size_t n, std::uint64_t m, SeedSpec seed);
EdgeLabels sample_labels(std::size_t edge_count, double phat, SeedSpec seed);

/// Draws from the graph model of `spec`, using the given generator.
Graph sample_graph(const ModelSpec& spec, Rng& rng);
Graph sample_gnp(std::size_t n, double p, Rng& rng);
Graph sample_gnm(std::size_t n, std::uint64_t m, Rng& rng);
EdgeLabels sample_labels(std::size_t edge_count, double phat, Rng& rng);

/// Lexicographic position of pair (u, v), u < v, among all pairs of 0..n-1,
/// and its inverse.
std::uint64_t pair_index(std::size_t n, Vertex u, Vertex v);
Edge pair_at(std::size_t n, std::uint64_t index);

}  // namespace twoxor
