#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "twoxor/graph.hpp"

namespace twoxor {

/// Right-hand sides b_e of the system x_u + x_v = b_e (mod 2), one byte per
/// edge in the graph's canonical edge order.
using EdgeLabels = std::vector<std::uint8_t>;

struct SolveOutcome {
  bool satisfiable = false;
  /// log2 of the number of solutions; equals c(G) when satisfiable.
  std::int64_t log2_solution_count = 0;
  std::optional<std::vector<std::uint8_t>> witness;
};

/// Union-find over vertices where each parent link carries the parity
/// x_v + x_parent. Path compression plus union by rank.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n);

  struct Root {
    std::uint32_t vertex;
    std::uint8_t parity;  // x_v + x_root
  };
  Root find(std::uint32_t v);

  /// Imposes x_u + x_v = b. Returns false iff this contradicts the
  /// constraints already present (an odd-label cycle was closed).
  bool unite(std::uint32_t u, std::uint32_t v, std::uint8_t b);

  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

class LabelLengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SolveOutcome solve(const Graph& g, const EdgeLabels& labels, bool with_witness = true);

bool is_bipartite(const Graph& g);

/// Independent route: Gaussian elimination over GF(2) on the bit-packed
/// augmented incidence matrix (one row per edge, n+1 columns).
bool gf2_solvability_oracle(const Graph& g, const EdgeLabels& labels);

/// Largest cyclic rank for which the general-phat cycle-space sum is evaluated.
inline constexpr std::int64_t kCycleSpaceCapacity = 24;

/// Number of cycle-space elements (Eulerian edge subsets) of each weight:
/// entry w counts the elements with exactly w edges. Throws
/// std::length_error when X(G) exceeds kCycleSpaceCapacity.
std::vector<std::uint64_t> cycle_space_weight_distribution(const Graph& g);

/// Pr(system solvable | G) when each label is 1 independently with
/// probability phat:
///   2^{-X(G)} * sum over z in the cycle space of (1 - 2 phat)^{|z|}.
/// phat in {0, 1/2, 1} is answered in closed form for any X(G).
double conditional_solvability_probability(const Graph& g, double phat);
mpq_class conditional_solvability_probability(const Graph& g, const mpq_class& phat);

}  // namespace twoxor
