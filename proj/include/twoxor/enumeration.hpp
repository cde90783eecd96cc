#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "twoxor/graph.hpp"
#include "twoxor/sequences.hpp"

namespace twoxor {

enum class CountKind { Connected, ConnectedEvenOnly };

/// Counts of labeled graphs on [n] with m edges, keyed by (n, m). Missing
/// keys read as zero.
struct CountTable {
  CountKind kind = CountKind::Connected;
  std::size_t n_max = 0;
  std::map<std::pair<std::size_t, std::size_t>, BigInt> entries;

  BigInt at(std::size_t n, std::size_t m) const;
};

struct GnpExact {
  Rational p;
};
struct GnmExact {
  std::size_t m;
};
using ExactModel = std::variant<GnpExact, GnmExact>;

inline constexpr std::size_t kMaxExactVertices = 6;

/// Exact Pr(system solvable) by summing Pr(G) * Pr(solvable | G) over all
/// 2^{n(n-1)/2} graphs on n <= 6 vertices.
Rational exact_solvability(std::size_t n, const ExactModel& model, const Rational& phat);

/// Exact average of the solvability indicator over every (graph, labels)
/// pair, weighting graphs by the model and labels by phat. Only for n <= 4;
/// it is the end-to-end check of the conditional-probability route.
Rational exact_solvability_full_system(std::size_t n, const ExactModel& model, const Rational& phat);

/// C(n, m) for 1 <= n <= n_max via
///   m C(n,m) = (N - m + 1) C(n, m-1)
///              + (1/2) sum_{n1+n2=n, m1+m2=m-1} binom(n, n1) n1 n2 C(n1, m1) C(n2, m2),
/// with C(1,0) = C(2,1) = 1. Every division by m is checked to be exact.
CountTable count_connected(std::size_t n_max);

inline constexpr std::size_t kMaxBruteForceVertices = 7;

/// Brute-force counts over all edge subsets, n <= 7: connected graphs, or
/// connected graphs without an odd cycle.
CountTable count_connected_brute(std::size_t n_max);
CountTable count_connected_even(std::size_t n_max);

/// Number of vertex pairs of a tree at even distance, computed as
/// binom(|V0|, 2) + binom(|V1|, 2) over its bipartition. Throws
/// std::invalid_argument if g is not a tree.
std::uint64_t even_path_count(const Graph& tree);

/// Same count by explicit BFS from every vertex.
std::uint64_t even_path_count_bruteforce(const Graph& tree);

/// Labeled tree on n vertices from a Pruefer sequence of length n - 2.
Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n);

struct TreeMinimizerReport {
  std::size_t n = 0;
  std::uint64_t trees = 0;
  std::uint64_t minimum = 0;
  std::uint64_t expected = 0;  // ceil(n(n-2)/4)
  bool path_attains = false;   // some path achieves the minimum
  bool ok = false;
};

/// Enumerates all n^{n-2} labeled trees and checks that the smallest even
/// path count is ceil(n(n-2)/4), attained by a path. 2 <= n <= 8.
TreeMinimizerReport tree_minimizer_report(std::size_t n);
bool verify_tree_minimizer(std::size_t n);

}  // namespace twoxor
