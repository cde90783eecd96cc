#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twoxor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised by build_graph and the fixture reader when the input is not a
/// simple graph. `kind()` tells the three validation failures apart.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind { OutOfRange, Loop, Duplicate, Format };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Immutable simple labeled graph on vertices 0..n-1.
///
/// The edge list is canonical: every pair has u < v and the list is strictly
/// increasing in lexicographic order. Two graphs compare equal iff they have
/// the same vertex count and the same edge set.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::vector<Edge> edges);
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Validates and canonicalizes an edge list. Pairs may be given in either
/// orientation and any order; loops, out-of-range endpoints and repeated
/// pairs are rejected with a GraphError.
Graph build_graph(std::size_t n, std::vector<Edge> edges);

struct ComponentInfo {
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;
  std::int64_t excess = 0;  // edge_count - vertex_count

  friend bool operator==(const ComponentInfo&, const ComponentInfo&) = default;
};

/// Per-component sizes plus the totals the solvability theory is phrased in:
/// c(G), the cyclic rank X(G) = e(G) - n + c(G), and the maximum component
/// excess (-1 for a forest).
struct ComponentSummary {
  std::vector<ComponentInfo> components;  // ordered by smallest vertex
  std::int64_t component_count = 0;
  std::int64_t cyclic_rank = 0;
  std::int64_t max_excess = -1;
};

ComponentSummary component_summary(const Graph& g);

/// Compressed adjacency (CSR) view used by the traversal-based routines.
struct Adjacency {
  std::vector<std::size_t> offsets;  // size n+1
  std::vector<Vertex> neighbors;
  std::vector<std::uint32_t> edge_ids;  // edge index for each neighbor slot

  explicit Adjacency(const Graph& g);

  std::span<const Vertex> neighbors_of(Vertex v) const {
    return {neighbors.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  std::span<const std::uint32_t> edges_of(Vertex v) const {
    return {edge_ids.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

// Fixture text format: first line "n m", then m lines "u v".
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

// Small named graphs used throughout the tests and the verify suites.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace twoxor
