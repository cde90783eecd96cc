#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "twoxor/graph.hpp"
#include "twoxor/sampler.hpp"

using namespace twoxor;

namespace {

// Plain DFS over an adjacency list, written independently of component_summary.
struct Reference {
  std::int64_t components = 0;
  std::int64_t rank = 0;
  std::int64_t max_excess = -1;
};

Reference reference_summary(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> seen(n, 0);
  Reference r;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++r.components;
    std::int64_t verts = 0, degree_sum = 0;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++verts;
      degree_sum += static_cast<std::int64_t>(adj[v].size());
      for (Vertex w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    r.max_excess = std::max(r.max_excess, degree_sum / 2 - verts);
  }
  r.rank = static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(n) + r.components;
  return r;
}

}  // namespace

TEST_CASE("build_graph canonicalizes and validates") {
  const Graph g = build_graph(4, {{2, 1}, {0, 3}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}};
  CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
  CHECK(g == build_graph(4, {{0, 1}, {1, 2}, {3, 0}}));

  CHECK(build_graph(3, {}).edge_count() == 0);
  CHECK(build_graph(3, {}).vertex_count() == 3);

  auto kind_of = [](std::size_t n, std::vector<Edge> edges) {
    try {
      build_graph(n, std::move(edges));
    } catch (const GraphError& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return GraphError::Kind::Format;
  };
  CHECK(kind_of(2, {{0, 0}}) == GraphError::Kind::Loop);
  CHECK(kind_of(2, {{0, 2}}) == GraphError::Kind::OutOfRange);
  CHECK(kind_of(3, {{0, 1}, {1, 0}}) == GraphError::Kind::Duplicate);
}

TEST_CASE("component summaries of small graphs") {
  const auto empty = component_summary(build_graph(3, {}));
  CHECK(empty.component_count == 3);
  CHECK(empty.cyclic_rank == 0);
  CHECK(empty.max_excess == -1);

  const auto tri = component_summary(complete_graph(3));
  CHECK(tri.component_count == 1);
  CHECK(tri.cyclic_rank == 1);
  CHECK(tri.max_excess == 0);

  const auto tri_iso = component_summary(build_graph(4, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tri_iso.component_count == 2);
  CHECK(tri_iso.cyclic_rank == 1);
  CHECK(tri_iso.max_excess == 0);
  REQUIRE(tri_iso.components.size() == 2);
  CHECK(tri_iso.components[0] == ComponentInfo{3, 3, 0});
  CHECK(tri_iso.components[1] == ComponentInfo{1, 0, -1});

  const auto k4 = component_summary(complete_graph(4));
  CHECK(k4.component_count == 1);
  CHECK(k4.cyclic_rank == 3);
  CHECK(k4.max_excess == 2);

  CHECK(component_summary(build_graph(0, {})).component_count == 0);
  CHECK(component_summary(path_graph(6)).max_excess == -1);
  CHECK(component_summary(cycle_graph(6)).cyclic_rank == 1);
}

TEST_CASE("component summary agrees with an independent traversal") {
  Rng rng(SeedSpec{11, 0});
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng.below(100);
    const double p = std::min(1.0, rng.uniform() * 3.0 / static_cast<double>(n));
    const Graph g = sample_gnp(n, p, rng);
    const auto s = component_summary(g);
    const auto r = reference_summary(g);
    REQUIRE(s.component_count == r.components);
    REQUIRE(s.cyclic_rank == r.rank);
    REQUIRE(s.max_excess == r.max_excess);

    std::int64_t verts = 0, edges = 0, best = -1;
    for (const auto& c : s.components) {
      verts += c.vertex_count;
      edges += c.edge_count;
      best = std::max(best, c.excess);
      REQUIRE(c.excess == c.edge_count - c.vertex_count);
    }
    REQUIRE(verts == static_cast<std::int64_t>(n));
    REQUIRE(edges == static_cast<std::int64_t>(g.edge_count()));
    REQUIRE(best == s.max_excess);
    REQUIRE(s.cyclic_rank >= 0);
    REQUIRE((s.cyclic_rank == 0) == (s.max_excess == -1));
  }
}

TEST_CASE("adding an edge never lowers cyclic rank or max excess") {
  Rng rng(SeedSpec{12, 0});
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng.below(40);
    const Graph g = sample_gnp(n, std::min(1.0, 2.0 / static_cast<double>(n)), rng);
    if (g.edge_count() == pair_count(n)) continue;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    Edge extra;
    do extra = pair_at(n, rng.below(pair_count(n)));
    while (std::binary_search(edges.begin(), edges.end(), extra));
    edges.push_back(extra);
    const auto before = component_summary(g);
    const auto after = component_summary(build_graph(n, edges));
    REQUIRE(after.cyclic_rank >= before.cyclic_rank);
    REQUIRE(after.max_excess >= before.max_excess);
  }
}

TEST_CASE("fixture format round trip") {
  const Graph g = build_graph(5, {{0, 4}, {1, 2}, {2, 3}});
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "5 3\n0 4\n1 2\n2 3\n");
  std::istringstream in(out.str());
  CHECK(read_graph(in) == g);

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(bad), GraphError);
  std::istringstream loop("3 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), GraphError);
}

TEST_CASE("adjacency view lists every edge twice") {
  const Graph g = complete_graph(5);
  const Adjacency adj(g);
  std::size_t slots = 0;
  for (Vertex v = 0; v < 5; ++v) {
    CHECK(adj.neighbors_of(v).size() == 4);
    for (std::size_t i = 0; i < adj.neighbors_of(v).size(); ++i) {
      const auto [a, b] = g.edges()[adj.edges_of(v)[i]];
      CHECK(((a == v && b == adj.neighbors_of(v)[i]) || (b == v && a == adj.neighbors_of(v)[i])));
      ++slots;
    }
  }
  CHECK(slots == 2 * g.edge_count());
}
