#include "twoxor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace twoxor {

Graph build_graph(std::size_t n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an endpoint outside 0.." << (n == 0 ? 0 : n - 1);
      throw GraphError(GraphError::Kind::OutOfRange, msg.str());
    }
    if (u == v) {
      throw GraphError(GraphError::Kind::Loop, "loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw GraphError(GraphError::Kind::Duplicate, "duplicate edge (" + std::to_string(dup->first) +
                                                      "," + std::to_string(dup->second) + ")");
  }
  return Graph(n, std::move(edges));
}

Adjacency::Adjacency(const Graph& g) {
  const auto n = g.vertex_count();
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : g.edges()) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  neighbors.resize(offsets[n]);
  edge_ids.resize(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  std::uint32_t id = 0;
  for (const auto& [u, v] : g.edges()) {
    neighbors[fill[u]] = v;
    edge_ids[fill[u]++] = id;
    neighbors[fill[v]] = u;
    edge_ids[fill[v]++] = id;
    ++id;
  }
}

ComponentSummary component_summary(const Graph& g) {
  const auto n = g.vertex_count();
  const Adjacency adj(g);
  ComponentSummary out;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back(root);
    ComponentInfo info;
    std::int64_t degree_sum = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++info.vertex_count;
      const auto nb = adj.neighbors_of(v);
      degree_sum += static_cast<std::int64_t>(nb.size());
      for (Vertex w : nb) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    info.edge_count = degree_sum / 2;
    info.excess = info.edge_count - info.vertex_count;
    out.max_excess = std::max(out.max_excess, info.excess);
    out.components.push_back(info);
  }
  out.component_count = static_cast<std::int64_t>(out.components.size());
  out.cyclic_rank = static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(n) +
                    out.component_count;
  return out;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw GraphError(GraphError::Kind::Format, "missing \"n m\" header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw GraphError(GraphError::Kind::Format, "expected " + std::to_string(m) + " edges, got " +
                                                     std::to_string(i));
    }
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Kind::OutOfRange, "edge endpoint out of range in fixture");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return build_graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  if (n >= 3) edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return build_graph(n, std::move(edges));
}

}  // namespace twoxor
