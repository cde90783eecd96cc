#include "twoxor/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "twoxor/xorsat.hpp"

namespace twoxor {

BigInt CountTable::at(std::size_t n, std::size_t m) const {
  auto it = entries.find({n, m});
  return it == entries.end() ? BigInt(0) : it->second;
}

namespace {

std::vector<Edge> pair_slots(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

Graph graph_from_mask(std::size_t n, const std::vector<Edge>& slots, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (mask >> i & 1) edges.push_back(slots[i]);
  return build_graph(n, std::move(edges));
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational power(const Rational& base, std::size_t e) {
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Graph weights under the model: Pr(G) for every edge mask of size e.
std::vector<Rational> weights_by_edge_count(std::size_t pairs, const ExactModel& model) {
  std::vector<Rational> w(pairs + 1, 0);
  if (const auto* gnp = std::get_if<GnpExact>(&model)) {
    if (gnp->p < 0 || gnp->p > 1) throw std::invalid_argument("p must lie in [0,1]");
    for (std::size_t e = 0; e <= pairs; ++e) w[e] = power(gnp->p, e) * power(1 - gnp->p, pairs - e);
  } else {
    const auto m = std::get<GnmExact>(model).m;
    if (m > pairs) throw std::invalid_argument("m exceeds the number of pairs");
    w[m] = Rational(BigInt(1), binomial(pairs, m));
  }
  return w;
}

void check_exact_size(std::size_t n, std::size_t limit) {
  if (n == 0 || n > limit) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " + std::to_string(limit));
  }
}

}  // namespace

Rational exact_solvability(std::size_t n, const ExactModel& model, const Rational& phat) {
  check_exact_size(n, kMaxExactVertices);
  if (phat < 0 || phat > 1) throw std::invalid_argument("phat must lie in [0,1]");
  const auto slots = pair_slots(n);
  const auto weight = weights_by_edge_count(slots.size(), model);
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    const auto& w = weight[static_cast<std::size_t>(std::popcount(mask))];
    if (w == 0) continue;
    total += w * conditional_solvability_probability(graph_from_mask(n, slots, mask), phat);
  }
  return total;
}

Rational exact_solvability_full_system(std::size_t n, const ExactModel& model, const Rational& phat) {
  check_exact_size(n, 4);
  const auto slots = pair_slots(n);
  const auto weight = weights_by_edge_count(slots.size(), model);
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    const auto e = static_cast<std::size_t>(std::popcount(mask));
    if (weight[e] == 0) continue;
    const Graph g = graph_from_mask(n, slots, mask);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e); ++bits) {
      EdgeLabels labels(e);
      for (std::size_t i = 0; i < e; ++i) labels[i] = static_cast<std::uint8_t>(bits >> i & 1);
      if (!solve(g, labels, false).satisfiable) continue;
      const auto ones = static_cast<std::size_t>(std::popcount(bits));
      total += weight[e] * power(phat, ones) * power(1 - phat, e - ones);
    }
  }
  return total;
}

CountTable count_connected(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("count_connected needs n_max >= 1");
  CountTable t;
  t.kind = CountKind::Connected;
  t.n_max = n_max;
  t.entries[{1, 0}] = 1;
  if (n_max >= 2) t.entries[{2, 1}] = 1;
  for (std::size_t n = 3; n <= n_max; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::size_t m = n - 1; m <= pairs; ++m) {
      BigInt twice = 2 * BigInt(static_cast<unsigned long>(pairs - m + 1)) * t.at(n, m - 1);
      for (std::size_t n1 = 1; n1 < n; ++n1) {
        const std::size_t n2 = n - n1;
        const BigInt outer = binomial(n, n1) * static_cast<unsigned long>(n1 * n2);
        for (std::size_t m1 = n1 - 1; m1 + (n2 - 1) <= m - 1; ++m1) {
          const std::size_t m2 = m - 1 - m1;
          const BigInt a = t.at(n1, m1);
          if (a == 0) continue;
          const BigInt b = t.at(n2, m2);
          if (b == 0) continue;
          twice += outer * a * b;
        }
      }
      const BigInt divisor = 2 * BigInt(static_cast<unsigned long>(m));
      if (twice % divisor != 0) {
        throw std::logic_error("connected-graph recurrence: non-integral C(" + std::to_string(n) + "," +
                               std::to_string(m) + ")");
      }
      t.entries[{n, m}] = twice / divisor;
    }
  }
  return t;
}

namespace {

struct BruteCounts {
  CountTable connected;
  CountTable even;
};

BruteCounts brute_counts(std::size_t n_max) {
  check_exact_size(n_max, kMaxBruteForceVertices);
  BruteCounts out;
  out.connected.kind = CountKind::Connected;
  out.even.kind = CountKind::ConnectedEvenOnly;
  out.connected.n_max = out.even.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto slots = pair_slots(n);
    std::vector<std::uint64_t> connected(slots.size() + 1, 0), even(slots.size() + 1, 0);
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      const auto e = static_cast<std::size_t>(std::popcount(mask));
      if (e + 1 < n) continue;
      std::uint32_t adj[kMaxBruteForceVertices] = {};
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) {
          adj[slots[i].first] |= 1u << slots[i].second;
          adj[slots[i].second] |= 1u << slots[i].first;
        }
      // BFS layers from vertex 0; colour = layer parity.
      std::uint32_t seen = 1, frontier = 1, colour1 = 0;
      bool odd_layer = false;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~seen;
        seen |= next;
        odd_layer = !odd_layer;
        if (odd_layer) colour1 |= next;
        frontier = next;
      }
      if (seen != all) continue;
      ++connected[e];
      bool bipartite = true;
      for (std::size_t v = 0; v < n && bipartite; ++v) {
        const bool in1 = colour1 >> v & 1;
        const std::uint32_t same = in1 ? colour1 : (all & ~colour1);
        if (adj[v] & same) bipartite = false;
      }
      if (bipartite) ++even[e];
    }
    for (std::size_t m = 0; m <= slots.size(); ++m) {
      if (m + 1 < n) continue;
      out.connected.entries[{n, m}] = static_cast<unsigned long>(connected[m]);
      out.even.entries[{n, m}] = static_cast<unsigned long>(even[m]);
    }
  }
  return out;
}

// Vertex colouring of a tree by depth parity; validates the tree shape.
std::vector<std::uint8_t> tree_colouring(const Graph& tree) {
  const auto n = tree.vertex_count();
  if (n == 0 || tree.edge_count() + 1 != n) throw std::invalid_argument("not a tree: need m = n - 1");
  const Adjacency adj(tree);
  std::vector<std::uint8_t> colour(n, 2);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj.neighbors_of(v))
      if (colour[w] == 2) {
        colour[w] = colour[v] ^ 1;
        queue.push_back(w);
      }
  }
  if (queue.size() != n) throw std::invalid_argument("not a tree: graph is disconnected");
  return colour;
}

}  // namespace

CountTable count_connected_brute(std::size_t n_max) { return brute_counts(n_max).connected; }

CountTable count_connected_even(std::size_t n_max) { return brute_counts(n_max).even; }

std::uint64_t even_path_count(const Graph& tree) {
  const auto colour = tree_colouring(tree);
  const auto ones = static_cast<std::uint64_t>(std::count(colour.begin(), colour.end(), 1));
  const auto zeros = static_cast<std::uint64_t>(colour.size()) - ones;
  auto pairs = [](std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; };
  return pairs(zeros) + pairs(ones);
}

std::uint64_t even_path_count_bruteforce(const Graph& tree) {
  (void)tree_colouring(tree);
  const auto n = tree.vertex_count();
  const Adjacency adj(tree);
  std::uint64_t count = 0;
  std::vector<std::int64_t> dist(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : adj.neighbors_of(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (Vertex t = s + 1; t < n; ++t)
      if (dist[t] % 2 == 0) ++count;
  }
  return count;
}

Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
  if (n < 2 || sequence.size() + 2 != n) throw std::invalid_argument("Pruefer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw std::invalid_argument("Pruefer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return build_graph(n, std::move(edges));
}

TreeMinimizerReport tree_minimizer_report(std::size_t n) {
  if (n < 2 || n > 8) throw std::invalid_argument("tree enumeration supports 2 <= n <= 8");
  TreeMinimizerReport rep;
  rep.n = n;
  rep.expected = (n * (n - 2) + 3) / 4;
  rep.minimum = ~std::uint64_t{0};
  std::vector<Vertex> seq(n - 2, 0);
  std::vector<std::uint64_t> path_counts;
  for (;;) {
    const Graph tree = prufer_decode(seq, n);
    const std::uint64_t x = even_path_count(tree);
    ++rep.trees;
    rep.minimum = std::min(rep.minimum, x);
    std::vector<int> degree(n, 0);
    for (const auto& [u, v] : tree.edges()) {
      ++degree[u];
      ++degree[v];
    }
    if (*std::max_element(degree.begin(), degree.end()) <= 2) path_counts.push_back(x);
    // odometer increment over base-n digits
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  rep.path_attains = std::find(path_counts.begin(), path_counts.end(), rep.minimum) != path_counts.end();
  rep.ok = rep.minimum == rep.expected && rep.path_attains;
  return rep;
}

bool verify_tree_minimizer(std::size_t n) { return tree_minimizer_report(n).ok; }

}  // namespace twoxor
