#include "twoxor/xorsat.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace twoxor {

ParityUnionFind::ParityUnionFind(std::size_t n)
    : parent_(n), parity_(n, 0), rank_(n, 0), sets_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
}

ParityUnionFind::Root ParityUnionFind::find(std::uint32_t v) {
  // First pass: locate the root and the parity of v relative to it.
  std::uint32_t root = v;
  std::uint8_t acc = 0;
  while (parent_[root] != root) {
    acc ^= parity_[root];
    root = parent_[root];
  }
  // Second pass: point every vertex on the path straight at the root.
  std::uint8_t remaining = acc;
  while (parent_[v] != root && parent_[v] != v) {
    const std::uint32_t next = parent_[v];
    const std::uint8_t step = parity_[v];
    parent_[v] = root;
    parity_[v] = remaining;
    remaining ^= step;
    v = next;
  }
  return {root, acc};
}

bool ParityUnionFind::unite(std::uint32_t u, std::uint32_t v, std::uint8_t b) {
  const Root ru = find(u);
  const Root rv = find(v);
  if (ru.vertex == rv.vertex) return static_cast<std::uint8_t>(ru.parity ^ rv.parity) == (b & 1);
  // x_rv + x_ru = x_u + x_v + parities = b + pu + pv
  const std::uint8_t link = static_cast<std::uint8_t>((b ^ ru.parity ^ rv.parity) & 1);
  std::uint32_t child = rv.vertex, parent = ru.vertex;
  if (rank_[child] > rank_[parent]) std::swap(child, parent);
  parent_[child] = parent;
  parity_[child] = link;
  if (rank_[child] == rank_[parent]) ++rank_[parent];
  --sets_;
  return true;
}

static void check_lengths(const Graph& g, const EdgeLabels& labels) {
  if (labels.size() != g.edge_count()) {
    throw LabelLengthError("label vector has " + std::to_string(labels.size()) +
                           " entries but the graph has " + std::to_string(g.edge_count()) + " edges");
  }
}

SolveOutcome solve(const Graph& g, const EdgeLabels& labels, bool with_witness) {
  check_lengths(g, labels);
  ParityUnionFind uf(g.vertex_count());
  SolveOutcome out;
  std::size_t i = 0;
  for (const auto& [u, v] : g.edges()) {
    if (!uf.unite(u, v, labels[i++])) return out;  // unsatisfiable
  }
  out.satisfiable = true;
  out.log2_solution_count = static_cast<std::int64_t>(uf.set_count());
  if (with_witness) {
    std::vector<std::uint8_t> x(g.vertex_count());
    for (std::uint32_t v = 0; v < x.size(); ++v) x[v] = uf.find(v).parity;
    out.witness = std::move(x);
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  ParityUnionFind uf(g.vertex_count());
  for (const auto& [u, v] : g.edges())
    if (!uf.unite(u, v, 1)) return false;
  return true;
}

bool gf2_solvability_oracle(const Graph& g, const EdgeLabels& labels) {
  check_lengths(g, labels);
  const std::size_t cols = g.vertex_count() + 1;  // last column is the right-hand side
  const std::size_t words = (cols + 63) / 64;
  const std::size_t rows = g.edge_count();
  std::vector<std::uint64_t> m(rows * words, 0);
  auto set = [&](std::size_t r, std::size_t c) { m[r * words + c / 64] |= std::uint64_t{1} << (c % 64); };
  auto get = [&](std::size_t r, std::size_t c) { return (m[r * words + c / 64] >> (c % 64)) & 1u; };

  std::size_t r = 0;
  for (const auto& [u, v] : g.edges()) {
    set(r, u);
    set(r, v);
    if (labels[r] & 1) set(r, cols - 1);
    ++r;
  }

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c + 1 < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && !get(sel, c)) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t w = 0; w < words; ++w) std::swap(m[sel * words + w], m[pivot_row * words + w]);
    }
    for (std::size_t k = pivot_row + 1; k < rows; ++k) {
      if (get(k, c)) {
        for (std::size_t w = 0; w < words; ++w) m[k * words + w] ^= m[pivot_row * words + w];
      }
    }
    ++pivot_row;
  }
  // Rows past the last pivot have zero coefficients; a 1 on the right is 0 = 1.
  for (std::size_t k = pivot_row; k < rows; ++k)
    if (get(k, cols - 1)) return false;
  return true;
}

std::vector<std::uint64_t> cycle_space_weight_distribution(const Graph& g) {
  const auto n = g.vertex_count();
  const Adjacency adj(g);

  // BFS spanning forest with parent edges and depths.
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> parent(n, kNone), parent_edge(n, kNone), depth(n, 0);
  std::vector<char> in_tree(g.edge_count(), 0);
  std::vector<Vertex> queue;
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const auto nb = adj.neighbors_of(v);
      const auto ids = adj.edges_of(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (seen[nb[i]]) continue;
        seen[nb[i]] = 1;
        parent[nb[i]] = v;
        parent_edge[nb[i]] = ids[i];
        depth[nb[i]] = depth[v] + 1;
        in_tree[ids[i]] = 1;
        queue.push_back(nb[i]);
      }
    }
  }

  // Fundamental cycles as edge-id lists.
  std::vector<std::vector<std::uint32_t>> cycles;
  const auto edges = g.edges();
  for (std::uint32_t id = 0; id < edges.size(); ++id) {
    if (in_tree[id]) continue;
    if (static_cast<std::int64_t>(cycles.size()) >= kCycleSpaceCapacity) {
      throw std::length_error("cycle space too large: X(G) exceeds " +
                              std::to_string(kCycleSpaceCapacity));
    }
    std::vector<std::uint32_t> cyc{id};
    Vertex a = edges[id].first, b = edges[id].second;
    while (depth[a] > depth[b]) { cyc.push_back(parent_edge[a]); a = parent[a]; }
    while (depth[b] > depth[a]) { cyc.push_back(parent_edge[b]); b = parent[b]; }
    while (a != b) {
      cyc.push_back(parent_edge[a]);
      cyc.push_back(parent_edge[b]);
      a = parent[a];
      b = parent[b];
    }
    cycles.push_back(std::move(cyc));
  }

  // Compress to the edges that lie on some fundamental cycle.
  std::vector<std::int64_t> slot(edges.size(), -1);
  std::size_t used = 0;
  for (const auto& cyc : cycles)
    for (auto id : cyc)
      if (slot[id] < 0) slot[id] = static_cast<std::int64_t>(used++);
  const std::size_t words = (used + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(cycles.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < cycles.size(); ++j)
    for (auto id : cycles[j]) {
      const auto s = static_cast<std::size_t>(slot[id]);
      masks[j][s / 64] |= std::uint64_t{1} << (s % 64);
    }

  // Gray-code walk over all 2^X combinations.
  std::vector<std::uint64_t> hist(used + 1, 0);
  std::vector<std::uint64_t> current(words, 0);
  std::size_t weight = 0;
  hist[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << cycles.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t before = current[w];
      current[w] ^= masks[j][w];
      weight += static_cast<std::size_t>(std::popcount(current[w]));
      weight -= static_cast<std::size_t>(std::popcount(before));
    }
    ++hist[weight];
  }
  return hist;
}

namespace {

template <class Scalar>
Scalar two_to_minus(std::int64_t x);

template <>
double two_to_minus<double>(std::int64_t x) {
  return std::ldexp(1.0, static_cast<int>(-x));
}

template <>
mpq_class two_to_minus<mpq_class>(std::int64_t x) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(x);
  return mpq_class(mpz_class(1), den);
}

template <class Scalar>
Scalar conditional_probability_impl(const Graph& g, const Scalar& phat) {
  if (!(phat >= 0 && phat <= 1)) throw std::invalid_argument("phat must lie in [0,1]");
  if (phat == 0) return Scalar(1);
  if (phat == 1) return is_bipartite(g) ? Scalar(1) : Scalar(0);
  const std::int64_t x = component_summary(g).cyclic_rank;
  if (2 * phat == 1) return two_to_minus<Scalar>(x);
  const auto hist = cycle_space_weight_distribution(g);
  const Scalar q = Scalar(1) - 2 * phat;
  Scalar sum = 0, power = 1;
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w] != 0) sum += Scalar(static_cast<double>(hist[w])) * power;
    power *= q;
  }
  Scalar result = sum * two_to_minus<Scalar>(x);
  return result;
}

}  // namespace

double conditional_solvability_probability(const Graph& g, double phat) {
  return conditional_probability_impl<double>(g, phat);
}

mpq_class conditional_solvability_probability(const Graph& g, const mpq_class& phat) {
  return conditional_probability_impl<mpq_class>(g, phat);
}

}  // namespace twoxor
