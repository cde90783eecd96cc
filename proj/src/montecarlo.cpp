#include "twoxor/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "twoxor/xorsat.hpp"

namespace twoxor {

std::string to_string(Method method) { return method == Method::Indicator ? "indicator" : "rao_blackwell"; }

Method parse_method(const std::string& text) {
  if (text == "indicator") return Method::Indicator;
  if (text == "rao_blackwell" || text == "rb" || text == "raoblackwell") return Method::RaoBlackwell;
  throw std::invalid_argument("unknown method '" + text + "' (expected indicator or rao_blackwell)");
}

GraphStats graph_stats(const Graph& g) {
  const auto n = g.vertex_count();
  ParityUnionFind uf(n);
  GraphStats s;
  for (const auto& [u, v] : g.edges())
    if (!uf.unite(u, v, 1)) s.bipartite = false;
  s.component_count = static_cast<std::int64_t>(uf.set_count());
  s.cyclic_rank = static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(n) + s.component_count;

  if (s.cyclic_rank > 0) {
    // excess(root) = edges - vertices, accumulated per component
    std::vector<std::int64_t> excess(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) --excess[uf.find(v).vertex];
    for (const auto& [u, v] : g.edges()) ++excess[uf.find(u).vertex];
    for (std::uint32_t v = 0; v < n; ++v)
      if (uf.find(v).vertex == v) s.max_excess = std::max(s.max_excess, excess[v]);
  }
  return s;
}

namespace {

// Runs `draw(rng)` for each sample, partitioned into fixed-size blocks with
// one stream per block. Returns per-block record vectors in block order.
template <class Record, class Draw>
std::vector<std::vector<Record>> run_blocks(std::uint64_t samples, SeedSpec seed, Draw draw) {
  if (samples == 0) throw std::invalid_argument("at least one sample is required");
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<Record>> out(blocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      try {
        Rng rng(SeedSpec{seed.master_seed, seed.stream_index + b});
        const std::uint64_t count = std::min(kBlockSize, samples - b * kBlockSize);
        auto& records = out[b];
        records.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) records.push_back(draw(rng));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, std::thread::hardware_concurrency()), blocks));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void finalize(Estimate& e) {
  const auto n = static_cast<double>(e.samples);
  const mpq_class count(static_cast<unsigned long>(e.samples));
  e.mean = mpq_class(e.sum / count).get_d();
  if (e.samples > 1) {
    const mpq_class var = (e.sum_sq - e.sum * e.sum / count) / (count - 1);
    e.std_error = std::sqrt(std::max(0.0, var.get_d()) / n);
  } else {
    e.std_error = 0.0;
  }
  const double z = 1.959963984540054;
  const double p = std::clamp(e.mean, 0.0, 1.0);
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  e.wilson_low = std::max(0.0, centre - half);
  e.wilson_high = std::min(1.0, centre + half);
}

template <class Record, class Value>
Estimate reduce(const std::vector<std::vector<Record>>& blocks, const std::string& quantity,
                const ModelSpec& spec, Method method, SeedSpec seed, Value value) {
  std::vector<Estimate> parts;
  parts.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Estimate e;
    e.quantity = quantity;
    e.method = method;
    e.model = spec;
    e.seed = SeedSpec{seed.master_seed, seed.stream_index + b};
    e.first_block = seed.stream_index + b;
    e.block_count = 1;
    e.samples = blocks[b].size();
    for (const auto& r : blocks[b]) {
      const mpq_class v(value(r));
      e.sum += v;
      e.sum_sq += v * v;
    }
    finalize(e);
    parts.push_back(std::move(e));
  }
  return merge(parts);
}

}  // namespace

Estimate merge(std::span<const Estimate> parts) {
  if (parts.empty()) throw std::invalid_argument("merge: nothing to merge");
  std::vector<const Estimate*> order;
  for (const auto& p : parts) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const Estimate* a, const Estimate* b) { return a->first_block < b->first_block; });
  const Estimate& head = *order.front();
  Estimate out;
  out.quantity = head.quantity;
  out.method = head.method;
  out.model = head.model;
  out.seed = SeedSpec{head.seed.master_seed, head.first_block};
  out.first_block = head.first_block;
  std::uint64_t end = head.first_block;
  for (const Estimate* p : order) {
    if (p->quantity != head.quantity || p->method != head.method || !(p->model == head.model) ||
        p->seed.master_seed != head.seed.master_seed) {
      throw std::invalid_argument("merge: estimates come from different specifications");
    }
    if (p->first_block < end) throw std::invalid_argument("merge: overlapping stream blocks");
    end = p->first_block + p->block_count;
    out.sum += p->sum;
    out.sum_sq += p->sum_sq;
    out.samples += p->samples;
  }
  out.block_count = end - out.first_block;
  finalize(out);
  return out;
}

Estimate estimate_solvability(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed, Method method) {
  spec.validate();
  if (method == Method::RaoBlackwell && spec.phat != 0.5 && spec.phat != 1.0) {
    throw std::invalid_argument("Rao-Blackwell estimation supports phat = 1/2 or 1 only");
  }
  const double phat = spec.phat;
  auto blocks = run_blocks<double>(samples, seed, [&](Rng& rng) -> double {
    const Graph g = sample_graph(spec, rng);
    if (method == Method::Indicator) {
      const EdgeLabels labels = sample_labels(g.edge_count(), phat, rng);
      return solve(g, labels, false).satisfiable ? 1.0 : 0.0;
    }
    const GraphStats s = graph_stats(g);
    if (phat == 1.0) return s.bipartite ? 1.0 : 0.0;
    return std::ldexp(1.0, static_cast<int>(-s.cyclic_rank));
  });
  return reduce(blocks, "solvable", spec, method, seed, [](double v) { return v; });
}

Estimate estimate_max_excess(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed) {
  spec.validate();
  auto blocks = run_blocks<double>(samples, seed, [&](Rng& rng) -> double {
    return static_cast<double>(graph_stats(sample_graph(spec, rng)).max_excess);
  });
  return reduce(blocks, "max_excess", spec, Method::Indicator, seed, [](double v) { return v; });
}

Comparison compare_to_theory(const Estimate& e, const Prediction& p) {
  Comparison c;
  c.ratio = e.mean / p.value;
  c.z = e.std_error > 0.0 ? (e.mean - p.value) / e.std_error : (e.mean == p.value ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), e.mean - p.value));
  return c;
}

namespace {

struct PairRecord {
  double bipartite;
  double half;
  double max_excess;
};

}  // namespace

PairedRatio estimate_bipartite_ratio(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed) {
  spec.validate();
  auto blocks = run_blocks<PairRecord>(samples, seed, [&](Rng& rng) {
    const GraphStats s = graph_stats(sample_graph(spec, rng));
    return PairRecord{s.bipartite ? 1.0 : 0.0, std::ldexp(1.0, static_cast<int>(-s.cyclic_rank)),
                      static_cast<double>(s.max_excess)};
  });
  ModelSpec ones = spec, half = spec;
  ones.phat = 1.0;
  half.phat = 0.5;
  PairedRatio out;
  out.bipartite = reduce(blocks, "solvable", ones, Method::RaoBlackwell, seed,
                         [](const PairRecord& r) { return r.bipartite; });
  out.half = reduce(blocks, "solvable", half, Method::RaoBlackwell, seed, [](const PairRecord& r) { return r.half; });

  mpq_class cross = 0;
  for (const auto& block : blocks)
    for (const auto& r : block) cross += mpq_class(r.bipartite) * mpq_class(r.half);
  const auto n = static_cast<double>(out.half.samples);
  const mpq_class count(static_cast<unsigned long>(out.half.samples));
  const double cov =
      n > 1 ? mpq_class((cross - out.bipartite.sum * out.half.sum / count) / (count - 1)).get_d() : 0.0;
  const double var_b = out.bipartite.std_error * out.bipartite.std_error * n;
  const double var_h = out.half.std_error * out.half.std_error * n;
  out.ratio = out.bipartite.mean / out.half.mean;
  const double r = out.ratio;
  const double var_ratio = (var_b - 2.0 * r * cov + r * r * var_h) / (out.half.mean * out.half.mean);
  out.ratio_stderr = std::sqrt(std::max(0.0, var_ratio) / n);
  return out;
}

ConditionalSolvability estimate_conditional_solvability(const ModelSpec& spec, std::uint64_t samples,
                                                        SeedSpec seed, std::int64_t max_excess_bound) {
  spec.validate();
  auto blocks = run_blocks<PairRecord>(samples, seed, [&](Rng& rng) {
    const GraphStats s = graph_stats(sample_graph(spec, rng));
    return PairRecord{s.bipartite ? 1.0 : 0.0, std::ldexp(1.0, static_cast<int>(-s.cyclic_rank)),
                      static_cast<double>(s.max_excess)};
  });
  ModelSpec half = spec;
  half.phat = 0.5;
  ConditionalSolvability out;
  out.unconditional =
      reduce(blocks, "solvable", half, Method::RaoBlackwell, seed, [](const PairRecord& r) { return r.half; });
  mpq_class sum = 0, sum_sq = 0;
  std::uint64_t count = 0;
  for (const auto& block : blocks)
    for (const auto& r : block)
      if (r.max_excess <= static_cast<double>(max_excess_bound)) {
        const mpq_class v(r.half);
        sum += v;
        sum_sq += v * v;
        ++count;
      }
  out.conditional_samples = count;
  if (count > 0) {
    const mpq_class c(static_cast<unsigned long>(count));
    out.conditional_mean = mpq_class(sum / c).get_d();
    if (count > 1) {
      const double var = mpq_class((sum_sq - sum * sum / c) / (c - 1)).get_d();
      out.conditional_stderr = std::sqrt(std::max(0.0, var) / static_cast<double>(count));
    }
  }
  const double se = std::hypot(out.conditional_stderr, out.unconditional.std_error);
  out.z = se > 0.0 ? (out.conditional_mean - out.unconditional.mean) / se : 0.0;
  return out;
}

}  // namespace twoxor
