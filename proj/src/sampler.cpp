#include "twoxor/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace twoxor {

std::string to_string(GraphModel model) { return model == GraphModel::Gnp ? "gnp" : "gnm"; }

GraphModel parse_graph_model(const std::string& text) {
  if (text == "gnp" || text == "Gnp" || text == "GNP") return GraphModel::Gnp;
  if (text == "gnm" || text == "Gnm" || text == "GNM") return GraphModel::Gnm;
  throw std::invalid_argument("unknown graph model '" + text + "' (expected gnp or gnm)");
}

ModelSpec ModelSpec::from_gamma(GraphModel model, std::size_t n, double gamma, double phat) {
  return ModelSpec{model, n, (gamma - 1.0) * std::cbrt(static_cast<double>(n)), phat};
}

void ModelSpec::validate() const {
  if (n == 0) throw std::invalid_argument("model needs at least one vertex");
  if (!(phat >= 0.0 && phat <= 1.0)) throw std::invalid_argument("phat must lie in [0,1]");
  if (model == GraphModel::Gnp)
    (void)critical_p(n, lambda);
  else
    (void)critical_m(n, lambda);
}

Rng::Rng(SeedSpec seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master_seed),
                    static_cast<std::uint32_t>(seed.master_seed >> 32),
                    static_cast<std::uint32_t>(seed.stream_index),
                    static_cast<std::uint32_t>(seed.stream_index >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire, "Fast random integer generation in an interval" (2019).
  unsigned __int128 product = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double critical_p(std::size_t n, double lambda) {
  if (n == 0) throw std::invalid_argument("critical_p: n must be positive");
  const double nd = static_cast<double>(n);
  const double p = (1.0 + lambda / std::cbrt(nd)) / nd;
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("critical_p: lambda=" + std::to_string(lambda) +
                                " gives p=" + std::to_string(p) + " outside [0,1]");
  }
  return p;
}

std::uint64_t critical_m(std::size_t n, double lambda) {
  if (n == 0) throw std::invalid_argument("critical_m: n must be positive");
  const double nd = static_cast<double>(n);
  const double m = nd / 2.0 * (1.0 + lambda / std::cbrt(nd));
  const auto total = static_cast<double>(pair_count(n));
  // nearbyint honours the default round-half-to-even mode.
  const double rounded = std::nearbyint(m);
  if (!(rounded >= 0.0 && rounded <= total)) {
    throw std::invalid_argument("critical_m: lambda=" + std::to_string(lambda) +
                                " gives m=" + std::to_string(m) + " outside [0,N]");
  }
  return static_cast<std::uint64_t>(rounded);
}

static std::uint64_t row_offset(std::uint64_t n, std::uint64_t u) { return u * (2 * n - u - 1) / 2; }

std::uint64_t pair_index(std::size_t n, Vertex u, Vertex v) {
  return row_offset(n, u) + (v - u - 1);
}

Edge pair_at(std::size_t n, std::uint64_t index) {
  const auto nn = static_cast<std::uint64_t>(n);
  // Solve u(2n-u-1)/2 <= index for the largest u, then correct rounding.
  const double b = 2.0 * static_cast<double>(nn) - 1.0;
  double guess = (b - std::sqrt(b * b - 8.0 * static_cast<double>(index))) / 2.0;
  auto u = static_cast<std::uint64_t>(std::max(0.0, std::floor(guess)));
  if (u > nn - 2) u = nn - 2;
  while (u > 0 && row_offset(nn, u) > index) --u;
  while (u + 2 < nn && row_offset(nn, u + 1) <= index) ++u;
  const auto v = u + 1 + (index - row_offset(nn, u));
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

namespace {

// Walks sorted pair indices and converts them to (u, v) in O(n + count).
class PairCursor {
 public:
  explicit PairCursor(std::uint64_t n) : n_(n), row_end_(n > 1 ? n - 1 : 0) {}

  Edge at(std::uint64_t index) {
    while (index >= row_end_) {
      row_start_ = row_end_;
      ++u_;
      row_end_ += n_ - u_ - 1;
    }
    return {static_cast<Vertex>(u_), static_cast<Vertex>(u_ + 1 + (index - row_start_))};
  }

 private:
  std::uint64_t n_;
  std::uint64_t u_ = 0;
  std::uint64_t row_start_ = 0;
  std::uint64_t row_end_;
};

}  // namespace

Graph sample_gnp(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must lie in [0,1]");
  const std::uint64_t total = pair_count(n);
  std::vector<Edge> edges;
  if (p == 0.0 || total == 0) return build_graph(n, std::move(edges));
  if (p == 1.0) return complete_graph(n);

  edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.1) + 16);
  const double log_q = std::log1p(-p);
  PairCursor cursor(n);
  // Geometric jumps over the lexicographic pair order (Batagelj-Brandes).
  std::uint64_t next = 0;
  for (;;) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double skip = std::floor(std::log(u) / log_q);
    if (skip >= static_cast<double>(total - next)) break;
    next += static_cast<std::uint64_t>(skip);
    edges.push_back(cursor.at(next));
    if (++next >= total) break;
  }
  return build_graph(n, std::move(edges));
}

Graph sample_gnm(std::size_t n, std::uint64_t m, Rng& rng) {
  const std::uint64_t total = pair_count(n);
  if (m > total) throw std::invalid_argument("sample_gnm: m exceeds the number of pairs");
  const bool complement = m > total / 2;
  const std::uint64_t draws = complement ? total - m : m;

  // Floyd's algorithm: uniform `draws`-subset of [0, total) without materializing it.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(draws) * 2);
  for (std::uint64_t j = total - draws; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> picked(chosen.begin(), chosen.end());
  std::sort(picked.begin(), picked.end());

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  PairCursor cursor(n);
  if (!complement) {
    for (auto idx : picked) edges.push_back(cursor.at(idx));
  } else {
    auto skip = picked.begin();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (skip != picked.end() && *skip == idx) {
        ++skip;
        continue;
      }
      edges.push_back(cursor.at(idx));
    }
  }
  return build_graph(n, std::move(edges));
}

EdgeLabels sample_labels(std::size_t edge_count, double phat, Rng& rng) {
  if (!(phat >= 0.0 && phat <= 1.0)) throw std::invalid_argument("sample_labels: phat must lie in [0,1]");
  EdgeLabels labels(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) labels[i] = rng.bernoulli(phat) ? 1 : 0;
  return labels;
}

Graph sample_graph(const ModelSpec& spec, Rng& rng) {
  if (spec.model == GraphModel::Gnp) return sample_gnp(spec.n, critical_p(spec.n, spec.lambda), rng);
  return sample_gnm(spec.n, critical_m(spec.n, spec.lambda), rng);
}

Graph sample_gnp(std::size_t n, double p, SeedSpec seed) {
  Rng rng(seed);
  return sample_gnp(n, p, rng);
}

Graph sample_gnm(std::size_t n, std::uint64_t m, SeedSpec seed) {
  Rng rng(seed);
  return sample_gnm(n, m, rng);
}

EdgeLabels sample_labels(std::size_t edge_count, double phat, SeedSpec seed) {
  Rng rng(seed);
  return sample_labels(edge_count, phat, rng);
}

}  // namespace twoxor
