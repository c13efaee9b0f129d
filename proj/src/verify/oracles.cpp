#include "spiketopo/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace spiketopo::verify {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double draw_value(Rng& rng, std::size_t levels) {
  if (levels == 0) return 1.0 - rng.uniform01();
  return static_cast<double>(rng.between(1, static_cast<std::int64_t>(levels)));
}

int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin(), rows.end(), [mask](std::uint64_t r) { return (r & mask) != 0; });
    if (pivot == rows.end()) continue;
    const std::uint64_t p = *pivot;
    rows.erase(pivot);
    for (auto& r : rows)
      if (r & mask) r ^= p;
    ++rank;
  }
  return rank;
}

double point_cost(const DiagramPoint& x, const DiagramPoint& y) {
  if (x.is_infinite() != y.is_infinite()) return kInf;
  if (x.is_infinite()) return std::abs(x.birth - y.birth);
  return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
}

double diagonal_cost(const DiagramPoint& x) { return x.is_infinite() ? kInf : (x.death - x.birth) / 2.0; }

double gaussian(double x, double mean, double bandwidth) {
  const double z = (x - mean) / bandwidth;
  return std::exp(-0.5 * z * z) / (bandwidth * std::sqrt(2.0 * std::numbers::pi));
}

// Sorting first makes equal multisets give bit-identical densities, so exact
// ties stay ties.
double mixture(std::vector<double> samples, double x, double bandwidth) {
  std::sort(samples.begin(), samples.end());
  double sum = 0.0;
  for (double s : samples) sum += gaussian(x, s, bandwidth);
  return sum / static_cast<double>(samples.size());
}

std::size_t argmax_first(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

}  // namespace

SpikeTrain random_train(Rng& rng, Tick t_max, std::size_t max_spikes) {
  const auto count = static_cast<std::size_t>(rng.below(max_spikes + 1));
  std::vector<Tick> all(static_cast<std::size_t>(t_max + 1));
  std::iota(all.begin(), all.end(), Tick{0});
  rng.shuffle(all);
  all.resize(std::min(count, all.size()));
  return SpikeTrain::from_unsorted(std::move(all), TimeDomain(t_max));
}

TrainEnsemble random_ensemble(Rng& rng, std::size_t k, Tick t_max, std::size_t max_spikes) {
  std::vector<SpikeTrain> trains;
  for (std::size_t i = 0; i < k; ++i) trains.push_back(random_train(rng, t_max, max_spikes));
  return TrainEnsemble(std::move(trains));
}

DistanceMatrix random_matrix(Rng& rng, std::size_t n, std::size_t levels) {
  DistanceMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, draw_value(rng, levels));
  return m;
}

PersistenceDiagram random_degree0_diagram(Rng& rng, std::size_t finite, std::size_t levels) {
  std::vector<DiagramPoint> points;
  for (std::size_t i = 0; i < finite; ++i) points.push_back({0.0, draw_value(rng, levels)});
  points.push_back({0.0, kInf});
  return PersistenceDiagram(0, std::move(points));
}

PersistenceDiagram random_diagram(Rng& rng, int degree, std::size_t points, std::size_t levels) {
  std::vector<DiagramPoint> out;
  for (std::size_t i = 0; i < points; ++i) {
    double a = draw_value(rng, levels), b = draw_value(rng, levels);
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  return PersistenceDiagram(degree, std::move(out));
}

std::vector<double> kruskal_weights(const DistanceMatrix& matrix) {
  const std::size_t n = matrix.size();
  struct Edge {
    double w;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({matrix(i, j), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.w < b.w; });
  std::vector<std::size_t> component(n);
  std::iota(component.begin(), component.end(), 0);
  std::vector<double> weights;
  for (const auto& e : edges) {
    const std::size_t from = component[e.j], to = component[e.i];
    if (from == to) continue;
    for (auto& c : component)
      if (c == from) c = to;
    weights.push_back(e.w);
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

std::vector<DiagramPoint> betti_degree1(const DistanceMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n > 11) throw std::invalid_argument("betti_degree1: at most 11 points");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  auto edge_bit = [&](std::size_t i, std::size_t j) {
    const auto it = std::find(edges.begin(), edges.end(), std::make_pair(std::min(i, j), std::max(i, j)));
    return std::uint64_t{1} << (it - edges.begin());
  };

  std::vector<double> values;
  for (const auto& [i, j] : edges) values.push_back(matrix(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t m = values.size();

  // Index -1 (stored as 0 here) is the complex with vertices only.
  auto edges_at = [&](std::size_t level) {
    std::vector<std::size_t> out;
    if (level == 0) return out;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (matrix(edges[e].first, edges[e].second) <= values[level - 1]) out.push_back(e);
    return out;
  };
  // Cycle space of the graph at a level: one fundamental cycle per non-tree
  // edge of a BFS forest.
  auto cycles_at = [&](std::size_t level) {
    const auto present = edges_at(level);
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t e : present) {
      adjacency[edges[e].first].push_back(edges[e].second);
      adjacency[edges[e].second].push_back(edges[e].first);
    }
    std::vector<std::size_t> parent(n, n), root_of(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (root_of[r] != n) continue;
      root_of[r] = r;
      std::vector<std::size_t> queue{r};
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::size_t w : adjacency[queue[head]])
          if (root_of[w] == n) {
            root_of[w] = r;
            parent[w] = queue[head];
            queue.push_back(w);
          }
    }
    auto path_to_root = [&](std::size_t v) {
      std::uint64_t mask = 0;
      for (; parent[v] != n; v = parent[v]) mask ^= edge_bit(v, parent[v]);
      return mask;
    };
    std::vector<std::uint64_t> cycles;
    for (std::size_t e : present) {
      const auto [i, j] = edges[e];
      if (parent[i] == j || parent[j] == i) continue;
      cycles.push_back(edge_bit(i, j) ^ path_to_root(i) ^ path_to_root(j));
    }
    return cycles;
  };
  auto boundaries_at = [&](std::size_t level) {
    std::vector<std::uint64_t> out;
    if (level == 0) return out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (std::max({matrix(i, j), matrix(i, k), matrix(j, k)}) <= values[level - 1])
            out.push_back(edge_bit(i, j) ^ edge_bit(i, k) ^ edge_bit(j, k));
    return out;
  };

  // beta[a][b] = rank of H1(K_a) -> H1(K_b) = dim(Z_a + B_b) - dim B_b.
  std::vector<std::vector<int>> beta(m + 1, std::vector<int>(m + 1, 0));
  for (std::size_t a = 0; a <= m; ++a) {
    const auto z = cycles_at(a);
    for (std::size_t b = a; b <= m; ++b) {
      const auto boundary = boundaries_at(b);
      auto combined = boundary;
      combined.insert(combined.end(), z.begin(), z.end());
      beta[a][b] = gf2_rank(combined) - gf2_rank(boundary);
    }
  }

  std::vector<DiagramPoint> points;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      const int mu = beta[i][j - 1] - beta[i][j] - beta[i - 1][j - 1] + beta[i - 1][j];
      for (int c = 0; c < mu; ++c) points.push_back({values[i - 1], values[j - 1]});
    }
    const int essential = beta[i][m] - beta[i - 1][m];
    for (int c = 0; c < essential; ++c) points.push_back({values[i - 1], kInf});
  }
  std::sort(points.begin(), points.end());
  return points;
}

double bottleneck_exhaustive(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  const auto pa = a.points();
  const auto pb = b.points();
  if (pa.size() + pb.size() > 14) throw std::invalid_argument("bottleneck_exhaustive: inputs too large");
  std::vector<bool> used(pb.size(), false);
  double best = kInf;
  // Assign each point of a either to the diagonal or to an unused point of b.
  auto recurse = [&](auto&& self, std::size_t i, double worst) -> void {
    if (worst >= best) return;
    if (i == pa.size()) {
      for (std::size_t j = 0; j < pb.size(); ++j)
        if (!used[j]) worst = std::max(worst, diagonal_cost(pb[j]));
      best = std::min(best, worst);
      return;
    }
    self(self, i + 1, std::max(worst, diagonal_cost(pa[i])));
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      self(self, i + 1, std::max(worst, point_cost(pa[i], pb[j])));
      used[j] = false;
    }
  };
  recurse(recurse, 0, 0.0);
  // Only reachable when both are empty or every matching costs infinity.
  if (pa.empty() && pb.empty()) return 0.0;
  return best;
}

double wasserstein_permutations(std::size_t n, std::span<const double> costs, double p) {
  if (n == 0) return 0.0;
  if (n > 9) throw std::invalid_argument("wasserstein_permutations: n too large");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = costs[i * n + perm[i]];
      value = std::isinf(p) ? std::max(value, c) : value + std::pow(c, p) / static_cast<double>(n);
    }
    if (!std::isinf(p)) value = std::pow(value, 1.0 / p);
    best = std::min(best, value);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t rate_only_predict(std::span<const ProcessedTrial> training, std::size_t stimulus_count,
                              double bandwidth, const SpikeTrain& train) {
  std::vector<double> likelihood(stimulus_count);
  for (std::size_t s = 0; s < stimulus_count; ++s) {
    std::vector<double> counts;
    for (const auto& t : training)
      if (t.stimulus == s) counts.push_back(static_cast<double>(t.train.size()));
    likelihood[s] = mixture(counts, static_cast<double>(train.size()), bandwidth);
  }
  return argmax_first(likelihood);
}

std::size_t phase_only_predict(std::span<const ProcessedTrial> training, std::size_t stimulus_count,
                               double bandwidth, double uniform_span, const SpikeTrain& train) {
  std::vector<double> likelihood(stimulus_count, 1.0);
  for (std::size_t s = 0; s < stimulus_count; ++s) {
    std::vector<double> spikes;
    for (const auto& t : training)
      if (t.stimulus == s)
        for (Tick x : t.train.times()) spikes.push_back(static_cast<double>(x));
    for (Tick x : train.times())
      likelihood[s] *= spikes.empty() ? 1.0 / uniform_span : mixture(spikes, static_cast<double>(x), bandwidth);
  }
  return argmax_first(likelihood);
}

}  // namespace spiketopo::verify
