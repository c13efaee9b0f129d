#include "spiketopo/diagram_distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "spiketopo/metrics.hpp"
#include "spiketopo/parallel.hpp"

namespace spiketopo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double linf(const DiagramPoint& a, const DiagramPoint& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double half_persistence(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

void split(const PersistenceDiagram& d, std::vector<DiagramPoint>& finite, std::vector<double>& infinite_births) {
  for (const auto& p : d.points()) {
    if (p.is_infinite())
      infinite_births.push_back(p.birth);
    else
      finite.push_back(p);
  }
  std::sort(infinite_births.begin(), infinite_births.end());
}

// Kuhn's augmenting paths.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adjacency)
      : adj_(adjacency), match_right_(adjacency.size(), kUnmatched) {}

  bool perfect() {
    const std::size_t n = adj_.size();
    for (std::size_t left = 0; left < n; ++left) {
      visited_.assign(n, false);
      if (!augment(left)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  bool augment(std::size_t left) {
    for (std::size_t right : adj_[left]) {
      if (visited_[right]) continue;
      visited_[right] = true;
      if (match_right_[right] == kUnmatched || augment(match_right_[right])) {
        match_right_[right] = left;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

// Feasibility of a finite-point matching with every cost <= eps. Left side:
// points of A, then diagonal copies of B's points. Right side: points of B,
// then diagonal copies of A's points. Diagonal copies pair among themselves freely.
bool matching_within(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b, double eps) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::vector<std::size_t>> adj(na + nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j)
      if (linf(a[i], b[j]) <= eps) adj[i].push_back(j);
    if (half_persistence(a[i]) <= eps) adj[i].push_back(nb + i);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (half_persistence(b[j]) <= eps) adj[na + j].push_back(j);
    for (std::size_t i = 0; i < na; ++i) adj[na + j].push_back(nb + i);
  }
  return BipartiteMatcher(adj).perfect();
}

}  // namespace

bool has_perfect_matching(std::size_t n, const std::vector<std::vector<std::size_t>>& adjacency) {
  if (adjacency.size() != n) throw std::invalid_argument("has_perfect_matching: adjacency size mismatch");
  return BipartiteMatcher(adjacency).perfect();
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("bottleneck: diagrams have different degrees");
  std::vector<DiagramPoint> fa, fb;
  std::vector<double> ia, ib;
  split(a, fa, ia);
  split(b, fb, ib);
  if (ia.size() != ib.size()) return kInf;

  // Sorted order is an optimal bottleneck matching on a line.
  double essential = 0.0;
  for (std::size_t i = 0; i < ia.size(); ++i) essential = std::max(essential, std::abs(ia[i] - ib[i]));

  std::vector<double> candidates{0.0};
  for (const auto& p : fa) candidates.push_back(half_persistence(p));
  for (const auto& p : fb) candidates.push_back(half_persistence(p));
  for (const auto& p : fa)
    for (const auto& r : fb) candidates.push_back(linf(p, r));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Sending everything to the diagonal always fits under the largest candidate.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matching_within(fa, fb, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return std::max(essential, candidates[lo]);
}

double bottleneck_degree0_fast(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.degree() != 0 || b.degree() != 0) throw std::invalid_argument("bottleneck_degree0_fast: degree-0 diagrams only");
  if (a.infinite_count() != b.infinite_count()) {
    throw std::invalid_argument("bottleneck_degree0_fast: infinite bar counts differ");
  }
  for (const auto* d : {&a, &b})
    for (const auto& p : d->points())
      if (p.birth != 0.0) throw std::invalid_argument("bottleneck_degree0_fast: all births must be zero");

  std::vector<double> da = a.finite_deaths(), db = b.finite_deaths();
  std::sort(da.begin(), da.end(), std::greater<>());
  std::sort(db.begin(), db.end(), std::greater<>());

  // Some optimal matching pairs the r largest deaths of each side in order
  // and sends every remaining point to the diagonal; try every r.
  const std::size_t r_max = std::min(da.size(), db.size());
  double matched = 0.0;
  double best = kInf;
  for (std::size_t r = 0; r <= r_max; ++r) {
    if (r > 0) matched = std::max(matched, std::abs(da[r - 1] - db[r - 1]));
    const double rest_a = r < da.size() ? da[r] / 2.0 : 0.0;
    const double rest_b = r < db.size() ? db[r] / 2.0 : 0.0;
    best = std::min(best, std::max({matched, rest_a, rest_b}));
  }
  return best;
}

DistanceMatrix bottleneck_matrix(std::span<const PersistenceDiagram> diagrams) {
  const std::size_t n = diagrams.size();
  for (const auto& d : diagrams)
    if (d.degree() != diagrams.front().degree()) throw std::invalid_argument("bottleneck_matrix: mixed degrees");

  auto zero_births = [](const PersistenceDiagram& d) {
    return std::all_of(d.points().begin(), d.points().end(), [](const DiagramPoint& p) { return p.birth == 0.0; });
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<double> values(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto& a = diagrams[pairs[k].first];
    const auto& b = diagrams[pairs[k].second];
    const bool fast = a.degree() == 0 && a.infinite_count() == b.infinite_count() && zero_births(a) && zero_births(b);
    values[k] = fast ? bottleneck_degree0_fast(a, b) : bottleneck(a, b);
  });

  DistanceMatrix out(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (std::isinf(values[k])) {
      throw DataError("bottleneck_matrix: diagrams " + std::to_string(pairs[k].first) + " and " +
                      std::to_string(pairs[k].second) + " have different numbers of infinite bars");
    }
    out.set(pairs[k].first, pairs[k].second, values[k]);
  }
  return out;
}

std::vector<std::size_t> hungarian(std::size_t n, std::span<const double> costs) {
  if (costs.size() != n * n) throw std::invalid_argument("hungarian: expected n*n costs");
  // Potentials formulation, 1-indexed with column 0 as the virtual start.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t col = 0;
    std::vector<double> min_slack(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col] = true;
      const std::size_t row = row_of[col];
      double delta = kInf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = costs[(row - 1) * n + (j - 1)] - u[row] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    do {
      const std::size_t prev = way[col];
      row_of[col] = row_of[prev];
      col = prev;
    } while (col != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

double assignment_wasserstein(std::size_t n, std::span<const double> costs, double p) {
  if (costs.size() != n * n) throw std::invalid_argument("assignment_wasserstein: expected n*n costs");
  if (!(p >= 1.0)) throw std::invalid_argument("assignment_wasserstein: p must be in [1, inf]");
  if (n == 0) return 0.0;
  if (std::isinf(p)) {
    std::vector<double> levels(costs.begin(), costs.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      std::vector<std::vector<std::size_t>> adj(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (costs[i * n + j] <= levels[mid]) adj[i].push_back(j);
      if (has_perfect_matching(n, adj))
        hi = mid;
      else
        lo = mid + 1;
    }
    return levels[lo];
  }
  std::vector<double> powered(costs.size());
  std::transform(costs.begin(), costs.end(), powered.begin(), [p](double c) { return std::pow(c, p); });
  const auto assignment = hungarian(n, powered);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += powered[i * n + assignment[i]];
  // Uniform weights 1/n on each atom.
  return std::pow(total / static_cast<double>(n), 1.0 / p);
}

double wasserstein_empirical(std::span<const PersistenceDiagram> set_a, std::span<const PersistenceDiagram> set_b,
                             double p) {
  if (set_a.size() != set_b.size()) throw std::invalid_argument("wasserstein_empirical: sample sizes differ");
  if (set_a.size() > 12) throw std::invalid_argument("wasserstein_empirical: at most 12 diagrams per sample");
  const std::size_t n = set_a.size();
  std::vector<double> costs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) costs[i * n + j] = bottleneck(set_a[i], set_b[j]);
  return assignment_wasserstein(n, costs, p);
}

double hausdorff_ensembles(const TrainEnsemble& a, const TrainEnsemble& b, double q) {
  if (a.size() != b.size()) throw std::invalid_argument("hausdorff_ensembles: ensembles must have equal size");
  const TrainEnsemble ca = canonicalize(a), cb = canonicalize(b);
  const std::size_t k = ca.size();
  std::vector<double> d(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d[i * k + j] = vp_distance(ca[i], cb[j], q);
  double result = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double row_min = kInf, col_min = kInf;
    for (std::size_t j = 0; j < k; ++j) {
      row_min = std::min(row_min, d[i * k + j]);
      col_min = std::min(col_min, d[j * k + i]);
    }
    result = std::max({result, row_min, col_min});
  }
  return result;
}

}  // namespace spiketopo
