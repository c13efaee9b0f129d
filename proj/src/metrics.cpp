#include "spiketopo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace spiketopo {
namespace {

void check_q(double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) throw std::invalid_argument("VP cost parameter q must be finite and >= 0");
}

// Cost of an edit path kept as exact integers: unmatched spikes and total shift.
struct PathCost {
  std::int64_t unmatched = 0;
  std::int64_t shift = 0;
};

double round_cost(const PathCost& c, double q) {
  return std::fma(q, static_cast<double>(c.shift), static_cast<double>(c.unmatched));
}

// Exact test of unmatched_a + q*shift_a < unmatched_b + q*shift_b. The fused
// multiply-add rounds once, and rounding never flips the sign of a nonzero
// value, so the comparison is exact for any double q.
bool cheaper(const PathCost& a, const PathCost& b, double q) {
  const double diff = std::fma(q, static_cast<double>(a.shift - b.shift), static_cast<double>(a.unmatched - b.unmatched));
  return diff < 0.0;
}

std::size_t symmetric_difference(std::span<const Tick> a, std::span<const Tick> b) {
  std::size_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

}  // namespace

double vp_cost(const SpikeTrain& a, const SpikeTrain& b, const PartialBijection& phi, double q) {
  check_q(q);
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  PathCost cost;
  for (const auto& [from, to] : phi.pairs) {
    if (from >= a.size() || to >= b.size()) throw std::invalid_argument("vp_cost: bijection index out of range");
    if (used_a[from] || used_b[to]) throw std::invalid_argument("vp_cost: bijection repeats an index");
    used_a[from] = used_b[to] = true;
    cost.shift += std::abs(a[from] - b[to]);
  }
  cost.unmatched = static_cast<std::int64_t>(a.size() + b.size() - 2 * phi.pairs.size());
  return round_cost(cost, q);
}

double vp_distance(const SpikeTrain& a, const SpikeTrain& b, double q) {
  check_q(q);
  if (q == 0.0) {
    return static_cast<double>(a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
  }
  if (q > 2.0) return static_cast<double>(symmetric_difference(a.times(), b.times()));
  return vp_distance_dp(a, b, q);
}

double vp_distance_dp(const SpikeTrain& a, const SpikeTrain& b, double q) {
  check_q(q);
  const auto s = a.times();
  const auto t = b.times();
  const std::size_t m = t.size();

  std::vector<PathCost> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = {static_cast<std::int64_t>(j), 0};

  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = {static_cast<std::int64_t>(i), 0};
    for (std::size_t j = 1; j <= m; ++j) {
      // Candidate order fixes tie-breaking: erase from S, erase from S', match.
      PathCost best{prev[j].unmatched + 1, prev[j].shift};
      const PathCost erase_b{cur[j - 1].unmatched + 1, cur[j - 1].shift};
      if (cheaper(erase_b, best, q)) best = erase_b;
      const PathCost match{prev[j - 1].unmatched, prev[j - 1].shift + std::abs(s[i - 1] - t[j - 1])};
      if (cheaper(match, best, q)) best = match;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return round_cost(prev[m], q);
}

double vp_brute_force(const SpikeTrain& a, const SpikeTrain& b, double q) {
  check_q(q);
  if (a.size() > kBruteForceMaxSpikes || b.size() > kBruteForceMaxSpikes) {
    throw std::invalid_argument("vp_brute_force: trains limited to " + std::to_string(kBruteForceMaxSpikes) + " spikes");
  }
  PartialBijection phi;
  std::vector<bool> used(b.size(), false);
  double best = std::numeric_limits<double>::infinity();

  // Spike i of S is either left unmatched or sent to any unused spike of S'.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == a.size()) {
      best = std::min(best, vp_cost(a, b, phi, q));
      return;
    }
    self(self, i + 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      phi.pairs.push_back({i, j});
      self(self, i + 1);
      phi.pairs.pop_back();
      used[j] = false;
    }
  };
  recurse(recurse, 0);
  return best;
}

DistanceMatrix pairwise_matrix(const TrainEnsemble& ensemble, const TrainMetric& metric) {
  const std::size_t k = ensemble.size();
  DistanceMatrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out.set(i, j, metric(ensemble[i], ensemble[j]));
  return out;
}

DistanceMatrix vp_matrix(const TrainEnsemble& ensemble, double q) {
  check_q(q);
  return pairwise_matrix(ensemble, [q](const SpikeTrain& a, const SpikeTrain& b) { return vp_distance(a, b, q); });
}

}  // namespace spiketopo
