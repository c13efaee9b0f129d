#include "spiketopo/stability.hpp"

#include <cmath>

#include "spiketopo/diagram_distance.hpp"
#include "spiketopo/metrics.hpp"
#include "spiketopo/persistence.hpp"

namespace spiketopo {

std::vector<double> q_grid(double start, double end, double step) {
  if (!(step > 0.0) || !(end >= start)) throw std::invalid_argument("q_grid: need step > 0 and end >= start");
  const auto intervals = static_cast<std::size_t>(std::llround((end - start) / step));
  std::vector<double> grid;
  grid.reserve(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) grid.push_back(start + static_cast<double>(i) * step);
  if (intervals > 0) grid.back() = end;
  return grid;
}

std::vector<SweepRow> q_sweep(const Dataset& dataset, const PipelineConfig& config, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("q_sweep: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("q_sweep: grid must be strictly ascending");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double q : grid) {
    PipelineConfig at_q = config;
    at_q.q = q;
    const auto report = run_repetitions(dataset, at_q);
    rows.push_back({q, report.mean, report.std});
  }
  return rows;
}

double vp_lipschitz_constant(Tick t_max) {
  const auto t = static_cast<double>(t_max);
  return t * (t + 1.0) / 2.0;
}

BoundCheck check_lemma1(const SpikeTrain& a, const SpikeTrain& b, double q, double q2, Tick t_max) {
  BoundCheck c;
  c.lhs = std::abs(vp_distance(a, b, q) - vp_distance(a, b, q2));
  c.rhs = vp_lipschitz_constant(t_max) * std::abs(q - q2);
  c.holds = c.lhs <= c.rhs + kBoundTolerance;
  return c;
}

Theorem1Check check_theorem1(const TrainEnsemble& ensemble, double q, double q2, int degree) {
  const TrainEnsemble canonical = canonicalize(ensemble);
  const DistanceMatrix m1 = vp_matrix(canonical, q);
  const DistanceMatrix m2 = vp_matrix(canonical, q2);
  double distortion = 0.0;
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = i + 1; j < m1.size(); ++j) distortion = std::max(distortion, std::abs(m1(i, j) - m2(i, j)));

  Theorem1Check c;
  c.lhs = bottleneck(ph_diagram(m1, degree), ph_diagram(m2, degree));
  c.rhs = vp_lipschitz_constant(ensemble.domain().t_max) * std::abs(q - q2);
  c.holds = c.lhs <= c.rhs + kBoundTolerance;
  c.distortion_bound = 2.0 * distortion;
  c.within_distortion = c.lhs <= c.distortion_bound + kBoundTolerance;
  return c;
}

BoundCheck check_theorem2(const std::vector<TrainEnsemble>& sample_a, const std::vector<TrainEnsemble>& sample_b,
                          double q, int degree, double p) {
  if (sample_a.size() != sample_b.size()) throw std::invalid_argument("check_theorem2: sample sizes differ");
  if (sample_a.empty() || sample_a.size() > 12) throw std::invalid_argument("check_theorem2: need 1..12 ensembles per sample");
  const std::size_t k = sample_a.front().size();
  for (const auto* sample : {&sample_a, &sample_b})
    for (const auto& e : *sample)
      if (e.size() != k) throw std::invalid_argument("check_theorem2: ensembles must have equal size");

  const std::size_t n = sample_a.size();
  std::vector<PersistenceDiagram> da, db;
  for (std::size_t i = 0; i < n; ++i) {
    da.push_back(ensemble_diagram(sample_a[i], q, degree));
    db.push_back(ensemble_diagram(sample_b[i], q, degree));
  }
  std::vector<double> hausdorff(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hausdorff[i * n + j] = hausdorff_ensembles(sample_a[i], sample_b[j], q);

  BoundCheck c;
  c.lhs = wasserstein_empirical(da, db, p);
  c.rhs = 2.0 * assignment_wasserstein(n, hausdorff, p);
  c.holds = c.lhs <= c.rhs + kBoundTolerance;
  return c;
}

}  // namespace spiketopo
