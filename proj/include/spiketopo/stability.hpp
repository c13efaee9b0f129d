#pragma once

#include <vector>

#include "spiketopo/core.hpp"
#include "spiketopo/pipeline.hpp"

namespace spiketopo {

struct SweepRow {
  double q = 0.0;
  double mean = 0.0;
  double std = 0.0;
};

/// start, start+step, ..., end; the point count is rounded so that
/// (0, 2, 0.005) yields 401 points ending exactly at 2.
std::vector<double> q_grid(double start, double end, double step);

/// run_repetitions at every q of an ascending, nonempty grid.
std::vector<SweepRow> q_sweep(const Dataset& dataset, const PipelineConfig& config, const std::vector<double>& grid);

/// lhs <= rhs + tolerance.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

inline constexpr double kBoundTolerance = 1e-9;

/// Lipschitz constant T(T+1)/2 of q -> VP_q on the domain {0..T}.
double vp_lipschitz_constant(Tick t_max);

/// |VP_q - VP_q2| against T(T+1)/2 |q - q2|.
BoundCheck check_lemma1(const SpikeTrain& a, const SpikeTrain& b, double q, double q2, Tick t_max);

struct Theorem1Check : BoundCheck {
  /// 2 * max over train pairs of |VP_q - VP_q2|; also bounds lhs.
  double distortion_bound = 0.0;
  bool within_distortion = true;
};

/// Bottleneck distance between the ensemble's diagrams at q and q2 against
/// the Lipschitz bound.
Theorem1Check check_theorem1(const TrainEnsemble& ensemble, double q, double q2, int degree);

/// Wasserstein-p between the two diagram samples (bottleneck ground metric)
/// against twice the Wasserstein-p between the ensemble samples (Hausdorff
/// ground metric under VP_q). Samples have equal size, at most 12, and every
/// ensemble has the same number of trains.
BoundCheck check_theorem2(const std::vector<TrainEnsemble>& sample_a, const std::vector<TrainEnsemble>& sample_b,
                          double q, int degree, double p);

}  // namespace spiketopo
