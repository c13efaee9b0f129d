#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiketopo/core.hpp"

namespace spiketopo {

/// Half-open tick range [start, end) in the dataset's time coordinates.
struct Window {
  Tick start = 0;
  Tick end = 0;
};

struct PipelineConfig {
  double q = 2.005;
  int degree = 0;
  std::size_t trials_per_stimulus = 10;
  std::size_t repetitions = 20;
  std::uint64_t rng_seed = 0;
  std::optional<Window> window;  // whole recording when unset

  /// Throws std::invalid_argument on q < 0, degree outside {0,1},
  /// trials_per_stimulus < 2, repetitions < 1 or an empty window.
  void validate() const;
};

struct TrialPrediction {
  std::int64_t trial_id = 0;
  std::string truth;
  std::string predicted;
  std::size_t repetition = 0;
};

struct ClassificationReport {
  double score = 0.0;  // correct / total over every row of per_trial
  std::vector<TrialPrediction> per_trial;
  std::vector<double> per_repetition_scores;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation of per_repetition_scores
};

/// Fills score, mean and std from per_trial and per_repetition_scores.
void finalize_report(ClassificationReport& report);

/// Leave-one-out 1-nearest-neighbour over a precomputed distance matrix.
/// Ties go to the smallest index.
ClassificationReport loocv_1nn(const DistanceMatrix& matrix, const std::vector<std::string>& labels);
ClassificationReport loocv_1nn(const DistanceMatrix& matrix, const std::vector<std::string>& labels,
                               const std::vector<std::int64_t>& trial_ids);

/// Keeps spikes with start <= t < end, shifted so that start maps to 0;
/// the new domain is {0..end-start-1}.
Dataset window_trials(const Dataset& dataset, Tick start, Tick end);

/// Persistence diagram of one trial: VP matrix of the canonicalized ensemble,
/// then Rips persistence in the requested degree.
PersistenceDiagram ensemble_diagram(const TrainEnsemble& ensemble, double q, int degree);

struct PipelineRun {
  DistanceMatrix bdm;
  std::vector<std::int64_t> trial_ids;  // rows of bdm
  std::vector<std::string> labels;
  ClassificationReport report;
};

/// One subsample: trials_per_stimulus trials per stimulus drawn without
/// replacement from rng_seed, ordered by (stimulus, trial_id).
PipelineRun run_pipeline_once(const Dataset& dataset, const PipelineConfig& config);

/// Repetition r uses seed rng_seed + r.
ClassificationReport run_repetitions(const Dataset& dataset, const PipelineConfig& config);

/// Sample mean and sample standard deviation (0 for fewer than two values).
std::pair<double, double> mean_and_std(const std::vector<double>& values);

}  // namespace spiketopo
