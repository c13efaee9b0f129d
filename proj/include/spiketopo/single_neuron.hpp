#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spiketopo/core.hpp"
#include "spiketopo/pipeline.hpp"

namespace spiketopo {

/// Trial x trial VP matrix of one neuron's trains, classified by LOOCV 1-NN.
ClassificationReport neuron_vp_1nn(const Dataset& dataset, std::size_t neuron_index, double q);

inline constexpr Tick kWarpIntervalTicks = 200;
inline constexpr std::size_t kWarpIntervals = 5;

struct LickTimes {
  std::vector<Tick> licks;      // ascending
  std::size_t onset_index = 0;  // first lick with the stimulus present

  /// Needs kWarpIntervals + 1 strictly increasing licks from the onset on.
  [[nodiscard]] bool usable() const;
};

/// Maps the spikes of the five lick intervals after onset linearly onto
/// consecutive 200-tick windows of {0..999}. An interval is [lick, next lick),
/// so a spike on a lick starts the later window. Spikes outside the five
/// intervals are dropped; rounded times that collide are merged.
/// Returns nullopt when the licks are unusable (the trial is excluded).
std::optional<SpikeTrain> time_warp(const SpikeTrain& train, const LickTimes& licks);

/// Gaussian mixture with one kernel per sample, evaluated analytically.
class GaussianKde {
 public:
  GaussianKde(std::vector<double> samples, double bandwidth);

  [[nodiscard]] double log_density(double x) const;
  [[nodiscard]] double density(double x) const;
  [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
  [[nodiscard]] double bandwidth() const noexcept { return bandwidth_; }

 private:
  std::vector<double> samples_;
  double bandwidth_;
};

struct ProcessedTrial {
  SpikeTrain train;
  std::size_t stimulus = 0;  // index into the stimulus list
  std::int64_t trial_id = 0;
};

struct RatePhaseConfig {
  double alpha = 0.875;  // weight of the rate posterior
  std::size_t splits = 15;
  double train_fraction = 0.8;
  double phase_bandwidth = 5.0;
  double rate_bandwidth = 2.0;
  double phase_span = 1000.0;  // support of the uniform fallback phase density
  std::uint64_t seed = 0;
};

struct Posteriors {
  std::vector<double> rate;
  std::vector<double> phase;
  std::vector<double> mixed;  // alpha * rate + (1 - alpha) * phase
};

/// Per-stimulus phase density (pooled spike times) and rate density (spike
/// counts per trial) fitted on a training set.
class RatePhaseModel {
 public:
  RatePhaseModel(std::span<const ProcessedTrial> training, std::size_t stimulus_count, const RatePhaseConfig& config);

  /// Sum of log phase densities over the spikes; 0 for an empty train.
  [[nodiscard]] double log_phase_likelihood(std::size_t stimulus, const SpikeTrain& train) const;
  [[nodiscard]] double log_rate_likelihood(std::size_t stimulus, const SpikeTrain& train) const;
  /// Uniform priors; normalization is done in log space.
  [[nodiscard]] Posteriors posteriors(const SpikeTrain& train) const;
  /// Argmax of the mixed posterior, ties to the smallest stimulus index.
  [[nodiscard]] std::size_t predict(const SpikeTrain& train) const;

 private:
  std::size_t stimulus_count_;
  RatePhaseConfig config_;
  std::vector<std::optional<GaussianKde>> phase_;  // empty when a stimulus has no training spikes
  std::vector<GaussianKde> rate_;
};

struct TrainTestSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per stimulus, round((1 - train_fraction) * n) trials (at least one, and
/// leaving at least one) go to the test set.
TrainTestSplit stratified_split(std::span<const ProcessedTrial> trials, std::size_t stimulus_count,
                                double train_fraction, std::uint64_t seed);

/// Repeated random splits; split s uses seed config.seed + s. Each split's
/// accuracy is one entry of per_repetition_scores.
ClassificationReport bayes_rate_phase(std::span<const ProcessedTrial> trials, const std::vector<std::string>& stimuli,
                                      const RatePhaseConfig& config);

struct NeuronTrials {
  std::vector<ProcessedTrial> trials;
  std::vector<std::int64_t> excluded_trial_ids;  // unusable or missing licks
};

/// One neuron's trains, time-warped when licks are given (keyed by trial_id).
NeuronTrials neuron_trials(const Dataset& dataset, std::size_t neuron_index,
                           const std::map<std::int64_t, LickTimes>* licks);

}  // namespace spiketopo
