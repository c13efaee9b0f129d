#include "spiketopo/single_neuron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spiketopo/metrics.hpp"
#include "spiketopo/parallel.hpp"
#include "spiketopo/rng.hpp"

namespace spiketopo {
namespace {

double log_sum_exp(std::span<const double> values) {
  const double top = *std::max_element(values.begin(), values.end());
  if (std::isinf(top)) return top;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - top);
  return top + std::log(sum);
}

std::vector<double> normalize_log(const std::vector<double>& log_weights) {
  const double total = log_sum_exp(log_weights);
  std::vector<double> out(log_weights.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(log_weights[i] - total);
  return out;
}

}  // namespace

ClassificationReport neuron_vp_1nn(const Dataset& dataset, std::size_t neuron_index, double q) {
  if (neuron_index >= dataset.neuron_count) {
    throw std::out_of_range("neuron_vp_1nn: neuron index " + std::to_string(neuron_index) + " out of range");
  }
  const std::size_t n = dataset.trials.size();
  std::vector<double> entries(n * n, 0.0);
  parallel_for(n, [&](std::size_t i) {
    const auto& a = dataset.trials[i].ensemble[neuron_index];
    for (std::size_t j = i + 1; j < n; ++j) entries[i * n + j] = vp_distance(a, dataset.trials[j].ensemble[neuron_index], q);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) entries[i * n + j] = entries[j * n + i];

  std::vector<std::string> labels;
  std::vector<std::int64_t> ids;
  for (const auto& trial : dataset.trials) {
    labels.push_back(trial.stimulus);
    ids.push_back(trial.trial_id);
  }
  return loocv_1nn(DistanceMatrix(n, std::move(entries)), labels, ids);
}

bool LickTimes::usable() const {
  if (licks.size() < onset_index + kWarpIntervals + 1) return false;
  for (std::size_t k = 0; k < kWarpIntervals; ++k)
    if (licks[onset_index + k + 1] <= licks[onset_index + k]) return false;
  return true;
}

std::optional<SpikeTrain> time_warp(const SpikeTrain& train, const LickTimes& licks) {
  if (!licks.usable()) return std::nullopt;
  constexpr Tick kLast = kWarpIntervalTicks * static_cast<Tick>(kWarpIntervals) - 1;
  std::vector<Tick> warped;
  for (Tick t : train.times()) {
    for (std::size_t k = 0; k < kWarpIntervals; ++k) {
      const Tick from = licks.licks[licks.onset_index + k];
      const Tick to = licks.licks[licks.onset_index + k + 1];
      if (t < from || t >= to) continue;
      const double offset = static_cast<double>(t - from) / static_cast<double>(to - from);
      const double x = static_cast<double>(kWarpIntervalTicks) * (static_cast<double>(k) + offset);
      // Rounding can push the final interval's tail onto tick 1000.
      warped.push_back(std::min<Tick>(static_cast<Tick>(std::floor(x + 0.5)), kLast));
      break;
    }
  }
  return SpikeTrain::from_unsorted(std::move(warped), TimeDomain(kLast));
}

GaussianKde::GaussianKde(std::vector<double> samples, double bandwidth)
    : samples_(std::move(samples)), bandwidth_(bandwidth) {
  if (samples_.empty()) throw std::invalid_argument("GaussianKde: no samples");
  if (!(bandwidth_ > 0.0)) throw std::invalid_argument("GaussianKde: bandwidth must be positive");
  // Sample order must not matter: equal multisets give bit-identical densities.
  std::sort(samples_.begin(), samples_.end());
}

double GaussianKde::log_density(double x) const {
  std::vector<double> terms(samples_.size());
  const double inv = 1.0 / bandwidth_;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const double z = (x - samples_[i]) * inv;
    terms[i] = -0.5 * z * z;
  }
  return log_sum_exp(terms) - std::log(static_cast<double>(samples_.size())) -
         std::log(bandwidth_ * std::sqrt(2.0 * std::numbers::pi));
}

double GaussianKde::density(double x) const { return std::exp(log_density(x)); }

RatePhaseModel::RatePhaseModel(std::span<const ProcessedTrial> training, std::size_t stimulus_count,
                               const RatePhaseConfig& config)
    : stimulus_count_(stimulus_count), config_(config) {
  for (std::size_t s = 0; s < stimulus_count; ++s) {
    std::vector<double> spikes, counts;
    for (const auto& trial : training) {
      if (trial.stimulus != s) continue;
      for (Tick t : trial.train.times()) spikes.push_back(static_cast<double>(t));
      counts.push_back(static_cast<double>(trial.train.size()));
    }
    if (counts.empty()) throw DataError("RatePhaseModel: no training trials for stimulus " + std::to_string(s));
    if (spikes.empty())
      phase_.emplace_back(std::nullopt);
    else
      phase_.emplace_back(GaussianKde(std::move(spikes), config.phase_bandwidth));
    rate_.emplace_back(std::move(counts), config.rate_bandwidth);
  }
}

double RatePhaseModel::log_phase_likelihood(std::size_t stimulus, const SpikeTrain& train) const {
  const auto& kde = phase_.at(stimulus);
  double total = 0.0;
  for (Tick t : train.times()) {
    total += kde ? kde->log_density(static_cast<double>(t)) : -std::log(config_.phase_span);
  }
  return total;
}

double RatePhaseModel::log_rate_likelihood(std::size_t stimulus, const SpikeTrain& train) const {
  return rate_.at(stimulus).log_density(static_cast<double>(train.size()));
}

Posteriors RatePhaseModel::posteriors(const SpikeTrain& train) const {
  std::vector<double> log_rate(stimulus_count_), log_phase(stimulus_count_);
  for (std::size_t s = 0; s < stimulus_count_; ++s) {
    log_rate[s] = log_rate_likelihood(s, train);
    log_phase[s] = log_phase_likelihood(s, train);
  }
  Posteriors p;
  p.rate = normalize_log(log_rate);
  p.phase = normalize_log(log_phase);
  p.mixed.resize(stimulus_count_);
  for (std::size_t s = 0; s < stimulus_count_; ++s)
    p.mixed[s] = config_.alpha * p.rate[s] + (1.0 - config_.alpha) * p.phase[s];
  return p;
}

std::size_t RatePhaseModel::predict(const SpikeTrain& train) const {
  const auto p = posteriors(train);
  return static_cast<std::size_t>(std::max_element(p.mixed.begin(), p.mixed.end()) - p.mixed.begin());
}

TrainTestSplit stratified_split(std::span<const ProcessedTrial> trials, std::size_t stimulus_count,
                                double train_fraction, std::uint64_t seed) {
  Rng rng(seed);
  TrainTestSplit split;
  for (std::size_t s = 0; s < stimulus_count; ++s) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < trials.size(); ++i)
      if (trials[i].stimulus == s) members.push_back(i);
    if (members.size() < 2) throw DataError("stratified_split: stimulus " + std::to_string(s) + " has fewer than 2 trials");
    rng.shuffle(members);
    auto test_count = static_cast<std::size_t>(std::llround((1.0 - train_fraction) * static_cast<double>(members.size())));
    test_count = std::clamp<std::size_t>(test_count, 1, members.size() - 1);
    split.test.insert(split.test.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(test_count));
    split.train.insert(split.train.end(), members.begin() + static_cast<std::ptrdiff_t>(test_count), members.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

ClassificationReport bayes_rate_phase(std::span<const ProcessedTrial> trials, const std::vector<std::string>& stimuli,
                                      const RatePhaseConfig& config) {
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) throw std::invalid_argument("bayes_rate_phase: alpha must be in [0, 1]");
  if (config.splits < 1) throw std::invalid_argument("bayes_rate_phase: need at least one split");
  for (std::size_t s = 0; s < stimuli.size(); ++s) {
    const auto count = std::count_if(trials.begin(), trials.end(), [s](const ProcessedTrial& t) { return t.stimulus == s; });
    if (count < 5) throw DataError("bayes_rate_phase: stimulus '" + stimuli[s] + "' has fewer than 5 usable trials");
  }
  for (const auto& t : trials)
    if (t.stimulus >= stimuli.size()) throw std::invalid_argument("bayes_rate_phase: stimulus index out of range");

  ClassificationReport report;
  for (std::size_t split_index = 0; split_index < config.splits; ++split_index) {
    const auto split = stratified_split(trials, stimuli.size(), config.train_fraction, config.seed + split_index);
    std::vector<ProcessedTrial> training;
    for (std::size_t i : split.train) training.push_back(trials[i]);
    const RatePhaseModel model(training, stimuli.size(), config);
    std::size_t correct = 0;
    for (std::size_t i : split.test) {
      const std::size_t predicted = model.predict(trials[i].train);
      correct += predicted == trials[i].stimulus ? 1 : 0;
      report.per_trial.push_back({trials[i].trial_id, stimuli[trials[i].stimulus], stimuli[predicted], split_index});
    }
    report.per_repetition_scores.push_back(static_cast<double>(correct) / static_cast<double>(split.test.size()));
  }
  finalize_report(report);
  return report;
}

NeuronTrials neuron_trials(const Dataset& dataset, std::size_t neuron_index,
                           const std::map<std::int64_t, LickTimes>* licks) {
  if (neuron_index >= dataset.neuron_count) throw std::out_of_range("neuron_trials: neuron index out of range");
  NeuronTrials out;
  for (const auto& trial : dataset.trials) {
    const auto& train = trial.ensemble[neuron_index];
    const std::size_t stimulus = dataset.stimulus_index(trial.stimulus);
    if (!licks) {
      out.trials.push_back({train, stimulus, trial.trial_id});
      continue;
    }
    const auto it = licks->find(trial.trial_id);
    std::optional<SpikeTrain> warped;
    if (it != licks->end()) warped = time_warp(train, it->second);
    if (warped)
      out.trials.push_back({std::move(*warped), stimulus, trial.trial_id});
    else
      out.excluded_trial_ids.push_back(trial.trial_id);
  }
  return out;
}

}  // namespace spiketopo
