#include "spiketopo/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spiketopo/diagram_distance.hpp"
#include "spiketopo/metrics.hpp"
#include "spiketopo/parallel.hpp"
#include "spiketopo/persistence.hpp"
#include "spiketopo/rng.hpp"

namespace spiketopo {
namespace {

std::vector<std::size_t> sample_trials(const Dataset& dataset, std::size_t per_stimulus, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> chosen;
  for (const auto& stimulus : dataset.stimuli) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < dataset.trials.size(); ++i)
      if (dataset.trials[i].stimulus == stimulus) pool.push_back(i);
    if (pool.size() < per_stimulus) {
      throw DataError("stimulus '" + stimulus + "' has " + std::to_string(pool.size()) + " trials, " +
                      std::to_string(per_stimulus) + " required");
    }
    // Draw from an id-sorted pool so the sample does not depend on file order.
    std::sort(pool.begin(), pool.end(),
              [&](std::size_t a, std::size_t b) { return dataset.trials[a].trial_id < dataset.trials[b].trial_id; });
    for (std::size_t i = 0; i < per_stimulus; ++i) {
      const std::size_t pick = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[pick]);
    }
    pool.resize(per_stimulus);
    std::sort(pool.begin(), pool.end(),
              [&](std::size_t a, std::size_t b) { return dataset.trials[a].trial_id < dataset.trials[b].trial_id; });
    chosen.insert(chosen.end(), pool.begin(), pool.end());
  }
  return chosen;
}

PipelineRun run_windowed(const Dataset& dataset, const PipelineConfig& config, std::uint64_t seed,
                         std::size_t repetition) {
  const auto chosen = sample_trials(dataset, config.trials_per_stimulus, seed);
  std::vector<PersistenceDiagram> diagrams(chosen.size());
  parallel_for(chosen.size(), [&](std::size_t i) {
    diagrams[i] = ensemble_diagram(dataset.trials[chosen[i]].ensemble, config.q, config.degree);
  });

  PipelineRun run;
  run.bdm = bottleneck_matrix(diagrams);
  for (std::size_t idx : chosen) {
    run.trial_ids.push_back(dataset.trials[idx].trial_id);
    run.labels.push_back(dataset.trials[idx].stimulus);
  }
  run.report = loocv_1nn(run.bdm, run.labels, run.trial_ids);
  for (auto& row : run.report.per_trial) row.repetition = repetition;
  return run;
}

Dataset apply_window(const Dataset& dataset, const PipelineConfig& config) {
  if (!config.window) return dataset;
  return window_trials(dataset, config.window->start, config.window->end);
}

}  // namespace

void PipelineConfig::validate() const {
  if (!(q >= 0.0) || !std::isfinite(q)) throw std::invalid_argument("PipelineConfig: q must be finite and >= 0");
  if (degree != 0 && degree != 1) throw std::invalid_argument("PipelineConfig: degree must be 0 or 1");
  if (trials_per_stimulus < 2) throw std::invalid_argument("PipelineConfig: trials_per_stimulus must be >= 2");
  if (repetitions < 1) throw std::invalid_argument("PipelineConfig: repetitions must be >= 1");
  if (window && window->start >= window->end) throw std::invalid_argument("PipelineConfig: window start must precede end");
}

std::pair<double, double> mean_and_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

void finalize_report(ClassificationReport& report) {
  const auto correct = std::count_if(report.per_trial.begin(), report.per_trial.end(),
                                     [](const TrialPrediction& t) { return t.truth == t.predicted; });
  report.score = report.per_trial.empty() ? 0.0
                                          : static_cast<double>(correct) / static_cast<double>(report.per_trial.size());
  std::tie(report.mean, report.std) = mean_and_std(report.per_repetition_scores);
}

ClassificationReport loocv_1nn(const DistanceMatrix& matrix, const std::vector<std::string>& labels) {
  std::vector<std::int64_t> ids(labels.size());
  std::iota(ids.begin(), ids.end(), 0);
  return loocv_1nn(matrix, labels, ids);
}

ClassificationReport loocv_1nn(const DistanceMatrix& matrix, const std::vector<std::string>& labels,
                               const std::vector<std::int64_t>& trial_ids) {
  const std::size_t n = matrix.size();
  if (labels.size() != n || trial_ids.size() != n) throw std::invalid_argument("loocv_1nn: label count must match matrix size");
  if (n < 2) throw std::invalid_argument("loocv_1nn: need at least two samples");
  ClassificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nearest = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (matrix(i, j) < best) {
        best = matrix(i, j);
        nearest = j;
      }
    }
    report.per_trial.push_back({trial_ids[i], labels[i], labels[nearest], 0});
  }
  finalize_report(report);
  report.per_repetition_scores = {report.score};
  std::tie(report.mean, report.std) = mean_and_std(report.per_repetition_scores);
  return report;
}

Dataset window_trials(const Dataset& dataset, Tick start, Tick end) {
  if (start >= end) throw std::invalid_argument("window_trials: empty window");
  Dataset out;
  out.domain = TimeDomain(end - start - 1);
  out.stimuli = dataset.stimuli;
  out.neuron_count = dataset.neuron_count;
  out.trials.reserve(dataset.trials.size());
  for (const auto& trial : dataset.trials) {
    std::vector<SpikeTrain> trains;
    trains.reserve(trial.ensemble.size());
    for (const auto& train : trial.ensemble.trains()) {
      std::vector<Tick> kept;
      for (Tick t : train.times())
        if (t >= start && t < end) kept.push_back(t - start);
      trains.emplace_back(std::move(kept), out.domain);
    }
    out.trials.push_back({TrainEnsemble(std::move(trains)), trial.stimulus, trial.trial_id});
  }
  return out;
}

PersistenceDiagram ensemble_diagram(const TrainEnsemble& ensemble, double q, int degree) {
  return ph_diagram(vp_matrix(canonicalize(ensemble), q), degree);
}

PipelineRun run_pipeline_once(const Dataset& dataset, const PipelineConfig& config) {
  config.validate();
  return run_windowed(apply_window(dataset, config), config, config.rng_seed, 0);
}

ClassificationReport run_repetitions(const Dataset& dataset, const PipelineConfig& config) {
  config.validate();
  const Dataset windowed = apply_window(dataset, config);
  ClassificationReport total;
  for (std::size_t r = 0; r < config.repetitions; ++r) {
    auto run = run_windowed(windowed, config, config.rng_seed + r, r);
    total.per_repetition_scores.push_back(run.report.score);
    total.per_trial.insert(total.per_trial.end(), run.report.per_trial.begin(), run.report.per_trial.end());
  }
  finalize_report(total);
  return total;
}

}  // namespace spiketopo
