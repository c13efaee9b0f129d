#include "spiketopo/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace spiketopo {

TimeDomain::TimeDomain(Tick t_max_ticks) : t_max(t_max_ticks) {
  if (t_max_ticks < 0) throw std::invalid_argument("TimeDomain: t_max must be nonnegative");
}

Tick quantize(double time, double tick) {
  if (!(tick > 0.0) || !std::isfinite(tick)) throw std::invalid_argument("quantize: tick must be positive");
  if (!std::isfinite(time)) throw DataError("quantize: non-finite spike time");
  return static_cast<Tick>(std::floor(time / tick + 0.5));
}

SpikeTrain::SpikeTrain(std::vector<Tick> times, TimeDomain domain)
    : times_(std::move(times)), domain_(domain) {
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!domain_.contains(times_[i])) {
      throw std::invalid_argument("SpikeTrain: spike time " + std::to_string(times_[i]) +
                                  " outside [0, " + std::to_string(domain_.t_max) + "]");
    }
    if (i > 0 && times_[i] <= times_[i - 1]) {
      throw std::invalid_argument("SpikeTrain: spike times must be strictly increasing");
    }
  }
}

SpikeTrain SpikeTrain::from_unsorted(std::vector<Tick> times, TimeDomain domain) {
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return SpikeTrain(std::move(times), domain);
}

SpikeTrain SpikeTrain::with_domain(TimeDomain domain) const { return SpikeTrain(times_, domain); }

TrainEnsemble::TrainEnsemble(std::vector<SpikeTrain> trains) : trains_(std::move(trains)) {
  if (trains_.empty()) throw std::invalid_argument("TrainEnsemble: needs at least one train");
  const TimeDomain domain = trains_.front().domain();
  for (const auto& train : trains_) {
    if (train.domain() != domain) throw std::invalid_argument("TrainEnsemble: trains must share a time domain");
  }
  std::vector<const SpikeTrain*> sorted;
  sorted.reserve(trains_.size());
  for (const auto& t : trains_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) {
      has_duplicates_ = true;
      break;
    }
  }
}

TrainEnsemble canonicalize(const TrainEnsemble& ensemble) {
  std::vector<SpikeTrain> trains(ensemble.trains().begin(), ensemble.trains().end());
  std::stable_sort(trains.begin(), trains.end());
  return TrainEnsemble(std::move(trains));
}

std::size_t Dataset::stimulus_index(const std::string& label) const {
  auto it = std::find(stimuli.begin(), stimuli.end(), label);
  if (it == stimuli.end()) throw DataError("unknown stimulus label '" + label + "'");
  return static_cast<std::size_t>(it - stimuli.begin());
}

std::vector<Violation> validate_dataset(const Dataset& dataset) {
  std::vector<Violation> out;
  std::set<std::string> labels;
  for (const auto& s : dataset.stimuli) {
    if (!labels.insert(s).second) out.push_back({-1, "label", "stimulus '" + s + "' declared twice"});
  }
  if (dataset.neuron_count == 0) out.push_back({-1, "shape", "neuron_count must be positive"});

  std::set<std::int64_t> ids;
  for (const auto& trial : dataset.trials) {
    const auto id = trial.trial_id;
    if (!ids.insert(id).second) out.push_back({id, "duplicate_id", "trial_id appears more than once"});
    if (!labels.contains(trial.stimulus)) {
      out.push_back({id, "label", "stimulus '" + trial.stimulus + "' is not declared"});
    }
    if (trial.ensemble.size() != dataset.neuron_count) {
      out.push_back({id, "shape", "expected " + std::to_string(dataset.neuron_count) + " trains, found " +
                                      std::to_string(trial.ensemble.size())});
    }
    bool range_ok = true;
    for (const auto& train : trial.ensemble.trains()) {
      for (Tick t : train.times()) {
        if (!dataset.domain.contains(t)) {
          out.push_back({id, "range", "spike time " + std::to_string(t) + " outside [0, " +
                                          std::to_string(dataset.domain.t_max) + "]"});
          range_ok = false;
          break;
        }
      }
    }
    if (range_ok && trial.ensemble.size() > 0 && trial.ensemble.domain() != dataset.domain) {
      out.push_back({id, "domain", "trains use t_max " + std::to_string(trial.ensemble.domain().t_max) +
                                       " but the dataset declares " + std::to_string(dataset.domain.t_max)});
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) throw std::invalid_argument("DistanceMatrix: expected n*n entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (data_[i * n + i] != 0.0) throw std::invalid_argument("DistanceMatrix: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = data_[i * n + j];
      if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("DistanceMatrix: entries must be finite and >= 0");
      if (v != data_[j * n + i]) throw std::invalid_argument("DistanceMatrix: matrix is not symmetric");
    }
  }
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value) || value < 0.0) throw std::invalid_argument("DistanceMatrix: entries must be finite and >= 0");
  if (i == j && value != 0.0) throw std::invalid_argument("DistanceMatrix: nonzero diagonal");
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

double DistanceMatrix::max_entry() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, v);
  return m;
}

DistanceMatrix DistanceMatrix::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("DistanceMatrix::scaled: factor must be positive");
  DistanceMatrix out = *this;
  for (double& v : out.data_) v *= factor;
  return out;
}

DistanceMatrix DistanceMatrix::permuted(std::span<const std::size_t> order) const {
  if (order.size() != n_) throw std::invalid_argument("DistanceMatrix::permuted: size mismatch");
  DistanceMatrix out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) out.data_[a * n_ + b] = (*this)(order[a], order[b]);
  return out;
}

bool DiagramPoint::is_infinite() const noexcept { return std::isinf(death); }

PersistenceDiagram::PersistenceDiagram(int degree, std::vector<DiagramPoint> points)
    : degree_(degree), points_(std::move(points)) {
  if (degree < 0) throw std::invalid_argument("PersistenceDiagram: negative degree");
  for (const auto& p : points_) {
    if (!std::isfinite(p.birth) || std::isnan(p.death) || p.death < p.birth || p.death == -std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("PersistenceDiagram: need finite birth <= death");
    }
  }
  std::sort(points_.begin(), points_.end());
}

std::size_t PersistenceDiagram::infinite_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(points_.begin(), points_.end(), [](auto& p) { return p.is_infinite(); }));
}

std::vector<double> PersistenceDiagram::finite_deaths() const {
  std::vector<double> out;
  for (const auto& p : points_)
    if (!p.is_infinite()) out.push_back(p.death);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spiketopo
