#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spiketopo {

/// Spike times are recording ticks on the discrete domain {0..t_max}.
using Tick = std::int64_t;

/// Thrown for malformed or inconsistent input data (as opposed to API misuse,
/// which raises std::invalid_argument).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeDomain {
  Tick t_max = 0;

  TimeDomain() = default;
  explicit TimeDomain(Tick t_max_ticks);

  [[nodiscard]] bool contains(Tick t) const noexcept { return t >= 0 && t <= t_max; }
  friend bool operator==(const TimeDomain&, const TimeDomain&) = default;
};

/// Quantizes a real-valued time onto the tick grid: floor(t / tick + 1/2).
Tick quantize(double time, double tick);

/// A finite, strictly increasing set of spike ticks inside a TimeDomain.
class SpikeTrain {
 public:
  SpikeTrain() = default;
  SpikeTrain(std::vector<Tick> times, TimeDomain domain);

  /// Sorts and deduplicates before validating the range.
  static SpikeTrain from_unsorted(std::vector<Tick> times, TimeDomain domain);

  [[nodiscard]] std::span<const Tick> times() const noexcept { return times_; }
  [[nodiscard]] std::size_t size() const noexcept { return times_.size(); }
  [[nodiscard]] bool empty() const noexcept { return times_.empty(); }
  [[nodiscard]] TimeDomain domain() const noexcept { return domain_; }
  [[nodiscard]] Tick operator[](std::size_t i) const { return times_[i]; }

  /// Same spikes on a different domain; throws if a spike falls outside it.
  [[nodiscard]] SpikeTrain with_domain(TimeDomain domain) const;

  friend bool operator==(const SpikeTrain& a, const SpikeTrain& b) {
    return a.domain_ == b.domain_ && a.times_ == b.times_;
  }
  /// Lexicographic by spike sequence; the empty train sorts first.
  friend std::strong_ordering operator<=>(const SpikeTrain& a, const SpikeTrain& b) {
    return a.times_ <=> b.times_;
  }

 private:
  std::vector<Tick> times_;
  TimeDomain domain_;
};

/// The k trains recorded simultaneously in one trial. Treated as a multiset
/// by every downstream computation.
class TrainEnsemble {
 public:
  TrainEnsemble() = default;
  explicit TrainEnsemble(std::vector<SpikeTrain> trains);

  [[nodiscard]] std::span<const SpikeTrain> trains() const noexcept { return trains_; }
  [[nodiscard]] std::size_t size() const noexcept { return trains_.size(); }
  [[nodiscard]] const SpikeTrain& operator[](std::size_t i) const { return trains_[i]; }
  [[nodiscard]] TimeDomain domain() const { return trains_.front().domain(); }
  /// True when two trains hold identical spike sequences.
  [[nodiscard]] bool has_duplicate_trains() const noexcept { return has_duplicates_; }

  friend bool operator==(const TrainEnsemble& a, const TrainEnsemble& b) {
    return a.trains_ == b.trains_;
  }

 private:
  std::vector<SpikeTrain> trains_;
  bool has_duplicates_ = false;
};

/// Sorts trains lexicographically. Idempotent and invariant under any
/// permutation of the input trains.
TrainEnsemble canonicalize(const TrainEnsemble& ensemble);

struct LabeledTrial {
  TrainEnsemble ensemble;
  std::string stimulus;
  std::int64_t trial_id = 0;
};

struct Dataset {
  TimeDomain domain;
  std::vector<std::string> stimuli;
  std::size_t neuron_count = 0;
  std::vector<LabeledTrial> trials;

  /// Position of `label` in `stimuli`; throws DataError when absent.
  [[nodiscard]] std::size_t stimulus_index(const std::string& label) const;
};

struct Violation {
  std::int64_t trial_id = -1;  // -1 for dataset-level problems
  std::string rule;            // "shape", "range", "domain", "label", "duplicate_id", ...
  std::string message;
};

/// Empty iff the dataset satisfies every structural invariant.
std::vector<Violation> validate_dataset(const Dataset& dataset);

/// Dense symmetric distance matrix with zero diagonal and finite,
/// nonnegative entries.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);
  /// Row-major n*n entries; validated.
  DistanceMatrix(std::size_t n, std::vector<double> entries);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value);
  [[nodiscard]] double max_entry() const noexcept;
  [[nodiscard]] std::span<const double> entries() const noexcept { return data_; }
  [[nodiscard]] DistanceMatrix scaled(double factor) const;
  /// Entry (a,b) of the result is entry (order[a], order[b]) of this matrix.
  [[nodiscard]] DistanceMatrix permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;  // +inf for essential classes

  [[nodiscard]] bool is_infinite() const noexcept;
  [[nodiscard]] double persistence() const noexcept { return death - birth; }
  friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Multiset of (birth, death) pairs in one homology degree, stored sorted.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  PersistenceDiagram(int degree, std::vector<DiagramPoint> points);

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] std::span<const DiagramPoint> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
  [[nodiscard]] std::size_t infinite_count() const noexcept;
  [[nodiscard]] std::vector<double> finite_deaths() const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  int degree_ = 0;
  std::vector<DiagramPoint> points_;
};

}  // namespace spiketopo
