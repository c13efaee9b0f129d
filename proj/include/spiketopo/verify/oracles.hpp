#pragma once

// Slow reference implementations used only to cross-check the library. They
// share no code with the routines they check beyond the core value types.

#include <cstdint>
#include <span>
#include <vector>

#include "spiketopo/core.hpp"
#include "spiketopo/rng.hpp"
#include "spiketopo/single_neuron.hpp"

namespace spiketopo::verify {

/// Up to max_spikes distinct ticks drawn uniformly from {0..t_max}.
SpikeTrain random_train(Rng& rng, Tick t_max, std::size_t max_spikes);
TrainEnsemble random_ensemble(Rng& rng, std::size_t k, Tick t_max, std::size_t max_spikes);
/// Symmetric matrix with entries drawn from {1..levels} (ties likely when
/// levels is small) or uniform reals in (0, 1] when levels is 0.
DistanceMatrix random_matrix(Rng& rng, std::size_t n, std::size_t levels);
/// Degree-0 style diagram: `finite` bars born at 0 plus one infinite bar.
PersistenceDiagram random_degree0_diagram(Rng& rng, std::size_t finite, std::size_t levels);
/// Arbitrary finite diagram with birth <= death.
PersistenceDiagram random_diagram(Rng& rng, int degree, std::size_t points, std::size_t levels);

/// Minimum spanning forest weights (Kruskal with naive relabelling), sorted.
std::vector<double> kruskal_weights(const DistanceMatrix& matrix);

/// Degree-1 Rips persistence of the full complex from persistent Betti
/// numbers, each computed by GF(2) rank of cycle and boundary spaces.
/// At most 11 points (edges fit in a 64-bit mask).
std::vector<DiagramPoint> betti_degree1(const DistanceMatrix& matrix);

/// Bottleneck distance by enumerating every partial matching; tiny inputs only.
double bottleneck_exhaustive(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Wasserstein between uniform n-point measures by enumerating permutations.
double wasserstein_permutations(std::size_t n, std::span<const double> costs, double p);

/// Stand-alone single-term classifiers: Gaussian mixtures evaluated directly
/// (no log-space tricks) and argmax of the raw likelihood, ties to the lowest
/// stimulus index.
std::size_t rate_only_predict(std::span<const ProcessedTrial> training, std::size_t stimulus_count,
                              double bandwidth, const SpikeTrain& train);
std::size_t phase_only_predict(std::span<const ProcessedTrial> training, std::size_t stimulus_count,
                               double bandwidth, double uniform_span, const SpikeTrain& train);

}  // namespace spiketopo::verify
