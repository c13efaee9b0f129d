#pragma once

#include <functional>
#include <vector>

#include "spiketopo/core.hpp"

namespace spiketopo {

/// Index pairs (into S, into S') describing a bijection between a subset of
/// S and a subset of S'. No index may repeat on either side.
struct PartialBijection {
  struct Pair {
    std::size_t from = 0;
    std::size_t to = 0;
  };
  std::vector<Pair> pairs;
};

/// Unmatched spikes on both sides plus q times the total shift of matched
/// spikes. The sum is rounded once, so bijections with equal exact cost
/// always produce the same double.
double vp_cost(const SpikeTrain& a, const SpikeTrain& b, const PartialBijection& phi, double q);

/// Victor-Purpura distance. q == 0 and q > 2 use their closed forms, every
/// other q runs the dynamic program.
double vp_distance(const SpikeTrain& a, const SpikeTrain& b, double q);

/// Edit-distance recursion over sorted trains. Returns the correctly rounded
/// optimum (bit-identical to vp_brute_force on the same inputs).
double vp_distance_dp(const SpikeTrain& a, const SpikeTrain& b, double q);

inline constexpr std::size_t kBruteForceMaxSpikes = 6;

/// Literal minimum over every partial bijection. Limited to trains with at
/// most kBruteForceMaxSpikes spikes.
double vp_brute_force(const SpikeTrain& a, const SpikeTrain& b, double q);

/// Pairwise train distance. VP is the only metric shipped; other spike
/// metrics can be passed to pairwise_matrix directly.
using TrainMetric = std::function<double(const SpikeTrain&, const SpikeTrain&)>;

DistanceMatrix pairwise_matrix(const TrainEnsemble& ensemble, const TrainMetric& metric);

DistanceMatrix vp_matrix(const TrainEnsemble& ensemble, double q);

}  // namespace spiketopo
