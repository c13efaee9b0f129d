#pragma once

#include <span>
#include <vector>

#include "spiketopo/core.hpp"

namespace spiketopo {

/// Bottleneck distance between two same-degree diagrams. Infinite bars only
/// match infinite bars; the result is +inf iff their counts differ. Finite
/// points are handled by binary search over the candidate values (pairwise
/// l-inf costs and half-persistences) with a bipartite matching test at each.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Degree-0 shortcut for diagrams whose births are all zero. Requires equal
/// infinite-bar counts. Matches the top r deaths of each side in sorted
/// order and sends the rest to the diagonal, minimizing over r.
double bottleneck_degree0_fast(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Pairwise bottleneck distances. Uses the degree-0 shortcut whenever it
/// applies. Throws DataError naming the first pair at infinite distance.
DistanceMatrix bottleneck_matrix(std::span<const PersistenceDiagram> diagrams);

/// Minimum over perfect matchings of ((1/n) sum cost^p)^(1/p), i.e. the
/// Wasserstein distance between two uniform n-point measures, or of the max
/// cost when p is infinite. Square cost matrix, row-major.
double assignment_wasserstein(std::size_t n, std::span<const double> costs, double p);

/// Wasserstein distance between uniform empirical measures of equal size on
/// diagrams, with bottleneck as ground metric. At most 12 diagrams per side.
double wasserstein_empirical(std::span<const PersistenceDiagram> set_a, std::span<const PersistenceDiagram> set_b,
                             double p);

/// Hausdorff distance between the trains of two ensembles under VP_q,
/// independent of train order.
double hausdorff_ensembles(const TrainEnsemble& a, const TrainEnsemble& b, double q);

/// Optimal assignment (Hungarian method). Returns the column assigned to each row.
std::vector<std::size_t> hungarian(std::size_t n, std::span<const double> costs);

/// Whether the bipartite graph (adjacency by row) has a perfect matching.
bool has_perfect_matching(std::size_t n, const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace spiketopo
