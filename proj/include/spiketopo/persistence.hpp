#pragma once

#include <limits>
#include <vector>

#include "spiketopo/core.hpp"

namespace spiketopo {

struct Simplex {
  std::vector<std::size_t> vertices;  // ascending
  double value = 0.0;                 // largest pairwise distance among the vertices

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

/// Vietoris-Rips filtration truncated at max_dim and max_scale. Simplices are
/// ordered by (value, dimension, lexicographic vertex list), so every face
/// precedes its cofaces.
struct Filtration {
  std::vector<Simplex> simplices;
  int max_dim = 1;
  double max_scale = std::numeric_limits<double>::infinity();
};

/// Supports max_dim 1 or 2 (homology up to degree 1).
Filtration build_rips(const DistanceMatrix& matrix, int max_dim,
                      double max_scale = std::numeric_limits<double>::infinity());

/// Connected-component persistence: n bars born at 0, the n-1 finite deaths
/// are the minimum spanning tree weights and one bar never dies.
PersistenceDiagram ph_degree0(const DistanceMatrix& matrix);

/// Loop persistence over Z/2 by column reduction of the triangle boundaries.
/// A negative max_scale means "largest matrix entry", i.e. the full complex,
/// in which every loop dies. Zero-length bars are dropped.
PersistenceDiagram ph_degree1(const DistanceMatrix& matrix, double max_scale = -1.0);

/// Dispatches on degree (0 or 1) with the defaults above.
PersistenceDiagram ph_diagram(const DistanceMatrix& matrix, int degree);

}  // namespace spiketopo
