#pragma once

#include <cstddef>
#include <vector>

#include "spiketopo/core.hpp"

namespace spiketopo {

struct SymmetricEigen {
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // column c (row-major n*n) belongs to values[c]
};

/// Cyclic Jacobi rotations until the off-diagonal mass drops below tolerance
/// (relative to the Frobenius norm). Input is row-major n*n and symmetric.
SymmetricEigen jacobi_eigen(std::size_t n, std::vector<double> a, double tolerance = 1e-12);

struct MdsResult {
  std::vector<std::vector<double>> coords;  // one dim-vector per input point
  std::vector<double> eigenvalues;          // all of them, descending
  double negative_mass = 0.0;               // sum of |lambda| over negative eigenvalues
};

/// Classical (Torgerson) scaling: B = -1/2 J D^2 J, top-dim eigenpairs,
/// coordinates scaled by sqrt(max(lambda, 0)). Each axis is flipped so that
/// its first nonzero coordinate is positive.
MdsResult classical_mds(const DistanceMatrix& matrix, std::size_t dim);

}  // namespace spiketopo
