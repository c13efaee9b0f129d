#include "spiketopo/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spiketopo {
namespace {

// Coordinates below this are treated as zero when fixing axis signs, so that
// rounding noise on a point at the origin cannot flip an axis.
constexpr double kSignEpsilon = 1e-9;

}  // namespace

SymmetricEigen jacobi_eigen(std::size_t n, std::vector<double> a, double tolerance) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi_eigen: expected n*n entries");
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double frobenius = 0.0;
  for (double x : a) frobenius += x * x;
  frobenius = std::sqrt(frobenius);

  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && frobenius > 0.0 && off_diagonal() > tolerance * frobenius; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });
  SymmetricEigen out;
  out.vectors.assign(n * n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    out.values.push_back(a[order[c] * n + order[c]]);
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + c] = v[r * n + order[c]];
  }
  return out;
}

MdsResult classical_mds(const DistanceMatrix& matrix, std::size_t dim) {
  const std::size_t n = matrix.size();
  if (dim < 1 || dim > 3) throw std::invalid_argument("classical_mds: dim must be 1, 2 or 3");
  if (n < dim + 1) throw std::invalid_argument("classical_mds: need at least dim + 1 points");

  std::vector<double> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = matrix(i, j) * matrix(i, j);
  std::vector<double> row_mean(n, 0.0);
  double total_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += b[i * n + j];
    total_mean += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  total_mean /= static_cast<double>(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = -0.5 * (b[i * n + j] - row_mean[i] - row_mean[j] + total_mean);

  const SymmetricEigen eig = jacobi_eigen(n, std::move(b));
  MdsResult result;
  result.eigenvalues = eig.values;
  for (double lambda : eig.values)
    if (lambda < 0.0) result.negative_mass += -lambda;

  result.coords.assign(n, std::vector<double>(dim, 0.0));
  for (std::size_t axis = 0; axis < dim; ++axis) {
    const double scale = std::sqrt(std::max(eig.values[axis], 0.0));
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      result.coords[i][axis] = eig.vectors[i * n + axis] * scale;
      mean += result.coords[i][axis];
    }
    mean /= static_cast<double>(n);
    for (auto& point : result.coords) point[axis] -= mean;
    for (const auto& point : result.coords) {
      if (std::abs(point[axis]) <= kSignEpsilon) continue;
      if (point[axis] < 0.0)
        for (auto& flip : result.coords) flip[axis] = -flip[axis];
      break;
    }
  }
  return result;
}

}  // namespace spiketopo
