#include "spiketopo/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace spiketopo {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// False when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

bool filtration_less(const Simplex& a, const Simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

// Z/2 column addition on sorted index lists.
void add_column(std::vector<std::size_t>& target, const std::vector<std::size_t>& source) {
  std::vector<std::size_t> out;
  out.reserve(target.size() + source.size());
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(), std::back_inserter(out));
  target.swap(out);
}

}  // namespace

Filtration build_rips(const DistanceMatrix& matrix, int max_dim, double max_scale) {
  if (max_dim < 1 || max_dim > 2) {
    throw std::invalid_argument("build_rips: max_dim must be 1 or 2 (homology above degree 1 is unsupported)");
  }
  if (std::isnan(max_scale)) throw std::invalid_argument("build_rips: max_scale is NaN");
  const std::size_t n = matrix.size();
  Filtration f;
  f.max_dim = max_dim;
  f.max_scale = max_scale;
  for (std::size_t i = 0; i < n; ++i) f.simplices.push_back({{i}, 0.0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix(i, j) <= max_scale) f.simplices.push_back({{i, j}, matrix(i, j)});
  if (max_dim == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const double v = std::max({matrix(i, j), matrix(i, k), matrix(j, k)});
          if (v <= max_scale) f.simplices.push_back({{i, j, k}, v});
        }
  }
  std::sort(f.simplices.begin(), f.simplices.end(), filtration_less);
  return f;
}

PersistenceDiagram ph_degree0(const DistanceMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("ph_degree0: empty matrix");
  const Filtration f = build_rips(matrix, 1);
  UnionFind components(n);
  std::vector<DiagramPoint> bars;
  bars.reserve(n);
  for (const auto& s : f.simplices) {
    if (s.dimension() != 1) continue;
    if (components.unite(s.vertices[0], s.vertices[1])) bars.push_back({0.0, s.value});
  }
  // The complete graph is connected, so exactly one component survives.
  bars.push_back({0.0, std::numeric_limits<double>::infinity()});
  return PersistenceDiagram(0, std::move(bars));
}

PersistenceDiagram ph_degree1(const DistanceMatrix& matrix, double max_scale) {
  const std::size_t n = matrix.size();
  if (max_scale < 0.0) max_scale = matrix.max_entry();
  const Filtration f = build_rips(matrix, 2, max_scale);

  // Edge positions in filtration order; rows of the triangle boundary matrix.
  std::vector<std::size_t> edge_index(n * n, 0);
  std::vector<double> edge_value;
  std::vector<bool> edge_positive;
  UnionFind components(n);
  for (const auto& s : f.simplices) {
    if (s.dimension() != 1) continue;
    const std::size_t i = s.vertices[0], j = s.vertices[1];
    edge_index[i * n + j] = edge_index[j * n + i] = edge_value.size();
    edge_value.push_back(s.value);
    edge_positive.push_back(!components.unite(i, j));
  }

  std::vector<DiagramPoint> bars;
  std::vector<bool> edge_killed(edge_value.size(), false);
  std::unordered_map<std::size_t, std::vector<std::size_t>> column_with_low;
  for (const auto& s : f.simplices) {
    if (s.dimension() != 2) continue;
    const std::size_t a = s.vertices[0], b = s.vertices[1], c = s.vertices[2];
    std::vector<std::size_t> column{edge_index[a * n + b], edge_index[a * n + c], edge_index[b * n + c]};
    std::sort(column.begin(), column.end());
    while (!column.empty()) {
      auto it = column_with_low.find(column.back());
      if (it == column_with_low.end()) break;
      add_column(column, it->second);
    }
    if (column.empty()) continue;
    const std::size_t low = column.back();
    edge_killed[low] = true;
    if (s.value > edge_value[low]) bars.push_back({edge_value[low], s.value});
    column_with_low.emplace(low, std::move(column));
  }
  for (std::size_t e = 0; e < edge_value.size(); ++e) {
    if (edge_positive[e] && !edge_killed[e]) bars.push_back({edge_value[e], std::numeric_limits<double>::infinity()});
  }
  return PersistenceDiagram(1, std::move(bars));
}

PersistenceDiagram ph_diagram(const DistanceMatrix& matrix, int degree) {
  switch (degree) {
    case 0:
      return ph_degree0(matrix);
    case 1:
      return ph_degree1(matrix);
    default:
      throw std::invalid_argument("ph_diagram: degree must be 0 or 1");
  }
}

}  // namespace spiketopo
