#include <cmath>
#include <limits>
#include <numeric>

#include "doctest.h"
#include "spiketopo/persistence.hpp"
#include "spiketopo/rng.hpp"
#include "spiketopo/verify/oracles.hpp"

using namespace spiketopo;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Components of the graph with edges of length <= r, by BFS.
std::size_t components_at(const DistanceMatrix& m, double r) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && m(queue[h], w) <= r) {
          seen[w] = true;
          queue.push_back(w);
        }
  }
  return count;
}
}  // namespace

TEST_CASE("Rips filtration of an equilateral triangle") {
  const DistanceMatrix m(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  const Filtration f = build_rips(m, 2);
  REQUIRE(f.simplices.size() == 7);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f.simplices[i].value == 0.0);
  for (std::size_t i = 3; i < 6; ++i) {
    CHECK(f.simplices[i].dimension() == 1);
    CHECK(f.simplices[i].value == 1.0);
  }
  CHECK(f.simplices[6].dimension() == 2);
}

TEST_CASE("Rips filtration respects max_scale and counts edges") {
  const DistanceMatrix two(2, {0, 5, 5, 0});
  CHECK(build_rips(two, 1, 4.0).simplices.size() == 2);
  Rng rng(3);
  const auto m = verify::random_matrix(rng, 9, 0);
  const auto f = build_rips(m, 1);
  CHECK(f.simplices.size() == 9 + 36);
  CHECK_THROWS_AS(build_rips(m, 3), std::invalid_argument);
}

TEST_CASE("every face precedes its cofaces") {
  Rng rng(4);
  const auto m = verify::random_matrix(rng, 7, 3);
  const auto f = build_rips(m, 2);
  for (std::size_t i = 0; i < f.simplices.size(); ++i) {
    const auto& s = f.simplices[i];
    if (s.dimension() == 0) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      auto face = s.vertices;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      bool found = false;
      for (std::size_t j = 0; j < i; ++j) found = found || f.simplices[j].vertices == face;
      CHECK(found);
    }
  }
}

TEST_CASE("degree-0 persistence") {
  CHECK(ph_degree0(DistanceMatrix(1)) == PersistenceDiagram(0, {{0, kInf}}));
  const DistanceMatrix m(3, {0, 1, 2, 1, 0, 3, 2, 3, 0});
  const auto d = ph_degree0(m);
  CHECK(d.finite_deaths() == verify::kruskal_weights(m));
  CHECK(d.finite_deaths() == std::vector<double>{1, 2});
  CHECK(d.infinite_count() == 1);
}

TEST_CASE("alive degree-0 bars count thresholded components") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(2, 15));
    const auto m = verify::random_matrix(rng, n, i % 2 ? 5 : 0);
    const auto d = ph_degree0(m);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const double r = m(a, b);
        std::size_t alive = 0;
        for (const auto& p : d.points()) alive += p.death > r ? 1 : 0;
        CHECK(alive == components_at(m, r));
      }
  }
}

TEST_CASE("degree-1 persistence of a metric square") {
  const double s = std::sqrt(2.0);
  const DistanceMatrix m(4, {0, 1, s, 1, 1, 0, 1, s, s, 1, 0, 1, 1, s, 1, 0});
  const auto d = ph_degree1(m);
  REQUIRE(d.size() == 1);
  CHECK(d.points()[0].birth == 1.0);
  CHECK(d.points()[0].death == s);
}

TEST_CASE("three points carry no loop") {
  const DistanceMatrix m(3, {0, 1, 2, 1, 0, 3, 2, 3, 0});
  CHECK(ph_degree1(m).empty());
}

TEST_CASE("a truncated filtration keeps loops open") {
  const double s = std::sqrt(2.0);
  const DistanceMatrix m(4, {0, 1, s, 1, 1, 0, 1, s, s, 1, 0, 1, 1, s, 1, 0});
  const auto d = ph_degree1(m, 1.2);
  REQUIRE(d.size() == 1);
  CHECK(d.points()[0].is_infinite());
}

TEST_CASE("diagrams are invariant under relabeling and scale equivariant") {
  Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(3, 9));
    const auto m = verify::random_matrix(rng, n, i % 2 ? 4 : 0);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (int degree : {0, 1}) {
      CHECK(ph_diagram(m, degree) == ph_diagram(m.permuted(order), degree));
      const auto scaled = ph_diagram(m.scaled(4.0), degree);
      const auto base = ph_diagram(m, degree);
      REQUIRE(scaled.size() == base.size());
      for (std::size_t k = 0; k < base.size(); ++k) {
        CHECK(scaled.points()[k].birth == 4.0 * base.points()[k].birth);
        CHECK(scaled.points()[k].death == 4.0 * base.points()[k].death);
      }
    }
  }
}

TEST_CASE("degree-1 reduction matches the rank-based oracle on tied and untied matrices") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(4, 8));
    const auto m = verify::random_matrix(rng, n, i % 3 == 0 ? 0 : 3);
    const auto d = ph_degree1(m);
    const auto expected = verify::betti_degree1(m);
    CHECK(std::vector<DiagramPoint>(d.points().begin(), d.points().end()) == expected);
  }
}
