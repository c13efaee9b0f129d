#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "spiketopo/diagram_distance.hpp"
#include "spiketopo/metrics.hpp"
#include "spiketopo/rng.hpp"
#include "spiketopo/verify/oracles.hpp"

using namespace spiketopo;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
PersistenceDiagram d0(std::vector<double> deaths) {
  std::vector<DiagramPoint> p;
  for (double x : deaths) p.push_back({0.0, x});
  return PersistenceDiagram(0, std::move(p));
}
SpikeTrain train(std::vector<Tick> t) { return SpikeTrain(std::move(t), TimeDomain(30)); }
}  // namespace

TEST_CASE("bottleneck small cases") {
  CHECK(bottleneck(d0({1, 2, kInf}), d0({1, 2, kInf})) == 0.0);
  CHECK(bottleneck(PersistenceDiagram(1, {{0, 2}}), PersistenceDiagram(1, {})) == 1.0);
  CHECK(bottleneck(PersistenceDiagram(1, {{0, 3}}), PersistenceDiagram(1, {{0, 5}})) == 2.0);
  CHECK(bottleneck(PersistenceDiagram(1, {}), PersistenceDiagram(1, {})) == 0.0);
  CHECK(std::isinf(bottleneck(d0({kInf}), d0({1}))));
  CHECK(bottleneck(PersistenceDiagram(1, {{1, kInf}}), PersistenceDiagram(1, {{4, kInf}})) == 3.0);
  CHECK_THROWS_AS(bottleneck(d0({1}), PersistenceDiagram(1, {})), std::invalid_argument);
}

TEST_CASE("degree-0 fast path") {
  CHECK(bottleneck_degree0_fast(d0({1, 2, kInf}), d0({1, 2, kInf})) == 0.0);
  CHECK(bottleneck_degree0_fast(d0({4, kInf}), d0({kInf})) == 2.0);
  CHECK_THROWS_AS(bottleneck_degree0_fast(d0({kInf, kInf}), d0({kInf})), std::invalid_argument);
  CHECK_THROWS_AS(bottleneck_degree0_fast(PersistenceDiagram(0, {{1, 2}}), d0({2})), std::invalid_argument);
}

TEST_CASE("bottleneck is a pseudometric on random diagrams") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto a = verify::random_diagram(rng, 1, static_cast<std::size_t>(rng.below(7)), i % 2 ? 4 : 0);
    const auto b = verify::random_diagram(rng, 1, static_cast<std::size_t>(rng.below(7)), i % 2 ? 4 : 0);
    const auto c = verify::random_diagram(rng, 1, static_cast<std::size_t>(rng.below(7)), i % 2 ? 4 : 0);
    CHECK(bottleneck(a, b) == bottleneck(b, a));
    CHECK(bottleneck(a, c) <= bottleneck(a, b) + bottleneck(b, c) + 1e-9);
    CHECK(bottleneck(a, a) == 0.0);
  }
}

TEST_CASE("bottleneck agrees with exhaustive matching") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto a = verify::random_diagram(rng, 1, static_cast<std::size_t>(rng.below(6)), i % 2 ? 3 : 0);
    const auto b = verify::random_diagram(rng, 1, static_cast<std::size_t>(rng.below(6)), i % 2 ? 3 : 0);
    CHECK(bottleneck(a, b) == doctest::Approx(verify::bottleneck_exhaustive(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("bottleneck matrix") {
  const std::vector<PersistenceDiagram> same(3, d0({1, 2, kInf}));
  CHECK(bottleneck_matrix(same).max_entry() == 0.0);
  const std::vector<PersistenceDiagram> two{d0({1, kInf}), d0({3, kInf})};
  const auto m = bottleneck_matrix(two);
  CHECK(m(0, 1) == bottleneck(two[0], two[1]));
  const std::vector<PersistenceDiagram> bad{d0({1, kInf}), d0({1, kInf}), d0({1})};
  CHECK_THROWS_AS(bottleneck_matrix(bad), DataError);
}

TEST_CASE("Wasserstein between diagram samples") {
  const std::vector<PersistenceDiagram> a{d0({1, kInf}), d0({4, kInf})};
  CHECK(wasserstein_empirical(a, a, 1.0) == 0.0);
  const std::vector<PersistenceDiagram> x{d0({1, kInf})}, y{d0({5, kInf})};
  CHECK(wasserstein_empirical(x, y, 2.0) == bottleneck(x[0], y[0]));
  CHECK_THROWS_AS(wasserstein_empirical(a, x, 1.0), std::invalid_argument);

  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    std::vector<PersistenceDiagram> sa, sb;
    for (int k = 0; k < 3; ++k) {
      sa.push_back(verify::random_degree0_diagram(rng, 3, 0));
      sb.push_back(verify::random_degree0_diagram(rng, 3, 0));
    }
    std::vector<double> costs;
    for (const auto& p : sa)
      for (const auto& q : sb) costs.push_back(bottleneck(p, q));
    for (double p : {1.0, 2.0, kInf})
      CHECK(wasserstein_empirical(sa, sb, p) == doctest::Approx(verify::wasserstein_permutations(3, costs, p)));
  }
}

TEST_CASE("Hungarian assignment is optimal on random costs") {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, 7));
    std::vector<double> costs(n * n);
    for (auto& c : costs) c = static_cast<double>(rng.below(10));
    const auto assignment = hungarian(n, costs);
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) total += costs[r * n + assignment[r]];
    CHECK(total / static_cast<double>(n) == doctest::Approx(verify::wasserstein_permutations(n, costs, 1.0)));
  }
}

TEST_CASE("Hausdorff distance between ensembles") {
  const TrainEnsemble a({train({1}), train({10, 11})});
  const TrainEnsemble b({train({10, 11}), train({1})});
  CHECK(hausdorff_ensembles(a, a, 1.0) == 0.0);
  CHECK(hausdorff_ensembles(a, b, 1.0) == 0.0);

  const TrainEnsemble c({train({2}), train({20})});
  double forward = 0.0, backward = 0.0;
  for (const auto& x : a.trains()) {
    double best = kInf;
    for (const auto& y : c.trains()) best = std::min(best, vp_distance(x, y, 0.7));
    forward = std::max(forward, best);
  }
  for (const auto& y : c.trains()) {
    double best = kInf;
    for (const auto& x : a.trains()) best = std::min(best, vp_distance(x, y, 0.7));
    backward = std::max(backward, best);
  }
  CHECK(hausdorff_ensembles(a, c, 0.7) == std::max(forward, backward));
}
