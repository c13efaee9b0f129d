#include <cmath>

#include "doctest.h"
#include "spiketopo/metrics.hpp"
#include "spiketopo/rng.hpp"
#include "spiketopo/verify/oracles.hpp"

using namespace spiketopo;

namespace {
SpikeTrain train(std::vector<Tick> t, Tick t_max = 20) { return SpikeTrain(std::move(t), TimeDomain(t_max)); }
}  // namespace

TEST_CASE("vp_cost evaluates a given partial bijection") {
  CHECK(vp_cost(train({1}), train({3}), {{{0, 0}}}, 0.5) == 1.0);
  CHECK(vp_cost(train({1}), train({3}), {}, 0.5) == 2.0);
  CHECK(vp_cost(train({}), train({}), {}, 3.0) == 0.0);
  CHECK_THROWS(vp_cost(train({1}), train({3}), {{{0, 1}}}, 0.5));
  CHECK_THROWS(vp_cost(train({1, 2}), train({3}), {{{0, 0}, {1, 0}}}, 0.5));
}

TEST_CASE("vp_distance small cases") {
  CHECK(vp_distance(train({1, 2, 3}), train({5}), 0.0) == 2.0);
  CHECK(vp_distance(train({1, 2, 3}), train({2, 3, 4}), 3.0) == 2.0);
  CHECK(vp_distance(train({1}), train({3}), 0.5) == vp_brute_force(train({1}), train({3}), 0.5));
  CHECK(vp_distance(train({1}), train({3}), 0.5) == 1.0);
  CHECK(vp_distance_dp(train({0, 10}), train({0, 10}), 1.7) == 0.0);
  CHECK(vp_distance_dp(train({0}), train({}), 1.7) == 1.0);
  CHECK(vp_brute_force(train({}), train({4}), 7.0) == 1.0);
  CHECK(vp_brute_force(train({2}), train({2}), 0.0) == 0.0);
  CHECK_THROWS_AS(vp_distance(train({1}), train({2}), -0.1), std::invalid_argument);
}

TEST_CASE("tightness raster distance agrees with the exhaustive minimum") {
  const SpikeTrain a = train({1, 2, 3, 4}, 8), b = train({5, 6, 7, 8}, 8);
  const double oracle = vp_brute_force(a, b, 0.5);
  CHECK(vp_distance(a, b, 0.5) == oracle);
  // Matching 4-5 and 3-6 (shift cost 0.5 + 1.5) and dropping the other four spikes.
  CHECK(oracle == 6.0);
}

TEST_CASE("q = 2 uses the dynamic program and q > 2 the symmetric difference") {
  const SpikeTrain a = train({1, 5}), b = train({2, 5});
  CHECK(vp_distance(a, b, 2.0) == 2.0);
  CHECK(vp_distance(a, b, 1.0) == 1.0);
  CHECK(vp_distance(a, b, 2.0001) == 2.0);
}

TEST_CASE("VP distance is nondecreasing in q") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const SpikeTrain a = verify::random_train(rng, 30, 8), b = verify::random_train(rng, 30, 8);
    double previous = -1.0;
    for (double q = 0.0; q <= 3.0; q += 0.125) {
      const double d = vp_distance(a, b, q);
      CHECK(d >= previous);
      previous = d;
    }
  }
}

TEST_CASE("brute force refuses large trains") {
  std::vector<Tick> seven{0, 1, 2, 3, 4, 5, 6};
  CHECK_THROWS(vp_brute_force(train(seven), train({}), 1.0));
}

TEST_CASE("vp_matrix is symmetric with zero diagonal") {
  CHECK(vp_matrix(TrainEnsemble({train({1})}), 1.0).size() == 1);
  const auto same = vp_matrix(TrainEnsemble({train({1, 4}), train({1, 4})}), 1.0);
  CHECK(same(0, 1) == 0.0);
  const auto m = vp_matrix(TrainEnsemble({train({1}), train({3}), train({})}), 0.5);
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 0) == 1.0);
  CHECK(m(0, 2) == 1.0);
  CHECK(m(2, 2) == 0.0);
}
