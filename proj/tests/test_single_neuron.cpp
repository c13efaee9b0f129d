#include <cmath>
#include <numbers>

#include "doctest.h"
#include "spiketopo/single_neuron.hpp"

using namespace spiketopo;

namespace {
std::vector<Tick> ticks(const SpikeTrain& t) { return {t.times().begin(), t.times().end()}; }
}  // namespace

TEST_CASE("time warp maps lick intervals to 200-tick windows") {
  const TimeDomain d(1000);
  const LickTimes licks{{0, 100, 200, 300, 400, 500}, 0};
  CHECK(ticks(*time_warp(SpikeTrain({50}, d), licks)) == std::vector<Tick>{100});
  // A spike on a lick starts the later window.
  CHECK(ticks(*time_warp(SpikeTrain({100}, d), licks)) == std::vector<Tick>{200});
  // The closing lick and anything after it are dropped.
  CHECK(time_warp(SpikeTrain({500, 700}, d), licks)->empty());
  CHECK(time_warp(SpikeTrain({1}, d), licks)->domain().t_max == 999);
}

TEST_CASE("time warp merges collisions and honours the onset index") {
  const TimeDomain d(2000);
  const LickTimes fast{{0, 1000, 1001, 1002, 1003, 1004, 1005}, 1};
  // Interval [1000, 1001) holds one tick; a spike before onset is dropped.
  CHECK(ticks(*time_warp(SpikeTrain({10, 1000, 1001}, d), fast)) == std::vector<Tick>{0, 200});
  const LickTimes stretched{{0, 2000, 2001, 2002, 2003, 2004}, 0};
  // Both spikes round onto tick 200 and merge.
  CHECK(ticks(*time_warp(SpikeTrain({1998, 1999}, d), stretched)) == std::vector<Tick>{200});
}

TEST_CASE("unusable licks exclude the trial") {
  const TimeDomain d(100);
  CHECK_FALSE(time_warp(SpikeTrain({1}, d), {{0, 10, 20, 30, 40}, 0}).has_value());
  CHECK_FALSE(time_warp(SpikeTrain({1}, d), {{0, 10, 20, 30, 40, 50}, 1}).has_value());
  CHECK_FALSE(time_warp(SpikeTrain({1}, d), {{0, 10, 10, 30, 40, 50}, 0}).has_value());
}

TEST_CASE("Gaussian KDE evaluates the mixture") {
  const GaussianKde k({0.0, 4.0}, 2.0);
  const double norm = 1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi));
  const double expected = 0.5 * norm * (std::exp(-0.5 * 0.25) + std::exp(-0.5 * 2.25));
  CHECK(k.density(1.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(k.log_density(1e4) < -1e6);
  CHECK_THROWS_AS(GaussianKde({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GaussianKde({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("rate-phase posteriors match closed-form arithmetic") {
  const TimeDomain d(999);
  // Stimulus 0: one training trial with spikes {10, 30}; stimulus 1: one with {50}.
  const std::vector<ProcessedTrial> training{{SpikeTrain({10, 30}, d), 0, 0}, {SpikeTrain({50}, d), 1, 1}};
  RatePhaseConfig cfg;
  const RatePhaseModel model(training, 2, cfg);
  const SpikeTrain test({40}, d);
  auto gauss = [](double x, double mu, double h) {
    return std::exp(-0.5 * (x - mu) * (x - mu) / (h * h)) / (h * std::sqrt(2.0 * std::numbers::pi));
  };
  const double phase0 = 0.5 * (gauss(40, 10, 5) + gauss(40, 30, 5)), phase1 = gauss(40, 50, 5);
  const double rate0 = gauss(1, 2, 2), rate1 = gauss(1, 1, 2);
  const auto post = model.posteriors(test);
  CHECK(post.phase[0] == doctest::Approx(phase0 / (phase0 + phase1)).epsilon(1e-12));
  CHECK(post.rate[1] == doctest::Approx(rate1 / (rate0 + rate1)).epsilon(1e-12));
  const double rp0 = 0.875 * rate0 / (rate0 + rate1) + 0.125 * phase0 / (phase0 + phase1);
  CHECK(post.mixed[0] == doctest::Approx(rp0).epsilon(1e-12));
  CHECK(post.mixed[0] + post.mixed[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.predict(test) == (rp0 > 0.5 ? 0u : 1u));
}

TEST_CASE("empty test trains fall back to the rate term; silent stimuli use the uniform phase") {
  const TimeDomain d(999);
  const std::vector<ProcessedTrial> training{{SpikeTrain({}, d), 0, 0}, {SpikeTrain({100, 200, 300}, d), 1, 1}};
  RatePhaseConfig cfg;
  cfg.alpha = 0.0;
  const RatePhaseModel model(training, 2, cfg);
  CHECK(model.log_phase_likelihood(0, SpikeTrain({}, d)) == 0.0);
  CHECK(model.log_phase_likelihood(0, SpikeTrain({5, 6}, d)) == doctest::Approx(2.0 * -std::log(1000.0)));
  const auto post = model.posteriors(SpikeTrain({}, d));
  CHECK(post.phase[0] == 0.5);
  cfg.alpha = 1.0;
  CHECK(RatePhaseModel(training, 2, cfg).predict(SpikeTrain({}, d)) == 0);
}

TEST_CASE("Bayes classifier on separable and identical data") {
  const TimeDomain d(999);
  std::vector<ProcessedTrial> sep, same;
  for (std::int64_t i = 0; i < 20; ++i) {
    const std::size_t s = static_cast<std::size_t>(i % 2);
    std::vector<Tick> t;
    for (Tick k = 0; k < (s == 0 ? 2 : 20); ++k) t.push_back(10 * k + (i % 5));
    sep.push_back({SpikeTrain(t, d), s, i});
    same.push_back({SpikeTrain({100, 200}, d), s, i});
  }
  const std::vector<std::string> labels{"a", "b"};
  CHECK(bayes_rate_phase(sep, labels, {}).mean == 1.0);
  const auto chance = bayes_rate_phase(same, labels, {});
  CHECK(chance.mean == 0.5);
  CHECK(chance.per_repetition_scores.size() == 15);
  RatePhaseConfig bad;
  bad.alpha = 1.5;
  CHECK_THROWS_AS(bayes_rate_phase(sep, labels, bad), std::invalid_argument);
  std::vector<ProcessedTrial> few(sep.begin(), sep.begin() + 6);
  CHECK_THROWS_AS(bayes_rate_phase(few, labels, {}), DataError);
}

TEST_CASE("stratified split sizes") {
  const TimeDomain d(9);
  std::vector<ProcessedTrial> t;
  for (std::int64_t i = 0; i < 15; ++i) t.push_back({SpikeTrain({}, d), static_cast<std::size_t>(i < 10 ? 0 : 1), i});
  const auto s = stratified_split(t, 2, 0.8, 4);
  CHECK(s.test.size() == 3);
  CHECK(s.train.size() == 12);
}

TEST_CASE("per-neuron VP 1-NN on perfectly separated trains") {
  Dataset ds;
  ds.domain = TimeDomain(99);
  ds.stimuli = {"a", "b"};
  ds.neuron_count = 2;
  for (std::int64_t i = 0; i < 8; ++i) {
    const bool b = i % 2 == 1;
    ds.trials.push_back({TrainEnsemble({SpikeTrain(b ? std::vector<Tick>{80, 90} : std::vector<Tick>{5}, ds.domain),
                                        SpikeTrain({50}, ds.domain)}),
                         b ? "b" : "a", i});
  }
  CHECK(neuron_vp_1nn(ds, 0, 1.0).score == 1.0);
  CHECK_THROWS_AS(neuron_vp_1nn(ds, 2, 1.0), std::out_of_range);

  const std::map<std::int64_t, LickTimes> licks{{0, {{0, 10, 20, 30, 40, 50}, 0}}};
  const auto nt = neuron_trials(ds, 0, &licks);
  CHECK(nt.trials.size() == 1);
  CHECK(nt.excluded_trial_ids.size() == 7);
}
