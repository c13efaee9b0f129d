#include <algorithm>

#include "doctest.h"
#include "spiketopo/io.hpp"
#include "spiketopo/pipeline.hpp"
#include "spiketopo/synth.hpp"

using namespace spiketopo;

TEST_CASE("LOOCV 1-NN on a two-block matrix is perfect") {
  DistanceMatrix m(4);
  m.set(0, 1, 0.0);
  m.set(2, 3, 0.0);
  for (std::size_t i : {0, 1})
    for (std::size_t j : {2, 3}) m.set(i, j, 1.0);
  const auto r = loocv_1nn(m, {"a", "a", "b", "b"});
  CHECK(r.score == 1.0);
}

TEST_CASE("LOOCV ties go to the smallest index") {
  DistanceMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) m.set(i, j, 1.0);
  const auto r = loocv_1nn(m, {"a", "b", "a", "b"});
  // Row 0 picks 1, every other row picks 0.
  CHECK(r.per_trial[0].predicted == "b");
  CHECK(r.per_trial[1].predicted == "a");
  CHECK(r.per_trial[2].predicted == "a");
  CHECK(r.per_trial[3].predicted == "a");
  CHECK(r.score == 0.25);
}

TEST_CASE("LOOCV on a hand-checked 4x4 matrix") {
  // Nearest neighbours: 0->1 (a), 1->0 (a), 2->1 (a, wrong), 3->2 (b).
  const DistanceMatrix m(4, {0, 1, 4, 5,  //
                             1, 0, 2, 6,  //
                             4, 2, 0, 3,  //
                             5, 6, 3, 0});
  const auto r = loocv_1nn(m, {"a", "a", "b", "b"});
  CHECK(r.score == 0.75);
}

TEST_CASE("window_trials keeps [start, end) and rebases") {
  Dataset ds;
  ds.domain = TimeDomain(20);
  ds.stimuli = {"a"};
  ds.neuron_count = 2;
  ds.trials.push_back({TrainEnsemble({SpikeTrain({1, 6, 9, 12}, ds.domain), SpikeTrain({1}, ds.domain)}), "a", 0});
  const Dataset w = window_trials(ds, 5, 10);
  CHECK(w.domain.t_max == 4);
  CHECK(std::vector<Tick>(w.trials[0].ensemble[0].times().begin(), w.trials[0].ensemble[0].times().end()) ==
        std::vector<Tick>{1, 4});
  CHECK(w.trials[0].ensemble[1].empty());
  CHECK_THROWS_AS(window_trials(ds, 5, 5), std::invalid_argument);
}

TEST_CASE("pipeline config validation") {
  PipelineConfig c;
  c.trials_per_stimulus = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.degree = 2;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.window = Window{5, 5};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("a stimulus with too few trials is a data error") {
  const Dataset ds = cascade_dataset();
  PipelineConfig c;
  c.trials_per_stimulus = 2;
  CHECK_THROWS_AS(run_pipeline_once(ds, c), DataError);
}

TEST_CASE("pipeline runs are deterministic and single repetitions agree") {
  NetworkAParams p;
  p.trials_per_stimulus = 15;
  const Dataset ds = gen_network_a(5, p);
  PipelineConfig c;
  c.repetitions = 1;
  c.rng_seed = 3;
  const auto once = run_pipeline_once(ds, c);
  const auto reps = run_repetitions(ds, c);
  CHECK(report_to_json(once.report) == report_to_json(run_pipeline_once(ds, c).report));
  CHECK(reps.per_repetition_scores.size() == 1);
  CHECK(reps.mean == once.report.score);
  CHECK(once.bdm.size() == 20);
  CHECK(std::is_sorted(once.labels.begin(), once.labels.end()));
}

TEST_CASE("pipeline output ignores trial order") {
  NetworkAParams p;
  p.trials_per_stimulus = 12;
  const Dataset ds = gen_network_a(6, p);
  Dataset reversed = ds;
  std::reverse(reversed.trials.begin(), reversed.trials.end());
  PipelineConfig c;
  c.repetitions = 3;
  CHECK(report_to_json(run_repetitions(ds, c)) == report_to_json(run_repetitions(reversed, c)));
}

TEST_CASE("mean and sample standard deviation") {
  const auto [m, s] = mean_and_std({1.0, 2.0, 3.0});
  CHECK(m == 2.0);
  CHECK(s == 1.0);
  CHECK(mean_and_std({4.0}).second == 0.0);
}
