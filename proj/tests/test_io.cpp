#include <limits>

#include "doctest.h"
#include "spiketopo/io.hpp"
#include "spiketopo/synth.hpp"

using namespace spiketopo;

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(parse_number("inf", "x") == std::numeric_limits<double>::infinity());
  CHECK(parse_number("2.5", "x") == 2.5);
  CHECK_THROWS_AS(parse_number("2.5x", "x"), DataError);
}

TEST_CASE("raster JSON and CSV round trips") {
  NetworkAParams p;
  p.trials_per_stimulus = 3;
  const Dataset ds = gen_network_a(5, p);
  const Dataset back = parse_raster_json(raster_to_json(ds));
  CHECK(back.domain == ds.domain);
  CHECK(back.stimuli == ds.stimuli);
  REQUIRE(back.trials.size() == ds.trials.size());
  for (std::size_t i = 0; i < ds.trials.size(); ++i) {
    CHECK(back.trials[i].ensemble == ds.trials[i].ensemble);
    CHECK(back.trials[i].trial_id == ds.trials[i].trial_id);
  }
  CHECK(raster_to_json(back) == raster_to_json(ds));
  const Dataset csv = parse_raster_csv(raster_to_csv(ds), 1.0, ds.domain.t_max);
  CHECK(raster_to_json(csv) == raster_to_json(ds));
}

TEST_CASE("malformed JSON carries line and column") {
  const std::string text = "{\n  \"t_max\": 10,\n  \"stimuli\": [\"a\"],\n}\n";
  try {
    parse_raster_json(text);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("line 4, column 1") != std::string::npos);
  }
}

TEST_CASE("structural raster errors") {
  CHECK_THROWS_AS(parse_raster_json(R"({"t_max": 10, "stimuli": ["a"], "trials": [
    {"trial_id": 1, "stimulus": "a", "trains": [[3, 2]]}]})"),
                  DataError);
  CHECK_THROWS_AS(parse_raster_json(R"({"t_max": 10, "stimuli": ["a"], "trials": [
    {"trial_id": 1, "stimulus": "a", "trains": [[11]]}]})"),
                  DataError);
  CHECK_THROWS_AS(parse_raster_json(R"({"t_max": 10, "stimuli": ["a"], "trials": [
    {"trial_id": 1, "stimulus": "b", "trains": [[1]]}]})"),
                  DataError);
  CHECK_THROWS_AS(parse_raster_csv("trial_id,neuron_index,time,stimulus\n1,0,abc,a\n"), DataError);
  CHECK_THROWS_AS(parse_raster_csv("trial_id,neuron_index,time,stimulus\n1,0,3\n"), DataError);
}

TEST_CASE("CSV raster infers shape") {
  const auto ds = parse_raster_csv("trial_id,neuron_index,time,stimulus\n4,1,2.6,b\n2,0,1,a\n4,1,7,b\n", 1.0);
  CHECK(ds.neuron_count == 2);
  CHECK(ds.domain.t_max == 7);
  CHECK(ds.stimuli == std::vector<std::string>{"b", "a"});
  REQUIRE(ds.trials.size() == 2);
}

TEST_CASE("matrix, diagram, report, lick and sweep formats") {
  LabeledMatrix m{DistanceMatrix(2, {0, 1.5, 1.5, 0}), {7, 9}, {"a", "b"}};
  const auto mb = parse_matrix_csv(matrix_to_csv(m));
  CHECK(mb.matrix == m.matrix);
  CHECK(mb.ids == m.ids);
  CHECK(mb.labels == m.labels);

  const std::vector<PersistenceDiagram> diagrams{
      PersistenceDiagram(0, {{0, 1}, {0, std::numeric_limits<double>::infinity()}}), PersistenceDiagram(1, {{2, 3}})};
  const auto parsed = parse_diagram_csv(diagrams_to_csv(diagrams));
  CHECK(parsed.at(0) == diagrams[0]);
  CHECK(parsed.at(1) == diagrams[1]);

  ClassificationReport r;
  r.per_trial = {{1, "a", "b", 0}, {2, "b", "b", 1}};
  r.per_repetition_scores = {0.0, 1.0};
  finalize_report(r);
  const auto rb = parse_report_json(report_to_json(r));
  CHECK(rb.score == 0.5);
  CHECK(rb.std == doctest::Approx(r.std).epsilon(1e-11));
  CHECK(report_to_json(rb) == report_to_json(r));

  const std::map<std::int64_t, LickTimes> licks{{3, {{0, 5, 9, 12, 20, 30}, 0}}, {4, {{1, 2}, 1}}};
  const auto lb = parse_licks_json(licks_to_json(licks));
  CHECK(lb.at(3).licks == licks.at(3).licks);
  CHECK(lb.at(4).onset_index == 1);
  CHECK(parse_licks_json(R"({"trials": [{"trial_id": 1, "licks": [1, 2]}]})").at(1).onset_index == 0);

  CHECK(sweep_to_csv({{0.5, 0.75, 0.1}}).find("0.5,0.75,0.1") != std::string::npos);
  CHECK(coords_to_csv({{-0.0, 1.0}}, {1}, {"a"}) == "trial_id,x,y,stimulus\n1,0,1,a\n");
}

TEST_CASE("bad matrix CSV") {
  CHECK_THROWS_AS(parse_matrix_csv("id,label,1,2\n1,a,0,1\n2,b,2,0\n"), DataError);
  CHECK_THROWS_AS(parse_matrix_csv("id,label,1\n1,a,0,5\n"), DataError);
}
