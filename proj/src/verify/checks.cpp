#include "spiketopo/verify/checks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

#include "spiketopo/diagram_distance.hpp"
#include "spiketopo/embed.hpp"
#include "spiketopo/io.hpp"
#include "spiketopo/metrics.hpp"
#include "spiketopo/persistence.hpp"
#include "spiketopo/pipeline.hpp"
#include "spiketopo/rng.hpp"
#include "spiketopo/single_neuron.hpp"
#include "spiketopo/stability.hpp"
#include "spiketopo/synth.hpp"
#include "spiketopo/verify/oracles.hpp"

namespace spiketopo::verify {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckResult result(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::string num(double v) { return format_number(v); }
std::string num(std::size_t v) { return std::to_string(v); }

std::size_t symmetric_difference_size(const SpikeTrain& a, const SpikeTrain& b) {
  std::vector<Tick> out;
  std::set_symmetric_difference(a.times().begin(), a.times().end(), b.times().begin(), b.times().end(),
                                std::back_inserter(out));
  return out.size();
}

// Configuration shared by the network A experiments.
PipelineConfig network_a_config() {
  PipelineConfig c;
  c.q = 2.005;
  c.degree = 0;
  c.trials_per_stimulus = 10;
  c.repetitions = 20;
  c.rng_seed = 7;
  return c;
}

constexpr std::uint64_t kNetworkASeed = 7;

}  // namespace

CheckScale CheckScale::quick() {
  CheckScale s;
  s.closed_form_pairs = 1000;
  s.axiom_triples = 1000;
  s.lemma_pairs = 1000;
  s.theorem1_ensembles = 100;
  s.mst_matrices = 50;
  s.degree1_matrices = 30;
  s.bottleneck_pairs = 50;
  s.theorem2_pairs = 50;
  s.rate_phase_datasets = 10;
  return s;
}

CheckResult check_vp_oracle_grid() {
  const TimeDomain domain(6);
  std::vector<SpikeTrain> trains;
  for (unsigned mask = 0; mask < (1u << 7); ++mask) {
    if (std::popcount(mask) > 4) continue;
    std::vector<Tick> times;
    for (Tick t = 0; t <= 6; ++t)
      if (mask & (1u << t)) times.push_back(t);
    trains.emplace_back(std::move(times), domain);
  }
  std::size_t compared = 0, mismatches = 0;
  for (double q : {0.0, 0.3, 1.0, 2.0, 2.5}) {
    for (const auto& a : trains) {
      for (const auto& b : trains) {
        const double expected = vp_brute_force(a, b, q);
        if (vp_distance_dp(a, b, q) != expected || vp_distance(a, b, q) != expected) ++mismatches;
        ++compared;
      }
    }
  }
  return result("vp_oracle_grid", mismatches == 0,
                num(compared) + " pairs over " + num(trains.size()) + " trains, " + num(mismatches) + " mismatches");
}

CheckResult check_vp_closed_forms(std::size_t pairs) {
  Rng rng(1001);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const SpikeTrain a = random_train(rng, 100, 20);
    const SpikeTrain b = random_train(rng, 100, 20);
    const auto count_gap = static_cast<double>(a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
    const auto sym = static_cast<double>(symmetric_difference_size(a, b));
    if (vp_distance(a, b, 0.0) != count_gap || vp_distance_dp(a, b, 0.0) != count_gap) ++mismatches;
    if (vp_distance(a, b, 2.5) != sym || vp_distance_dp(a, b, 2.5) != sym) ++mismatches;
  }
  return result("vp_closed_forms", mismatches == 0, num(pairs) + " pairs, " + num(mismatches) + " mismatches");
}

CheckResult check_metric_axioms(std::size_t triples) {
  Rng rng(1002);
  std::size_t asymmetric = 0, triangle = 0, nonzero_self = 0;
  double worst_excess = 0.0;
  for (std::size_t i = 0; i < triples; ++i) {
    const SpikeTrain a = random_train(rng, 50, 12);
    const SpikeTrain b = random_train(rng, 50, 12);
    const SpikeTrain c = random_train(rng, 50, 12);
    for (double q : {0.5, 1.0, 2.005}) {
      const double ab = vp_distance(a, b, q), ba = vp_distance(b, a, q);
      const double bc = vp_distance(b, c, q), ac = vp_distance(a, c, q);
      if (ab != ba) ++asymmetric;
      if (vp_distance(a, a, q) != 0.0) ++nonzero_self;
      worst_excess = std::max(worst_excess, ac - (ab + bc));
      if (ac > ab + bc + 1e-9) ++triangle;
    }
  }
  return result("metric_axioms", asymmetric == 0 && triangle == 0 && nonzero_self == 0,
                num(triples) + " triples x 3 q; asymmetric " + num(asymmetric) + ", triangle violations " +
                    num(triangle) + ", nonzero self-distance " + num(nonzero_self) + ", worst excess " +
                    num(worst_excess));
}

CheckResult check_lipschitz_fuzz(std::size_t pairs, std::size_t ensembles) {
  Rng rng(1003);
  std::size_t lemma_violations = 0, theorem_violations = 0, distortion_violations = 0;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Tick t_max = rng.between(5, 60);
    const SpikeTrain a = random_train(rng, t_max, 10);
    const SpikeTrain b = random_train(rng, t_max, 10);
    const double q = 3.0 * rng.uniform01(), q2 = 3.0 * rng.uniform01();
    const auto c = check_lemma1(a, b, q, q2, t_max);
    if (!c.holds) ++lemma_violations;
    if (c.rhs > 0.0) worst_ratio = std::max(worst_ratio, c.lhs / c.rhs);
  }
  for (std::size_t i = 0; i < ensembles; ++i) {
    const Tick t_max = rng.between(5, 40);
    const auto k = static_cast<std::size_t>(rng.between(3, 7));
    const TrainEnsemble e = random_ensemble(rng, k, t_max, 6);
    const double q = 3.0 * rng.uniform01(), q2 = 3.0 * rng.uniform01();
    const auto c = check_theorem1(e, q, q2, static_cast<int>(i % 2));
    if (!c.holds) ++theorem_violations;
    if (!c.within_distortion) ++distortion_violations;
  }
  return result("lipschitz_fuzz", lemma_violations + theorem_violations + distortion_violations == 0,
                num(pairs) + " train pairs (" + num(lemma_violations) + " violations, max lhs/rhs " +
                    num(worst_ratio) + "), " + num(ensembles) + " ensembles (" + num(theorem_violations) +
                    " Lipschitz violations, " + num(distortion_violations) + " distortion violations)");
}

CheckResult check_degree0_mst(std::size_t matrices) {
  Rng rng(1004);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < matrices; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, 30));
    const DistanceMatrix m = random_matrix(rng, n, i % 2 == 0 ? 0 : 6);
    const PersistenceDiagram d = ph_degree0(m);
    bool births_zero = true;
    for (const auto& p : d.points()) births_zero = births_zero && p.birth == 0.0;
    if (!births_zero || d.infinite_count() != 1 || d.finite_deaths() != kruskal_weights(m)) ++mismatches;
  }
  return result("degree0_mst", mismatches == 0, num(matrices) + " matrices, " + num(mismatches) + " mismatches");
}

CheckResult check_degree1_oracle(std::size_t matrices) {
  Rng rng(1005);
  std::size_t mismatches = 0, bars = 0;
  for (std::size_t i = 0; i < matrices; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(3, 7));
    const std::size_t levels = std::array<std::size_t, 3>{0, 3, 8}[i % 3];
    const DistanceMatrix m = random_matrix(rng, n, levels);
    const PersistenceDiagram d = ph_degree1(m);
    const auto expected = betti_degree1(m);
    bars += expected.size();
    if (!std::equal(d.points().begin(), d.points().end(), expected.begin(), expected.end())) ++mismatches;
  }
  return result("degree1_oracle", mismatches == 0,
                num(matrices) + " matrices, " + num(bars) + " oracle bars, " + num(mismatches) + " mismatches");
}

CheckResult check_bottleneck_fast_path(std::size_t pairs) {
  Rng rng(1006);
  std::size_t failures = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t levels = i % 2 == 0 ? 0 : 5;
    const auto a = random_degree0_diagram(rng, static_cast<std::size_t>(rng.below(13)), levels);
    const auto b = random_degree0_diagram(rng, static_cast<std::size_t>(rng.below(13)), levels);
    const double gap = std::abs(bottleneck_degree0_fast(a, b) - bottleneck(a, b));
    worst = std::max(worst, gap);
    if (!(gap <= 1e-9)) ++failures;
  }
  return result("bottleneck_fast_path", failures == 0,
                num(pairs) + " pairs, " + num(failures) + " failures, max gap " + num(worst));
}

CheckResult check_bottleneck_oracle() {
  Rng rng(1007);
  std::size_t failures = 0;
  const std::size_t instances = 300;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t levels = i % 2 == 0 ? 0 : 4;
    auto a = random_diagram(rng, 1, static_cast<std::size_t>(rng.below(6)), levels);
    auto b = random_diagram(rng, 1, static_cast<std::size_t>(rng.below(6)), levels);
    if (i % 5 == 0) {
      // Append matching infinite bars so their pairing is exercised too.
      auto with_inf = [&](const PersistenceDiagram& d) {
        std::vector<DiagramPoint> pts(d.points().begin(), d.points().end());
        pts.push_back({static_cast<double>(rng.below(4)), kInf});
        return PersistenceDiagram(1, std::move(pts));
      };
      a = with_inf(a);
      b = with_inf(b);
    }
    const double fast = bottleneck(a, b), slow = bottleneck_exhaustive(a, b);
    if (!(std::abs(fast - slow) <= 1e-12)) ++failures;
  }
  return result("bottleneck_oracle", failures == 0, num(instances) + " pairs, " + num(failures) + " failures");
}

CheckResult check_wasserstein_oracle() {
  Rng rng(1008);
  std::size_t failures = 0, instances = 0;
  for (std::size_t i = 0; i < 150; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, 6));
    std::vector<double> costs(n * n);
    for (auto& c : costs) c = i % 2 == 0 ? rng.uniform01() : static_cast<double>(rng.below(4));
    for (double p : {1.0, 2.0, kInf}) {
      ++instances;
      const double gap = std::abs(assignment_wasserstein(n, costs, p) - wasserstein_permutations(n, costs, p));
      if (!(gap <= 1e-9)) ++failures;
    }
  }
  return result("wasserstein_oracle", failures == 0, num(instances) + " instances, " + num(failures) + " failures");
}

CheckResult check_theorem2_fuzz(std::size_t pairs) {
  Rng rng(1009);
  std::size_t violations = 0, instances = 0;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, 4));
    const auto k = static_cast<std::size_t>(rng.between(3, 5));
    const Tick t_max = rng.between(10, 30);
    std::vector<TrainEnsemble> sa, sb;
    for (std::size_t j = 0; j < n; ++j) {
      sa.push_back(random_ensemble(rng, k, t_max, 5));
      sb.push_back(random_ensemble(rng, k, t_max, 5));
    }
    const double q = 0.1 + 2.4 * rng.uniform01();
    const int degree = static_cast<int>(i % 2);
    for (double p : {1.0, 2.0, kInf}) {
      ++instances;
      const auto c = check_theorem2(sa, sb, q, degree, p);
      if (!c.holds) ++violations;
      if (c.rhs > 0.0) worst_ratio = std::max(worst_ratio, c.lhs / c.rhs);
    }
  }
  return result("theorem2_fuzz", violations == 0,
                num(instances) + " instances (" + num(pairs) + " pairs x 3 p), " + num(violations) +
                    " violations, max lhs/rhs " + num(worst_ratio));
}

CheckResult check_network_a() {
  const Dataset ds = gen_network_a(kNetworkASeed);
  const auto report = run_repetitions(ds, network_a_config());
  bool passed = report.mean >= 0.80 && report.mean <= 1.00;
  std::string detail = "network mean " + num(report.mean) + " (std " + num(report.std) + "); single neurons";
  for (std::size_t n = 0; n < ds.neuron_count; ++n) {
    const auto single = neuron_vp_1nn(ds, n, 2.005);
    passed = passed && single.score >= 0.40 && single.score <= 0.60;
    detail += " " + num(single.score);
  }
  return result("network_a", passed, detail);
}

// Frozen at first computation (q = 2): the cyclic ensemble's only loop is
// born when adjacent neurons connect (distance 10) and dies when the rest of
// the pairs (distance 20) fill it in.
constexpr double kCascadeQ = 2.0;
constexpr double kCascadeBirth = 10.0;
constexpr double kCascadeDeath = 20.0;
constexpr double kCascadeDegree0Bottleneck = 0.0;
constexpr double kCascadeDegree1Bottleneck = 5.0;

CheckResult check_cascade_pair() {
  const auto [cyclic, chain] = gen_cascade_pair();
  const auto c1 = ensemble_diagram(cyclic, kCascadeQ, 1);
  const auto r1 = ensemble_diagram(chain, kCascadeQ, 1);
  const double b0 = bottleneck(ensemble_diagram(cyclic, kCascadeQ, 0), ensemble_diagram(chain, kCascadeQ, 0));
  const double b1 = bottleneck(c1, r1);

  double longest = 0.0;
  for (const auto& p : c1.points()) longest = std::max(longest, p.persistence());
  const bool qualitative = longest >= 5.0 && r1.empty() && b0 < b1;
  const bool frozen = c1.size() == 1 && c1.points()[0].birth == kCascadeBirth &&
                      c1.points()[0].death == kCascadeDeath && b0 == kCascadeDegree0Bottleneck &&
                      b1 == kCascadeDegree1Bottleneck;
  return result("cascade_pair", qualitative && frozen,
                "cyclic H1 bars " + num(c1.size()) + " (longest " + num(longest) + "), chain H1 bars " +
                    num(r1.size()) + ", bottleneck H0 " + num(b0) + ", H1 " + num(b1) +
                    (frozen ? "" : " [differs from frozen values]"));
}

CheckResult check_q_sweep() {
  const Dataset ds = gen_network_a(kNetworkASeed);
  PipelineConfig config = network_a_config();
  config.repetitions = 10;
  const auto rows = q_sweep(ds, config, q_grid(0.5, 2.0, 0.05));
  double lo = 1.0, hi = 0.0;
  for (const auto& r : rows) {
    lo = std::min(lo, r.mean);
    hi = std::max(hi, r.mean);
  }
  return result("q_sweep", hi - lo <= 0.15,
                num(rows.size()) + " q values, mean score in [" + num(lo) + ", " + num(hi) + "], range " +
                    num(hi - lo));
}

CheckResult check_chance_calibration() {
  constexpr std::size_t kStimuli = 3;
  const Dataset ds = gen_chance_dataset(7, kStimuli);
  PipelineConfig config = network_a_config();
  const auto report = run_repetitions(ds, config);
  const double target = 1.0 / static_cast<double>(kStimuli);
  const double gap = std::abs(report.mean - target);
  return result("chance_calibration", gap <= 3.0 * report.std,
                "mean " + num(report.mean) + ", std " + num(report.std) + ", target " + num(target) + ", |gap| " +
                    num(gap));
}

namespace {

// Small single-neuron data set where rates and preferred phases differ by
// stimulus; every fifth data set has a stimulus that never spikes.
std::vector<ProcessedTrial> rate_phase_dataset(Rng& rng, std::size_t stimuli, bool silent_first) {
  const TimeDomain domain(49);
  std::vector<ProcessedTrial> trials;
  std::int64_t id = 0;
  for (std::size_t s = 0; s < stimuli; ++s) {
    const Tick rate = rng.between(1, 6);
    const Tick centre = rng.between(10, 40);
    const auto count = static_cast<std::size_t>(rng.between(8, 15));
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<Tick> times;
      const Tick spikes = silent_first && s == 0 ? 0 : std::max<Tick>(0, rate + rng.between(-2, 2));
      for (Tick j = 0; j < spikes; ++j) times.push_back(std::clamp<Tick>(centre + rng.between(-8, 8), 0, 49));
      trials.push_back({SpikeTrain::from_unsorted(std::move(times), domain), s, id++});
    }
  }
  return trials;
}

}  // namespace

CheckResult check_rate_phase(std::size_t datasets) {
  Rng rng(1010);
  std::size_t disagreements = 0, predictions = 0;
  double worst_norm = 0.0;
  for (std::size_t d = 0; d < datasets; ++d) {
    const auto stimulus_count = static_cast<std::size_t>(rng.between(2, 3));
    const auto trials = rate_phase_dataset(rng, stimulus_count, d % 5 == 0);
    std::vector<std::string> stimuli;
    for (std::size_t s = 0; s < stimulus_count; ++s) stimuli.push_back("s" + std::to_string(s));

    for (double alpha : {1.0, 0.0}) {
      RatePhaseConfig config;
      config.alpha = alpha;
      config.seed = d;
      const auto report = bayes_rate_phase(trials, stimuli, config);
      std::size_t row = 0;
      for (std::size_t split_index = 0; split_index < config.splits; ++split_index) {
        const auto split = stratified_split(trials, stimulus_count, config.train_fraction, config.seed + split_index);
        std::vector<ProcessedTrial> training;
        for (std::size_t i : split.train) training.push_back(trials[i]);
        const RatePhaseModel model(training, stimulus_count, config);
        for (std::size_t i : split.test) {
          const std::size_t expected =
              alpha == 1.0 ? rate_only_predict(training, stimulus_count, config.rate_bandwidth, trials[i].train)
                           : phase_only_predict(training, stimulus_count, config.phase_bandwidth, config.phase_span,
                                                trials[i].train);
          ++predictions;
          if (row >= report.per_trial.size() || report.per_trial[row].predicted != stimuli[expected]) ++disagreements;
          ++row;
          const auto post = model.posteriors(trials[i].train);
          for (const auto* v : {&post.rate, &post.phase, &post.mixed}) {
            double sum = 0.0;
            for (double x : *v) sum += x;
            worst_norm = std::max(worst_norm, std::abs(sum - 1.0));
          }
        }
      }
      if (row != report.per_trial.size()) ++disagreements;
    }
  }
  return result("rate_phase_reductions", disagreements == 0 && worst_norm <= 1e-12,
                num(datasets) + " data sets, " + num(predictions) + " predictions, " + num(disagreements) +
                    " disagreements, max |sum posterior - 1| " + num(worst_norm));
}

CheckResult check_permutation_invariance() {
  NetworkAParams params;
  params.trials_per_stimulus = 12;
  const Dataset ds = gen_network_a(11, params);
  Dataset shuffled = ds;
  Rng rng(1011);
  for (auto& trial : shuffled.trials) {
    std::vector<SpikeTrain> trains(trial.ensemble.trains().begin(), trial.ensemble.trains().end());
    rng.shuffle(trains);
    trial.ensemble = TrainEnsemble(std::move(trains));
  }
  std::size_t mismatches = 0;
  for (int degree : {0, 1}) {
    PipelineConfig config = network_a_config();
    config.degree = degree;
    config.repetitions = 1;
    const auto a = run_pipeline_once(ds, config);
    const auto b = run_pipeline_once(shuffled, config);
    if (!(a.bdm == b.bdm) || a.report.score != b.report.score) ++mismatches;
  }
  for (const auto& trial : ds.trials) {
    const TrainEnsemble c = canonicalize(trial.ensemble);
    if (!(canonicalize(c) == c)) ++mismatches;
  }
  return result("permutation_invariance", mismatches == 0, num(mismatches) + " mismatches over degrees 0 and 1");
}

CheckResult check_mds_euclidean() {
  Rng rng(1012);
  double worst = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(3, 12));
    std::vector<std::array<double, 2>> pts(n);
    for (auto& p : pts) p = {10.0 * rng.uniform01(), 10.0 * rng.uniform01()};
    DistanceMatrix m(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) m.set(a, b, std::hypot(pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]));
    const auto mds = classical_mds(m, 2);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const double d = std::hypot(mds.coords[a][0] - mds.coords[b][0], mds.coords[a][1] - mds.coords[b][1]);
        worst = std::max(worst, std::abs(d - m(a, b)));
      }
  }
  return result("mds_euclidean", worst <= 1e-6, "50 planar point sets, max distance error " + num(worst));
}

CheckResult check_round_trips() {
  NetworkAParams params;
  params.trials_per_stimulus = 5;
  const Dataset ds = gen_network_a(3, params);
  std::size_t failures = 0;
  auto same_dataset = [](const Dataset& a, const Dataset& b) {
    if (a.domain != b.domain || a.stimuli != b.stimuli || a.neuron_count != b.neuron_count) return false;
    if (a.trials.size() != b.trials.size()) return false;
    for (std::size_t i = 0; i < a.trials.size(); ++i)
      if (!(a.trials[i].ensemble == b.trials[i].ensemble) || a.trials[i].stimulus != b.trials[i].stimulus ||
          a.trials[i].trial_id != b.trials[i].trial_id)
        return false;
    return true;
  };
  if (!same_dataset(parse_raster_json(raster_to_json(ds)), ds)) ++failures;
  if (!same_dataset(parse_raster_csv(raster_to_csv(ds), 1.0, ds.domain.t_max), ds)) ++failures;

  PipelineConfig config = network_a_config();
  config.trials_per_stimulus = 4;
  const auto run = run_pipeline_once(ds, config);
  const LabeledMatrix lm{run.bdm, run.trial_ids, run.labels};
  const std::string csv = matrix_to_csv(lm);
  const auto back = parse_matrix_csv(csv);
  if (matrix_to_csv(back) != csv || back.ids != lm.ids || back.labels != lm.labels) ++failures;

  const std::vector<PersistenceDiagram> dgms{ensemble_diagram(ds.trials[0].ensemble, 2.005, 0),
                                             ensemble_diagram(ds.trials[0].ensemble, 2.005, 1)};
  const auto parsed = parse_diagram_csv(diagrams_to_csv(dgms));
  std::vector<PersistenceDiagram> again;
  for (const auto& [degree, d] : parsed) again.push_back(d);
  if (diagrams_to_csv(again) != diagrams_to_csv(dgms)) ++failures;

  const std::string report = report_to_json(run.report);
  if (report_to_json(parse_report_json(report)) != report) ++failures;

  std::map<std::int64_t, LickTimes> licks{{0, {{5, 100, 300, 450, 600, 800, 990}, 0}}, {3, {{1, 2}, 1}}};
  const auto licks_back = parse_licks_json(licks_to_json(licks));
  if (licks_to_json(licks_back) != licks_to_json(licks)) ++failures;
  return result("round_trips", failures == 0, num(failures) + " failing formats of 6");
}

std::vector<NamedCheck> property_checks(const CheckScale& s) {
  return {
      {"vp_oracle_grid", [] { return check_vp_oracle_grid(); }},
      {"vp_closed_forms", [s] { return check_vp_closed_forms(s.closed_form_pairs); }},
      {"metric_axioms", [s] { return check_metric_axioms(s.axiom_triples); }},
      {"lipschitz_fuzz", [s] { return check_lipschitz_fuzz(s.lemma_pairs, s.theorem1_ensembles); }},
      {"degree0_mst", [s] { return check_degree0_mst(s.mst_matrices); }},
      {"degree1_oracle", [s] { return check_degree1_oracle(s.degree1_matrices); }},
      {"bottleneck_fast_path", [s] { return check_bottleneck_fast_path(s.bottleneck_pairs); }},
      {"bottleneck_oracle", [] { return check_bottleneck_oracle(); }},
      {"wasserstein_oracle", [] { return check_wasserstein_oracle(); }},
      {"theorem2_fuzz", [s] { return check_theorem2_fuzz(s.theorem2_pairs); }},
      {"rate_phase_reductions", [s] { return check_rate_phase(s.rate_phase_datasets); }},
      {"permutation_invariance", [] { return check_permutation_invariance(); }},
      {"mds_euclidean", [] { return check_mds_euclidean(); }},
      {"round_trips", [] { return check_round_trips(); }},
  };
}

std::vector<NamedCheck> experiment_checks() {
  return {
      {"network_a", [] { return check_network_a(); }},
      {"cascade_pair", [] { return check_cascade_pair(); }},
      {"q_sweep", [] { return check_q_sweep(); }},
      {"chance_calibration", [] { return check_chance_calibration(); }},
  };
}

}  // namespace spiketopo::verify
