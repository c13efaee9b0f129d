#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spiketopo::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counts and measured values, deterministic given the inputs
};

/// Instance counts for the randomized checks. `full` uses the acceptance
/// sizes; `quick` is a smoke-test subset of each.
struct CheckScale {
  std::size_t closed_form_pairs = 10000;
  std::size_t axiom_triples = 10000;
  std::size_t lemma_pairs = 10000;
  std::size_t theorem1_ensembles = 1000;
  std::size_t mst_matrices = 200;
  std::size_t degree1_matrices = 100;
  std::size_t bottleneck_pairs = 200;
  std::size_t theorem2_pairs = 500;
  std::size_t rate_phase_datasets = 50;

  static CheckScale full() { return {}; }
  static CheckScale quick();
};

CheckResult check_vp_oracle_grid();
CheckResult check_vp_closed_forms(std::size_t pairs);
CheckResult check_metric_axioms(std::size_t triples);
CheckResult check_lipschitz_fuzz(std::size_t pairs, std::size_t ensembles);
CheckResult check_degree0_mst(std::size_t matrices);
CheckResult check_degree1_oracle(std::size_t matrices);
CheckResult check_bottleneck_fast_path(std::size_t pairs);
CheckResult check_theorem2_fuzz(std::size_t pairs);
CheckResult check_network_a();
CheckResult check_cascade_pair();
CheckResult check_q_sweep();
CheckResult check_chance_calibration();
CheckResult check_rate_phase(std::size_t datasets);

// Further invariants exercised by selfcheck.
CheckResult check_permutation_invariance();
CheckResult check_bottleneck_oracle();
CheckResult check_wasserstein_oracle();
CheckResult check_mds_euclidean();
CheckResult check_round_trips();

struct NamedCheck {
  std::string name;
  std::function<CheckResult()> run;
};

/// Oracle and property checks (no synthetic-experiment reproductions).
std::vector<NamedCheck> property_checks(const CheckScale& scale);
/// The synthetic experiments (network A, cascade, q sweep, chance level).
std::vector<NamedCheck> experiment_checks();

}  // namespace spiketopo::verify
