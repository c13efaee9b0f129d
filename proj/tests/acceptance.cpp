// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "spiketopo/io.hpp"
#include "spiketopo/rng.hpp"
#include "spiketopo/verify/checks.hpp"

namespace fs = std::filesystem;
using namespace spiketopo;
using verify::CheckResult;

namespace {

struct Timed {
  CheckResult result;
  double seconds = 0.0;
};

template <class F>
Timed timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Timed t{f(), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

CheckResult with_budget(Timed t, double limit_seconds) {
  std::ostringstream s;
  s << t.result.detail << "; runtime " << t.seconds << " s (limit " << limit_seconds << " s)";
  t.result.detail = s.str();
  t.result.passed = t.result.passed && t.seconds < limit_seconds;
  return t.result;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_in(const fs::path& dir, const std::string& args, const std::string& stdout_name) {
  const std::string cmd = "cd '" + dir.string() + "' && '" SPIKETOPO_CLI_PATH "' " + args + " > '" + stdout_name +
                          "' 2> '" + stdout_name + ".err'";
  const int status = std::system(cmd.c_str());
  return status;
}

// Writes lick sequences for the first trials of the raster; every fourth
// trial gets too few licks so the exclusion path runs as well.
void write_licks(const fs::path& raster, const fs::path& out) {
  const Dataset ds = read_raster(raster.string());
  Rng rng(99);
  std::map<std::int64_t, LickTimes> licks;
  for (std::size_t i = 0; i < ds.trials.size(); ++i) {
    LickTimes l;
    Tick t = rng.between(0, 20);
    const std::size_t count = i % 4 == 3 ? 4 : 7;
    for (std::size_t k = 0; k < count; ++k) {
      l.licks.push_back(t);
      t += rng.between(120, 180);
    }
    l.onset_index = i % 2;
    licks[ds.trials[i].trial_id] = l;
  }
  write_text_file(out.string(), licks_to_json(licks));
}

// Runs the command script in `dir`; returns false with a message on a bad exit.
bool run_script(const fs::path& dir, std::string& error) {
  const std::vector<std::pair<std::string, std::string>> steps = {
      {"synth --scenario network-a --seed 7 --out net.json", "synth_net.out"},
      {"synth --scenario network-a --seed 7 --out net.csv", "synth_net_csv.out"},
      {"synth --scenario cascade --out cascade.json", "synth_cascade.out"},
      {"synth --scenario chance --seed 3 --stimuli 3 --trials-per-stimulus 20", "synth_chance.json"},
      {"classify --input net.json --q 1.5 --degree 0 --trials 10 --reps 5 --seed 11 --out report.json "
       "--bdm-out bdm0.csv",
       "classify.out"},
      {"classify --input net.csv --q 1 --degree 1 --trials 5 --reps 2 --window-start 100 --window-end 400",
       "classify_csv.json"},
      {"sweep --input net.json --q-start 0.5 --q-end 1 --q-step 0.25 --trials 10 --reps 2 --out sweep.csv",
       "sweep.out"},
      {"vp --q 1 --a [1,5,9] --b [2,6,30]", "vp.out"},
      {"vp-matrix --input net.json --trial 0 --q 2 --out m0.csv", "vpm0.out"},
      {"vp-matrix --input net.json --trial 1 --q 2 --out m1.csv", "vpm1.out"},
      {"vp-matrix --input cascade.json --trial 0 --q 2", "mc.csv"},
      {"ph --input m0.csv --degree both --out d0.csv", "ph0.out"},
      {"ph --input m1.csv --degree both --out d1.csv", "ph1.out"},
      {"ph --input mc.csv --degree 1", "phc.csv"},
      {"bottleneck --a d0.csv --b d1.csv --degree 0", "bn0.out"},
      {"bottleneck --a d0.csv --b d1.csv --degree 1", "bn1.out"},
      {"bdm --diagrams diagrams --degree 0 --labels net.json --out bdm.csv", "bdm.out"},
      {"single-neuron --input net.json --method vp1nn --q 1", "sn_vp.json"},
      {"single-neuron --input net.json --method bayes --licks licks.json --seed 5 --splits 4 --out sn_bayes.json",
       "sn_bayes.out"},
      {"single-neuron --input net.json --method bayes --alpha 0 --neuron 2 --splits 3", "sn_phase.json"},
      {"mds --input bdm0.csv --dim 3 --out coords.csv", "mds.out"},
      {"mds --input mc.csv --dim 2", "mds_cascade.csv"},
      {"selfcheck --quick", "selfcheck.out"},
  };
  for (const auto& [args, out] : steps) {
    if (args.starts_with("bdm")) {
      fs::create_directories(dir / "diagrams");
      fs::copy_file(dir / "d0.csv", dir / "diagrams" / "0.csv", fs::copy_options::overwrite_existing);
      fs::copy_file(dir / "d1.csv", dir / "diagrams" / "1.csv", fs::copy_options::overwrite_existing);
    }
    if (args.starts_with("single-neuron") && args.find("licks") != std::string::npos)
      write_licks(dir / "net.json", dir / "licks.json");
    if (run_in(dir, args, out) != 0) {
      error = "'" + args + "' failed: " + slurp(dir / (out + ".err"));
      return false;
    }
  }
  return true;
}

CheckResult check_determinism() {
  CheckResult r{"determinism", false, ""};
  const fs::path root = fs::temp_directory_path() / ("spiketopo_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const fs::path a = root / "a", b = root / "b";
  fs::create_directories(a);
  fs::create_directories(b);
  std::string error;
  if (!run_script(a, error) || !run_script(b, error)) {
    r.detail = error;
    return r;
  }
  std::size_t files = 0, mismatched = 0;
  std::string first_mismatch;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), a);
    ++files;
    if (slurp(entry.path()) != slurp(b / rel)) {
      ++mismatched;
      if (first_mismatch.empty()) first_mismatch = rel.string();
    }
  }
  r.passed = mismatched == 0 && files > 0;
  r.detail = std::to_string(files) + " output files compared, " + std::to_string(mismatched) + " differ" +
             (first_mismatch.empty() ? "" : " (first: " + first_mismatch + ")");
  if (r.passed) fs::remove_all(root);
  return r;
}

}  // namespace

int main() {
  const auto scale = verify::CheckScale::full();
  std::vector<CheckResult> results;
  results.push_back(with_budget(timed([] { return verify::check_vp_oracle_grid(); }), 60));
  results.push_back(verify::check_vp_closed_forms(scale.closed_form_pairs));
  results.push_back(verify::check_metric_axioms(scale.axiom_triples));
  results.push_back(
      with_budget(timed([&] { return verify::check_lipschitz_fuzz(scale.lemma_pairs, scale.theorem1_ensembles); }), 300));
  results.push_back(verify::check_degree0_mst(scale.mst_matrices));
  results.push_back(verify::check_degree1_oracle(scale.degree1_matrices));
  results.push_back(verify::check_bottleneck_fast_path(scale.bottleneck_pairs));
  results.push_back(verify::check_theorem2_fuzz(scale.theorem2_pairs));
  results.push_back(with_budget(timed([] { return verify::check_network_a(); }), 600));
  results.push_back(verify::check_cascade_pair());
  results.push_back(with_budget(timed([] { return verify::check_q_sweep(); }), 900));
  results.push_back(verify::check_chance_calibration());
  results.push_back(verify::check_rate_phase(scale.rate_phase_datasets));
  results.push_back(check_determinism());

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << r.name << ": " << r.detail << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
