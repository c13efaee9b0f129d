// Command-line front end: one subcommand per analysis step.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spiketopo/diagram_distance.hpp"
#include "spiketopo/embed.hpp"
#include "spiketopo/io.hpp"
#include "spiketopo/metrics.hpp"
#include "spiketopo/persistence.hpp"
#include "spiketopo/pipeline.hpp"
#include "spiketopo/single_neuron.hpp"
#include "spiketopo/stability.hpp"
#include "spiketopo/synth.hpp"
#include "spiketopo/verify/checks.hpp"

namespace fs = std::filesystem;
using namespace spiketopo;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::optional<std::string>& path, const std::string& contents) {
  if (path)
    write_text_file(*path, contents);
  else
    std::cout << contents;
}

std::vector<Tick> parse_spike_list(const std::string& text, const char* flag) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string(flag) + ": malformed spike list: " + e.what());
  }
  if (!j.is_array()) throw DataError(std::string(flag) + ": expected a JSON array of integers");
  std::vector<Tick> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DataError(std::string(flag) + ": expected a JSON array of integers");
    out.push_back(v.get<Tick>());
  }
  return out;
}

int parse_degree(const std::string& text) {
  if (text == "0") return 0;
  if (text == "1") return 1;
  throw UsageError("--degree must be 0 or 1");
}

std::string stem_of(const fs::path& p) { return p.stem().string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spiketopo: topological analysis of spike-train ensembles"};
  app.require_subcommand(1);
  std::function<void()> action;

  // vp
  double vp_q = 1.0;
  std::string vp_a, vp_b;
  auto* vp = app.add_subcommand("vp", "VP distance between two spike lists");
  vp->add_option("--q", vp_q, "Shift cost per tick")->required();
  vp->add_option("--a", vp_a, "JSON spike list, e.g. [1,5,9]")->required();
  vp->add_option("--b", vp_b, "JSON spike list")->required();
  vp->callback([&] {
    action = [&] {
      auto a = parse_spike_list(vp_a, "--a"), b = parse_spike_list(vp_b, "--b");
      Tick t_max = 0;
      for (Tick t : a) t_max = std::max(t_max, t);
      for (Tick t : b) t_max = std::max(t_max, t);
      for (Tick t : a)
        if (t < 0) throw DataError("--a: negative spike time");
      for (Tick t : b)
        if (t < 0) throw DataError("--b: negative spike time");
      const TimeDomain domain(t_max);
      std::cout << format_number(vp_distance(SpikeTrain::from_unsorted(a, domain),
                                             SpikeTrain::from_unsorted(b, domain), vp_q))
                << "\n";
    };
  });

  // vp-matrix
  double vm_q = 2.005;
  std::string vm_input;
  std::int64_t vm_trial = 0;
  std::optional<std::string> vm_out;
  auto* vm = app.add_subcommand("vp-matrix", "Neuron x neuron VP matrix of one trial");
  vm->add_option("--q", vm_q, "Shift cost per tick");
  vm->add_option("--input", vm_input, "Raster (.json or .csv)")->required();
  vm->add_option("--trial", vm_trial, "trial_id")->required();
  vm->add_option("--out", vm_out, "Matrix CSV (stdout if omitted)");
  vm->callback([&] {
    action = [&] {
      const Dataset ds = read_raster(vm_input);
      for (const auto& trial : ds.trials) {
        if (trial.trial_id != vm_trial) continue;
        LabeledMatrix lm{vp_matrix(trial.ensemble, vm_q), {}, {}};
        for (std::size_t n = 0; n < trial.ensemble.size(); ++n) {
          lm.ids.push_back(static_cast<std::int64_t>(n));
          lm.labels.push_back("neuron");
        }
        emit(vm_out, matrix_to_csv(lm));
        return;
      }
      throw DataError("no trial with trial_id " + std::to_string(vm_trial));
    };
  });

  // ph
  std::string ph_input, ph_degree = "both";
  std::optional<std::string> ph_out;
  auto* ph = app.add_subcommand("ph", "Rips persistence diagram of a distance matrix");
  ph->add_option("--input", ph_input, "Matrix CSV")->required();
  ph->add_option("--degree", ph_degree, "0, 1 or both")->check(CLI::IsMember({"0", "1", "both"}));
  ph->add_option("--out", ph_out, "Diagram CSV (stdout if omitted)");
  ph->callback([&] {
    action = [&] {
      const auto lm = parse_matrix_csv(read_text_file(ph_input));
      std::vector<PersistenceDiagram> dgms;
      if (ph_degree != "1") dgms.push_back(ph_diagram(lm.matrix, 0));
      if (ph_degree != "0") dgms.push_back(ph_diagram(lm.matrix, 1));
      emit(ph_out, diagrams_to_csv(dgms));
    };
  });

  // bottleneck
  std::string bn_a, bn_b, bn_degree = "0";
  auto* bn = app.add_subcommand("bottleneck", "Bottleneck distance between two diagram files");
  bn->add_option("--a", bn_a, "Diagram CSV")->required();
  bn->add_option("--b", bn_b, "Diagram CSV")->required();
  bn->add_option("--degree", bn_degree, "Homology degree to compare");
  bn->callback([&] {
    action = [&] {
      const int degree = parse_degree(bn_degree);
      auto pick = [degree](const std::string& path) {
        auto all = parse_diagram_csv(read_text_file(path));
        auto it = all.find(degree);
        return it == all.end() ? PersistenceDiagram(degree, {}) : it->second;
      };
      std::cout << format_number(bottleneck(pick(bn_a), pick(bn_b))) << "\n";
    };
  });

  // bdm
  std::string bdm_dir, bdm_degree = "0";
  std::optional<std::string> bdm_labels, bdm_out;
  auto* bdm = app.add_subcommand("bdm", "Bottleneck distance matrix over a directory of diagram CSVs");
  bdm->add_option("--diagrams", bdm_dir, "Directory of <trial_id>.csv diagram files")->required();
  bdm->add_option("--degree", bdm_degree, "Homology degree");
  bdm->add_option("--labels", bdm_labels, "Raster whose stimuli label the trials");
  bdm->add_option("--out", bdm_out, "Matrix CSV (stdout if omitted)");
  bdm->callback([&] {
    action = [&] {
      const int degree = parse_degree(bdm_degree);
      if (!fs::is_directory(bdm_dir)) throw DataError("'" + bdm_dir + "' is not a directory");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(bdm_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw DataError("no .csv diagrams in '" + bdm_dir + "'");
      std::map<std::int64_t, std::string> stimulus_of;
      if (bdm_labels)
        for (const auto& t : read_raster(*bdm_labels).trials) stimulus_of[t.trial_id] = t.stimulus;

      std::vector<PersistenceDiagram> dgms;
      LabeledMatrix lm;
      for (const auto& f : files) {
        std::int64_t id = 0;
        try {
          std::size_t used = 0;
          id = std::stoll(stem_of(f), &used);
          if (used != stem_of(f).size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw DataError("diagram file '" + f.string() + "' is not named <trial_id>.csv");
        }
        auto all = parse_diagram_csv(read_text_file(f.string()));
        auto it = all.find(degree);
        dgms.push_back(it == all.end() ? PersistenceDiagram(degree, {}) : it->second);
        lm.ids.push_back(id);
        auto label = stimulus_of.find(id);
        lm.labels.push_back(label == stimulus_of.end() ? "unknown" : label->second);
      }
      lm.matrix = bottleneck_matrix(dgms);
      emit(bdm_out, matrix_to_csv(lm));
    };
  });

  // classify / sweep share pipeline flags
  std::string cl_input;
  PipelineConfig cl_config;
  std::string cl_degree = "0";
  std::optional<Tick> cl_wstart, cl_wend;
  std::optional<std::string> cl_out, cl_bdm_out;
  auto* cl = app.add_subcommand("classify", "Network pipeline with LOOCV 1-NN over repeated subsamples");
  auto add_pipeline_flags = [&](CLI::App* sub) {
    sub->add_option("--input", cl_input, "Raster (.json or .csv)")->required();
    sub->add_option("--degree", cl_degree, "Homology degree (0 or 1)");
    sub->add_option("--trials", cl_config.trials_per_stimulus, "Trials per stimulus in each subsample");
    sub->add_option("--reps", cl_config.repetitions, "Repetitions");
    sub->add_option("--seed", cl_config.rng_seed, "Seed of repetition 0");
    sub->add_option("--window-start", cl_wstart, "Analysis window start tick");
    sub->add_option("--window-end", cl_wend, "Analysis window end tick (exclusive)");
  };
  add_pipeline_flags(cl);
  cl->add_option("--q", cl_config.q, "Shift cost per tick");
  cl->add_option("--out", cl_out, "Report JSON (stdout if omitted)");
  cl->add_option("--bdm-out", cl_bdm_out, "Bottleneck matrix CSV of repetition 0");
  auto finish_config = [&] {
    cl_config.degree = parse_degree(cl_degree);
    if (cl_wstart.has_value() != cl_wend.has_value())
      throw UsageError("--window-start and --window-end go together");
    if (cl_wstart) cl_config.window = Window{*cl_wstart, *cl_wend};
    cl_config.validate();
  };
  cl->callback([&] {
    action = [&] {
      finish_config();
      const Dataset ds = read_raster(cl_input);
      const auto report = run_repetitions(ds, cl_config);
      if (cl_bdm_out) {
        const auto run = run_pipeline_once(ds, cl_config);
        write_text_file(*cl_bdm_out, matrix_to_csv({run.bdm, run.trial_ids, run.labels}));
      }
      emit(cl_out, report_to_json(report));
      if (cl_out) std::cout << "mean " << format_number(report.mean) << " std " << format_number(report.std) << "\n";
    };
  });

  double sw_start = 0.0, sw_end = 2.0, sw_step = 0.005;
  std::optional<std::string> sw_out;
  auto* sw = app.add_subcommand("sweep", "Mean score as a function of q");
  add_pipeline_flags(sw);
  sw->add_option("--q-start", sw_start, "First q");
  sw->add_option("--q-end", sw_end, "Last q");
  sw->add_option("--q-step", sw_step, "Grid step");
  sw->add_option("--out", sw_out, "Sweep CSV (stdout if omitted)");
  sw->callback([&] {
    action = [&] {
      if (!sw->count("--reps")) cl_config.repetitions = 10;
      finish_config();
      const Dataset ds = read_raster(cl_input);
      emit(sw_out, sweep_to_csv(q_sweep(ds, cl_config, q_grid(sw_start, sw_end, sw_step))));
    };
  });

  // synth
  std::string sy_scenario;
  std::uint64_t sy_seed = 0;
  std::size_t sy_stimuli = 3, sy_trials = 50;
  std::optional<std::string> sy_out;
  auto* sy = app.add_subcommand("synth", "Generate a synthetic raster");
  sy->add_option("--scenario", sy_scenario, "network-a, cascade or chance")
      ->required()
      ->check(CLI::IsMember({"network-a", "cascade", "chance"}));
  sy->add_option("--seed", sy_seed, "Generator seed");
  sy->add_option("--stimuli", sy_stimuli, "Stimulus count (chance)");
  sy->add_option("--trials-per-stimulus", sy_trials, "Trials per stimulus (chance)");
  sy->add_option("--out", sy_out, "Raster file, .csv for CSV (stdout JSON if omitted)");
  sy->callback([&] {
    action = [&] {
      Dataset ds;
      if (sy_scenario == "network-a")
        ds = gen_network_a(sy_seed);
      else if (sy_scenario == "cascade")
        ds = cascade_dataset();
      else
        ds = gen_chance_dataset(sy_seed, sy_stimuli, sy_trials);
      const bool csv = sy_out && fs::path(*sy_out).extension() == ".csv";
      emit(sy_out, csv ? raster_to_csv(ds) : raster_to_json(ds));
    };
  });

  // single-neuron
  std::string sn_input, sn_method = "vp1nn";
  std::optional<std::string> sn_licks, sn_out;
  std::optional<std::size_t> sn_neuron;
  double sn_q = 2.005;
  RatePhaseConfig sn_config;
  auto* sn = app.add_subcommand("single-neuron", "Per-neuron baseline classifiers");
  sn->add_option("--input", sn_input, "Raster (.json or .csv)")->required();
  sn->add_option("--licks", sn_licks, "Licks JSON; trains are time-warped and unusable trials excluded");
  sn->add_option("--method", sn_method, "vp1nn or bayes")->check(CLI::IsMember({"vp1nn", "bayes"}));
  sn->add_option("--alpha", sn_config.alpha, "Weight of the rate posterior (bayes)");
  sn->add_option("--q", sn_q, "Shift cost per tick (vp1nn)");
  sn->add_option("--seed", sn_config.seed, "Seed of split 0 (bayes)");
  sn->add_option("--splits", sn_config.splits, "Random train/test splits (bayes)");
  sn->add_option("--neuron", sn_neuron, "Only this neuron index");
  sn->add_option("--out", sn_out, "Report JSON (stdout if omitted)");
  sn->callback([&] {
    action = [&] {
      const Dataset ds = read_raster(sn_input);
      std::optional<std::map<std::int64_t, LickTimes>> licks;
      if (sn_licks) licks = parse_licks_json(read_text_file(*sn_licks));
      if (sn_neuron && *sn_neuron >= ds.neuron_count) throw UsageError("--neuron out of range");

      nlohmann::json root;
      root["method"] = sn_method;
      root["neurons"] = nlohmann::json::array();
      for (std::size_t n = 0; n < ds.neuron_count; ++n) {
        if (sn_neuron && n != *sn_neuron) continue;
        const NeuronTrials nt = neuron_trials(ds, n, licks ? &*licks : nullptr);
        ClassificationReport report;
        if (sn_method == "bayes") {
          report = bayes_rate_phase(nt.trials, ds.stimuli, sn_config);
        } else {
          Dataset one;
          one.domain = nt.trials.empty() ? ds.domain : nt.trials.front().train.domain();
          one.stimuli = ds.stimuli;
          one.neuron_count = 1;
          for (const auto& t : nt.trials)
            one.trials.push_back({TrainEnsemble({t.train}), ds.stimuli[t.stimulus], t.trial_id});
          if (one.trials.size() < 2) throw DataError("neuron " + std::to_string(n) + ": fewer than 2 usable trials");
          report = neuron_vp_1nn(one, 0, sn_q);
        }
        root["neurons"].push_back({{"neuron_index", n},
                                   {"excluded_trial_ids", nt.excluded_trial_ids},
                                   {"report", nlohmann::json::parse(report_to_json(report))}});
      }
      emit(sn_out, root.dump(2) + "\n");
    };
  });

  // mds
  std::string md_input;
  std::size_t md_dim = 2;
  std::optional<std::string> md_out;
  auto* md = app.add_subcommand("mds", "Classical MDS of a distance matrix");
  md->add_option("--input", md_input, "Matrix CSV")->required();
  md->add_option("--dim", md_dim, "Output dimension (1-3)");
  md->add_option("--out", md_out, "Coordinates CSV (stdout if omitted)");
  md->callback([&] {
    action = [&] {
      const auto lm = parse_matrix_csv(read_text_file(md_input));
      const auto result = classical_mds(lm.matrix, md_dim);
      emit(md_out, coords_to_csv(result.coords, lm.ids, lm.labels));
      std::cerr << "negative eigenvalue mass " << format_number(result.negative_mass) << "\n";
    };
  });

  // selfcheck
  bool sc_quick = false, sc_experiments = false;
  auto* sc = app.add_subcommand("selfcheck", "Run the oracle and property suite");
  sc->add_flag("--quick", sc_quick, "Smaller instance counts");
  sc->add_flag("--experiments", sc_experiments, "Also run the synthetic experiments");
  int selfcheck_failures = 0;
  sc->callback([&] {
    action = [&] {
      auto checks = verify::property_checks(sc_quick ? verify::CheckScale::quick() : verify::CheckScale::full());
      if (sc_experiments)
        for (auto& c : verify::experiment_checks()) checks.push_back(std::move(c));
      for (const auto& c : checks) {
        const auto r = c.run();
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n" << std::flush;
        if (!r.passed) ++selfcheck_failures;
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    action();
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return selfcheck_failures == 0 ? 0 : 1;
}
