#include "spiketopo/synth.hpp"

#include <algorithm>
#include <array>

#include "spiketopo/rng.hpp"

namespace spiketopo {
namespace {

void add_poisson_like(Rng& rng, std::vector<Tick>& out, Tick from, Tick to, double rate) {
  for (Tick t = from; t < to; ++t)
    if (rng.bernoulli(rate)) out.push_back(t);
}

std::vector<Tick> jittered(Rng& rng, const std::vector<Tick>& base, Tick jitter, Tick t_max) {
  std::vector<Tick> out;
  out.reserve(base.size());
  for (Tick t : base) out.push_back(std::clamp<Tick>(t + rng.between(-jitter, jitter), 0, t_max));
  return out;
}

// One neuron's copy of a trial template: independent drop-outs plus sparse
// background spikes.
SpikeTrain perturbed(Rng& rng, const std::vector<Tick>& pattern, const NetworkAParams& p, TimeDomain domain) {
  std::vector<Tick> times;
  for (Tick t : pattern)
    if (!rng.bernoulli(p.template_drop)) times.push_back(t);
  add_poisson_like(rng, times, 0, p.t_max + 1, p.template_noise_rate);
  return SpikeTrain::from_unsorted(std::move(times), domain);
}

SpikeTrain burst_neuron(Rng& rng, const NetworkAParams& p, TimeDomain domain) {
  std::vector<Tick> times;
  add_poisson_like(rng, times, 0, p.burst_end, p.burst_rate);
  add_poisson_like(rng, times, p.burst_end, p.t_max + 1, p.spontaneous_rate);
  return SpikeTrain(std::move(times), domain);
}

std::vector<Tick> block(Tick index) {
  const Tick start = 10 + 20 * index;
  return {start, start + 1, start + 2, start + 3, start + 4};
}

TrainEnsemble cascade_from_blocks(const std::array<std::array<Tick, 2>, 8>& blocks_per_neuron) {
  const TimeDomain domain(199);
  std::vector<SpikeTrain> trains;
  for (const auto& [first, second] : blocks_per_neuron) {
    auto times = block(first);
    const auto tail = block(second);
    times.insert(times.end(), tail.begin(), tail.end());
    trains.push_back(SpikeTrain::from_unsorted(std::move(times), domain));
  }
  return TrainEnsemble(std::move(trains));
}

}  // namespace

std::pair<std::vector<Tick>, std::vector<Tick>> network_a_templates(const NetworkAParams& p) {
  std::vector<Tick> first, second;
  for (std::size_t i = 0; i < p.template_spikes; ++i) {
    const Tick t = p.template_first + static_cast<Tick>(i) * p.template_step;
    first.push_back(t);
    second.push_back(t + p.variant_shift);
  }
  return {first, second};
}

Dataset gen_network_a(std::uint64_t seed, const NetworkAParams& p) {
  Rng rng(seed);
  const TimeDomain domain(p.t_max);
  const auto [variant0, variant1] = network_a_templates(p);

  Dataset ds;
  ds.domain = domain;
  ds.stimuli = {"stimulus_1", "stimulus_2"};
  ds.neuron_count = 5;
  std::int64_t next_id = 0;
  for (std::size_t s = 0; s < ds.stimuli.size(); ++s) {
    for (std::size_t trial = 0; trial < p.trials_per_stimulus; ++trial) {
      // Each trial realizes both templates once; neurons 2 and 4 share a
      // realization exactly when they use the same variant.
      const std::array<std::vector<Tick>, 2> realized{jittered(rng, variant0, p.spike_jitter, p.t_max),
                                                      jittered(rng, variant1, p.spike_jitter, p.t_max)};
      const std::size_t v2 = rng.bernoulli(0.5) ? 1 : 0;
      const std::size_t v4 = s == 0 ? v2 : 1 - v2;

      std::vector<SpikeTrain> trains;
      trains.push_back(burst_neuron(rng, p, domain));
      trains.push_back(perturbed(rng, realized[v2], p, domain));
      trains.push_back(burst_neuron(rng, p, domain));
      trains.push_back(perturbed(rng, realized[v4], p, domain));
      trains.push_back(burst_neuron(rng, p, domain));
      ds.trials.push_back({TrainEnsemble(std::move(trains)), ds.stimuli[s], next_id++});
    }
  }
  return ds;
}

std::pair<TrainEnsemble, TrainEnsemble> gen_cascade_pair() {
  // Neuron n (1-based, listed in order) fires in blocks {8-n, 9-n mod 8}:
  // neuron 8 leads, neuron 1 closes the loop by sharing block 0 with neuron 8.
  const std::array<std::array<Tick, 2>, 8> cyclic{{{7, 0}, {6, 7}, {5, 6}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {0, 1}}};
  // Same counts, but neuron 1 takes a fresh block 8 instead of block 0.
  const std::array<std::array<Tick, 2>, 8> chain{{{7, 8}, {6, 7}, {5, 6}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {0, 1}}};
  return {cascade_from_blocks(cyclic), cascade_from_blocks(chain)};
}

Dataset cascade_dataset() {
  auto [cyclic, chain] = gen_cascade_pair();
  Dataset ds;
  ds.domain = cyclic.domain();
  ds.stimuli = {"cyclic", "chain"};
  ds.neuron_count = cyclic.size();
  ds.trials.push_back({std::move(cyclic), "cyclic", 0});
  ds.trials.push_back({std::move(chain), "chain", 1});
  return ds;
}

Dataset gen_chance_dataset(std::uint64_t seed, std::size_t stimuli_count, std::size_t trials_per_stimulus) {
  if (stimuli_count < 2) throw std::invalid_argument("gen_chance_dataset: need at least two stimuli");
  Rng rng(seed);
  const TimeDomain domain(999);
  Dataset ds;
  ds.domain = domain;
  ds.neuron_count = 5;
  for (std::size_t s = 0; s < stimuli_count; ++s) ds.stimuli.push_back("stimulus_" + std::to_string(s + 1));
  std::int64_t next_id = 0;
  for (std::size_t s = 0; s < stimuli_count; ++s) {
    for (std::size_t trial = 0; trial < trials_per_stimulus; ++trial) {
      std::vector<SpikeTrain> trains;
      for (std::size_t n = 0; n < ds.neuron_count; ++n) {
        std::vector<Tick> times;
        add_poisson_like(rng, times, 0, domain.t_max + 1, 0.01);
        trains.emplace_back(std::move(times), domain);
      }
      ds.trials.push_back({TrainEnsemble(std::move(trains)), ds.stimuli[s], next_id++});
    }
  }
  return ds;
}

}  // namespace spiketopo
