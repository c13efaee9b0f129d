#pragma once

#include <cstdint>
#include <utility>

#include "spiketopo/core.hpp"

namespace spiketopo {

/// Generator constants for the five-neuron, two-stimulus network. Neurons 1,
/// 3 and 5 burst at the start of each trial and then fire sparsely, with the
/// same law under both stimuli. Neurons 2 and 4 follow one of two periodic
/// templates; under stimulus 1 they pick the same template, under stimulus 2
/// opposite ones. Each of them alone sees both templates equally often under
/// either stimulus.
struct NetworkAParams {
  Tick t_max = 999;
  std::size_t trials_per_stimulus = 100;

  Tick burst_end = 50;  // bursting ticks are [0, burst_end)
  double burst_rate = 0.2;
  double spontaneous_rate = 0.005;

  Tick template_first = 100;
  Tick template_step = 100;
  std::size_t template_spikes = 9;
  Tick variant_shift = 50;  // second template = first shifted by this much
  Tick spike_jitter = 3;    // each template spike moves uniformly in [-j, j]
  double template_drop = 0.25;
  double template_noise_rate = 0.003;
};

Dataset gen_network_a(std::uint64_t seed, const NetworkAParams& params = {});

/// The two template banks (variant 0 and 1) before jitter; identical for
/// both stimuli.
std::pair<std::vector<Tick>, std::vector<Tick>> network_a_templates(const NetworkAParams& params = {});

/// Fixed eight-neuron pair on {0..199}. In the first ensemble neuron n fires
/// in blocks 8-n and 9-n (mod 8), so consecutive neurons share a block and
/// the chain wraps around; at q = 2 the VP matrix is a discrete circle. The
/// second ensemble breaks the wrap-around with a fresh block, leaving a chain.
std::pair<TrainEnsemble, TrainEnsemble> gen_cascade_pair();

/// The cascade pair as a two-trial dataset with stimuli "cyclic" and "chain".
Dataset cascade_dataset();

/// Labels carry no information: every trial is drawn from the same law.
Dataset gen_chance_dataset(std::uint64_t seed, std::size_t stimuli_count, std::size_t trials_per_stimulus = 50);

}  // namespace spiketopo
