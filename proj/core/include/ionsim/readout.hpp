#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ionsim::readout {

//! Fluorescence model. Detection efficiency is folded into the means;
//! leak_per_scatter is the per-event probability of off-resonant excitation
//! that exits the cycling transition.
struct ReadoutModel {
  double bright_mean = 10.0;
  double dark_mean = 0.1;
  double leak_per_scatter = 0.0;

  void validate() const;
};

struct PhotonHistogram {
  std::map<unsigned, std::uint64_t> counts; // photon number -> occurrences
  std::uint64_t shots = 0;

  double mean() const;
  double variance() const;
  unsigned max_count() const;
};

struct ThresholdResult {
  unsigned threshold;       // classify |1> iff n >= threshold
  double empirical_error;   // P(n >= tau | 0) + P(n < tau | 1) at the optimum
  bool degenerate = false;  // identical histograms
};

struct FidelityResult {
  double f0, f1;             // P(classify 0 | prep 0), P(classify 1 | prep 1)
  double stderr0, stderr1;   // binomial standard errors
};

struct InitModel {
  double p_to_ground = 1.0 / 3.0; // branching to |0> per cycle
  double p_dark_state = 0.0;      // branching to the long-lived D state
  bool repump = true;             // instantaneous 935 nm repump of the D state

  void validate() const;
};

PhotonHistogram simulate_readout(int true_state, const ReadoutModel& model,
                                 std::uint64_t shots, std::uint64_t seed);

ThresholdResult calibrate_threshold(const PhotonHistogram& hist0,
                                    const PhotonHistogram& hist1);

FidelityResult readout_fidelity(const ReadoutModel& model, unsigned threshold,
                                std::uint64_t shots, std::uint64_t seed);

//! Per-cycle probability of remaining outside |0>, cycle index 1..max_cycles.
std::vector<double> simulate_initialization(int start, const InitModel& model,
                                            unsigned max_cycles, std::uint64_t seed,
                                            std::uint64_t shots);

//! (12.64 GHz + 2.11 GHz) / 813 THz, about 1.8e-5.
double detuning_ratio();

} // namespace ionsim::readout
