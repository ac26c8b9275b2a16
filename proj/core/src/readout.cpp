#include "ionsim/readout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ionsim/rng.hpp"

namespace ionsim::readout {

void ReadoutModel::validate() const {
  if (!(bright_mean > dark_mean) || dark_mean < 0.0)
    throw std::invalid_argument("readout: need bright_mean > dark_mean >= 0");
  if (leak_per_scatter < 0.0 || leak_per_scatter >= 1.0)
    throw std::invalid_argument("readout: leak_per_scatter must be in [0, 1)");
}

void InitModel::validate() const {
  if (p_to_ground < 0.0 || p_dark_state < 0.0 || p_to_ground + p_dark_state > 1.0)
    throw std::invalid_argument("init: branching probabilities must be >= 0 and sum <= 1");
}

double PhotonHistogram::mean() const {
  if (shots == 0) return 0.0;
  double sum = 0.0;
  for (const auto& [n, c] : counts) sum += static_cast<double>(n) * static_cast<double>(c);
  return sum / static_cast<double>(shots);
}

double PhotonHistogram::variance() const {
  if (shots == 0) return 0.0;
  const double m = mean();
  double sum = 0.0;
  for (const auto& [n, c] : counts) {
    const double d = static_cast<double>(n) - m;
    sum += d * d * static_cast<double>(c);
  }
  return sum / static_cast<double>(shots);
}

unsigned PhotonHistogram::max_count() const {
  return counts.empty() ? 0 : counts.rbegin()->first;
}

namespace {

//! One measurement: Poisson background for |0>, leakage-truncated Poisson
//! scatter count for |1>. Truncation: each of the K would-be scattering
//! events may leak first; only events before the first leak are counted.
unsigned draw_count(int true_state, const ReadoutModel& model, Rng& rng) {
  if (true_state == 0) return rng.poisson(model.dark_mean);
  const unsigned k = rng.poisson(model.bright_mean);
  if (model.leak_per_scatter == 0.0) return k;
  for (unsigned i = 0; i < k; ++i)
    if (rng.bernoulli(model.leak_per_scatter)) return i;
  return k;
}

} // namespace

PhotonHistogram simulate_readout(int true_state, const ReadoutModel& model,
                                 std::uint64_t shots, std::uint64_t seed) {
  model.validate();
  if (true_state != 0 && true_state != 1)
    throw std::invalid_argument("simulate_readout: state must be 0 or 1");
  if (shots < 1) throw std::invalid_argument("simulate_readout: shots must be >= 1");

  PhotonHistogram hist;
  hist.shots = shots;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    Rng rng(seed, shot); // independent substream per shot
    ++hist.counts[draw_count(true_state, model, rng)];
  }
  return hist;
}

ThresholdResult calibrate_threshold(const PhotonHistogram& hist0,
                                    const PhotonHistogram& hist1) {
  if (hist0.shots == 0 || hist1.shots == 0)
    throw std::invalid_argument("calibrate_threshold: empty histogram");

  const unsigned tau_max = std::max(hist0.max_count(), hist1.max_count()) + 1;
  ThresholdResult best{0, 2.0, false};
  for (unsigned tau = 0; tau <= tau_max; ++tau) {
    std::uint64_t n0_above = 0; // shots with n >= tau given |0>
    for (const auto& [n, c] : hist0.counts)
      if (n >= tau) n0_above += c;
    std::uint64_t n1_below = 0; // shots with n < tau given |1>
    for (const auto& [n, c] : hist1.counts)
      if (n < tau) n1_below += c;
    const double err = static_cast<double>(n0_above) / static_cast<double>(hist0.shots) +
                       static_cast<double>(n1_below) / static_cast<double>(hist1.shots);
    if (err < best.empirical_error) { // strict: ties break to the smaller tau
      best.threshold = tau;
      best.empirical_error = err;
    }
  }
  best.degenerate = hist0.counts == hist1.counts;
  return best;
}

FidelityResult readout_fidelity(const ReadoutModel& model, unsigned threshold,
                                std::uint64_t shots, std::uint64_t seed) {
  model.validate();
  if (shots < 1) throw std::invalid_argument("readout_fidelity: shots must be >= 1");

  std::uint64_t ok0 = 0, ok1 = 0;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    // Common random numbers across prepared states: paired-seed comparisons
    // see the same substream.
    Rng rng0(seed, 2 * shot);
    Rng rng1(seed, 2 * shot + 1);
    if (draw_count(0, model, rng0) < threshold) ++ok0;
    if (draw_count(1, model, rng1) >= threshold) ++ok1;
  }
  FidelityResult r;
  const double n = static_cast<double>(shots);
  r.f0 = static_cast<double>(ok0) / n;
  r.f1 = static_cast<double>(ok1) / n;
  r.stderr0 = std::sqrt(r.f0 * (1.0 - r.f0) / n);
  r.stderr1 = std::sqrt(r.f1 * (1.0 - r.f1) / n);
  return r;
}

std::vector<double> simulate_initialization(int start, const InitModel& model,
                                            unsigned max_cycles, std::uint64_t seed,
                                            std::uint64_t shots) {
  model.validate();
  if (start != 0 && start != 1)
    throw std::invalid_argument("simulate_initialization: start must be 0 or 1");
  if (max_cycles < 1) throw std::invalid_argument("simulate_initialization: max_cycles >= 1");
  if (shots < 1) throw std::invalid_argument("simulate_initialization: shots >= 1");

  std::vector<std::uint64_t> outside(max_cycles, 0);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    Rng rng(seed, shot);
    // States: 0 = |0> (absorbing), 1 = |1>, 2 = trapped in the D dark state.
    int state = start;
    for (unsigned cycle = 0; cycle < max_cycles; ++cycle) {
      if (state == 1) {
        const double u = rng.uniform();
        if (u < model.p_to_ground) {
          state = 0;
        } else if (u < model.p_to_ground + model.p_dark_state) {
          state = model.repump ? 0 : 2;
        } // else decays back to |1>
      }
      if (state != 0) ++outside[cycle];
    }
  }
  std::vector<double> residual(max_cycles);
  for (unsigned k = 0; k < max_cycles; ++k)
    residual[k] = static_cast<double>(outside[k]) / static_cast<double>(shots);
  return residual;
}

double detuning_ratio() { return (12.64e9 + 2.11e9) / 813e12; }

} // namespace ionsim::readout
