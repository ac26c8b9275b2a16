#include "ionsim/cooling.hpp"

#include <cmath>
#include <stdexcept>

#include "ionsim/constants.hpp"
#include "ionsim/rng.hpp"

namespace ionsim::cooling {

double photon_momentum(double wavelength_m) {
  if (!(wavelength_m > 0.0))
    throw std::invalid_argument("photon_momentum: wavelength must be positive");
  return constants::planck_h / wavelength_m;
}

DopplerStepResult doppler_step_with_emission(const IonMotion1D& ion,
                                             const DopplerBeam& beam,
                                             double transition_omega,
                                             int emit_direction) {
  if (ion.internal != Internal::ground)
    throw std::invalid_argument("doppler_step: ion must start in the ground state");
  if (ion.mass <= 0.0) throw std::invalid_argument("doppler_step: mass must be positive");
  if (beam.direction != 1 && beam.direction != -1)
    throw std::invalid_argument("doppler_step: beam direction must be +1 or -1");
  if (emit_direction != 1 && emit_direction != -1)
    throw std::invalid_argument("doppler_step: emit direction must be +1 or -1");

  DopplerStepResult res;
  res.ion = ion;

  // First-order Doppler: an ion moving against the photon sees a blue shift.
  const double v = ion.momentum / ion.mass;
  const double laser_omega = transition_omega + beam.detuning;
  const double perceived =
      laser_omega * (1.0 - beam.direction * v / constants::speed_of_light);
  if (std::abs(perceived - transition_omega) > beam.acceptance_halfwidth)
    return res; // no absorption, identity on momentum, ledger all zero

  res.absorbed = true;
  // Absorption kick, then recoil from spontaneous emission.
  const double ion_delta =
      beam.direction * beam.photon_momentum - emit_direction * beam.photon_momentum;
  res.ion.momentum += ion_delta;
  res.ledger.chain_delta = ion_delta;
  res.ledger.photon_delta = -ion_delta; // absorbed beam photon gone, emitted photon leaves
  return res;
}

DopplerStepResult doppler_step(const IonMotion1D& ion, const DopplerBeam& beam,
                               double transition_omega, std::uint64_t seed) {
  Rng rng(seed);
  return doppler_step_with_emission(ion, beam, transition_omega, rng.sign());
}

std::vector<double> doppler_cool(const std::vector<double>& initial_momenta,
                                 double mass, const DopplerBeam& beam_a,
                                 const DopplerBeam& beam_b, double transition_omega,
                                 unsigned steps, std::uint64_t seed) {
  if (beam_a.direction != -beam_b.direction)
    throw std::invalid_argument("doppler_cool: beams must counter-propagate");
  if (beam_a.detuning != beam_b.detuning ||
      beam_a.acceptance_halfwidth != beam_b.acceptance_halfwidth)
    throw std::invalid_argument("doppler_cool: beams must share detuning and acceptance");

  std::vector<IonMotion1D> ions;
  ions.reserve(initial_momenta.size());
  for (double p : initial_momenta) ions.push_back({p, mass, Internal::ground});

  auto mean_ke = [&]() {
    double sum = 0.0;
    for (const auto& ion : ions) sum += ion.momentum * ion.momentum / (2.0 * mass);
    return ions.empty() ? 0.0 : sum / static_cast<double>(ions.size());
  };

  std::vector<double> trace;
  trace.reserve(steps + 1);
  trace.push_back(mean_ke());
  for (unsigned step = 0; step < steps; ++step) {
    const DopplerBeam& beam = (step % 2 == 0) ? beam_a : beam_b;
    for (std::size_t i = 0; i < ions.size(); ++i) {
      Rng rng(seed, static_cast<std::uint64_t>(step) * ions.size() + i);
      ions[i] = doppler_step_with_emission(ions[i], beam, transition_omega, rng.sign()).ion;
    }
    trace.push_back(mean_ke());
  }
  return trace;
}

SidebandTransition sideband_pulse(const SidebandState& state, double omega_l,
                                  double omega_chain) {
  SidebandTransition res;
  res.state = state;
  if (state.internal == Internal::ground && state.n_phonon >= 1) {
    res.state.internal = Internal::excited;
    res.state.n_phonon = state.n_phonon - 1;
    res.ledger.photon_delta = -constants::hbar * (omega_l - omega_chain);
    res.ledger.chain_delta = -constants::hbar * omega_chain;
    res.ledger.internal_delta = constants::hbar * omega_l;
  }
  // |g,0> has no phonon to borrow; |e,N> is off-resonant: both identity.
  return res;
}

SidebandTransition sideband_decay(const SidebandState& state, double omega_l) {
  if (state.internal != Internal::excited)
    throw std::invalid_argument("sideband_decay: ion is not excited");
  SidebandTransition res;
  res.state = state;
  res.state.internal = Internal::ground;
  res.ledger.photon_delta = constants::hbar * omega_l;
  res.ledger.internal_delta = -constants::hbar * omega_l;
  return res;
}

std::vector<SidebandState> cool_to_ground(unsigned n0, double omega_l,
                                          double omega_chain) {
  std::vector<SidebandState> trajectory;
  SidebandState state{Internal::ground, n0};
  trajectory.push_back(state);
  while (state.n_phonon > 0) {
    state = sideband_pulse(state, omega_l, omega_chain).state;
    trajectory.push_back(state);
    state = sideband_decay(state, omega_l).state;
    trajectory.push_back(state);
  }
  return trajectory;
}

} // namespace ionsim::cooling
