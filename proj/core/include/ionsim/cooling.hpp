#pragma once

#include <cstdint>
#include <vector>

namespace ionsim::cooling {

enum class Internal { ground, excited };

struct IonMotion1D {
  double momentum; // kg m/s
  double mass;     // kg
  Internal internal = Internal::ground;
};

struct DopplerBeam {
  int direction;              // photon travel direction, +1 or -1
  double photon_momentum;     // h/lambda, kg m/s
  double detuning;            // rad/s, negative = red
  double acceptance_halfwidth; // rad/s, top-hat linewidth proxy
};

//! Conservation bookkeeping: the three deltas of each step sum to zero
//! (momentum for Doppler steps, energy for sideband steps).
struct Ledger {
  double photon_delta = 0.0;
  double chain_delta = 0.0;    // ion momentum (Doppler) or chain SHO energy (sideband)
  double internal_delta = 0.0; // internal-state energy (sideband only)

  double sum() const { return photon_delta + chain_delta + internal_delta; }
};

struct SidebandState {
  Internal internal = Internal::ground;
  unsigned n_phonon = 0;
};

struct DopplerStepResult {
  IonMotion1D ion;
  Ledger ledger;
  bool absorbed = false;
};

//! h / lambda.
double photon_momentum(double wavelength_m);

//! Deterministic absorb/emit kernel: absorption test from the first-order
//! Doppler-perceived frequency, emission recoil along emit_direction.
DopplerStepResult doppler_step_with_emission(const IonMotion1D& ion,
                                             const DopplerBeam& beam,
                                             double transition_omega,
                                             int emit_direction);

//! Stochastic step: emission direction drawn uniformly from {+1, -1}.
DopplerStepResult doppler_step(const IonMotion1D& ion, const DopplerBeam& beam,
                               double transition_omega, std::uint64_t seed);

//! Runs doppler_step over all ions, alternating the two counter-propagating
//! beams per step; returns the mean kinetic energy trace (step 0 = initial).
std::vector<double> doppler_cool(const std::vector<double>& initial_momenta,
                                 double mass, const DopplerBeam& beam_a,
                                 const DopplerBeam& beam_b, double transition_omega,
                                 unsigned steps, std::uint64_t seed);

struct SidebandTransition {
  SidebandState state;
  Ledger ledger;
};

//! Red-sideband pulse at omega_l - omega_chain: |g,N>=1> -> |e,N-1>,
//! |g,0> and |e,N> unchanged.
SidebandTransition sideband_pulse(const SidebandState& state, double omega_l,
                                  double omega_chain);

//! Spontaneous decay |e,N> -> |g,N> emitting hbar*omega_l.
SidebandTransition sideband_decay(const SidebandState& state, double omega_l);

//! Full ladder |g,n0> -> ... -> |g,0>; returns every visited state.
std::vector<SidebandState> cool_to_ground(unsigned n0, double omega_l,
                                          double omega_chain);

} // namespace ionsim::cooling
