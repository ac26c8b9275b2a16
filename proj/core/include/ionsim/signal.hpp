#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace ionsim::signal {

struct SampledSignal {
  double sample_rate; // Hz
  std::vector<double> samples;

  double duration() const { return samples.size() / sample_rate; }
};

enum class EnvelopeKind { constant, gaussian, table };

struct MixConfig {
  double omega_awg; // rad/s
  double omega_1;   // rad/s
  double phi;       // rad
  EnvelopeKind envelope = EnvelopeKind::constant;
  std::vector<double> envelope_table; // used when envelope == table

  void validate() const;
  //! Envelope value s(t) for a record of the given duration.
  double envelope_at(double t, double duration) const;
};

//! AWG outputs:
//!   I(t) = -2 s(t) cos(phi) sin(w_awg t),  Q(t) = 2 s(t) sin(phi) sin(w_awg t).
std::pair<SampledSignal, SampledSignal> generate_iq(const MixConfig& cfg,
                                                    double duration,
                                                    double sample_rate);

//! I-Q mixer with LO at w1 + w_awg, Q branch on the LO shifted by -pi/2:
//!   Vg = I cos((w1+w_awg)t) + Q cos((w1+w_awg)t - pi/2).
SampledSignal upconvert_mix(const SampledSignal& i, const SampledSignal& q,
                            const MixConfig& cfg);

//! Brick-wall FFT filter: bins strictly above cutoff_hz zeroed, inverse
//! transformed back. Zero-delay by construction.
SampledSignal lowpass(const SampledSignal& sig, double cutoff_hz);

struct EnvelopeCheck {
  double max_abs_error;  // vs s(t) sin(w1 t + phi), interior samples
  double peak_amplitude;
  double recovered_phi;  // least-squares quadrature fit
};

//! Runs generate_iq -> upconvert_mix -> lowpass and compares against the
//! target s(t) sin(w1 t + phi); a 5% guard band per edge is excluded.
EnvelopeCheck verify_envelope(const MixConfig& cfg, double duration,
                              double sample_rate);

//! One-sided amplitude spectrum (|X_k| * 2/N), bin k at k/duration Hz.
std::vector<double> amplitude_spectrum(const SampledSignal& sig);

} // namespace ionsim::signal
