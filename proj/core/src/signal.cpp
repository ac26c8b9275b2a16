#include "ionsim/signal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <fftw3.h>

namespace ionsim::signal {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void check_nyquist(double sample_rate, double highest_omega) {
  if (sample_rate <= 2.0 * highest_omega / kTwoPi)
    throw std::invalid_argument("signal: sample rate violates the Nyquist guard");
}

std::vector<std::complex<double>> fft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(
      static_cast<int>(n), const_cast<double*>(x.data()),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<double> ifft(std::vector<std::complex<double>> spectrum, std::size_t n) {
  std::vector<double> out(n);
  fftw_plan plan = fftw_plan_dft_c2r_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(spectrum.data()),
      out.data(), FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (double& v : out) v /= static_cast<double>(n);
  return out;
}

} // namespace

void MixConfig::validate() const {
  if (!(omega_1 > omega_awg && omega_awg > 0.0))
    throw std::invalid_argument("mix: need omega_1 > omega_awg > 0");
  if (envelope == EnvelopeKind::table && envelope_table.empty())
    throw std::invalid_argument("mix: table envelope requires samples");
}

double MixConfig::envelope_at(double t, double duration) const {
  switch (envelope) {
    case EnvelopeKind::constant:
      return 1.0;
    case EnvelopeKind::gaussian: {
      const double center = duration / 2.0;
      const double sigma = duration / 8.0;
      const double d = (t - center) / sigma;
      return std::exp(-0.5 * d * d);
    }
    case EnvelopeKind::table: {
      const double pos = t / duration * (envelope_table.size() - 1);
      const std::size_t i0 = std::min(static_cast<std::size_t>(pos),
                                      envelope_table.size() - 2);
      const double frac = pos - static_cast<double>(i0);
      return envelope_table[i0] * (1.0 - frac) + envelope_table[i0 + 1] * frac;
    }
  }
  return 1.0;
}

std::pair<SampledSignal, SampledSignal> generate_iq(const MixConfig& cfg,
                                                    double duration,
                                                    double sample_rate) {
  cfg.validate();
  check_nyquist(sample_rate, cfg.omega_awg);
  if (!(duration > 0.0)) throw std::invalid_argument("signal: duration must be positive");

  const auto n = static_cast<std::size_t>(std::llround(duration * sample_rate));
  SampledSignal i_sig{sample_rate, std::vector<double>(n)};
  SampledSignal q_sig{sample_rate, std::vector<double>(n)};
  const double ci = -2.0 * std::cos(cfg.phi);
  const double cq = 2.0 * std::sin(cfg.phi);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / sample_rate;
    const double s = cfg.envelope_at(t, duration) * std::sin(cfg.omega_awg * t);
    i_sig.samples[k] = ci * s;
    q_sig.samples[k] = cq * s;
  }
  return {std::move(i_sig), std::move(q_sig)};
}

SampledSignal upconvert_mix(const SampledSignal& i, const SampledSignal& q,
                            const MixConfig& cfg) {
  cfg.validate();
  if (i.samples.size() != q.samples.size() || i.sample_rate != q.sample_rate)
    throw std::invalid_argument("mix: I and Q grids must match");
  check_nyquist(i.sample_rate, cfg.omega_1 + 2.0 * cfg.omega_awg);

  const double lo_omega = cfg.omega_1 + cfg.omega_awg;
  SampledSignal out{i.sample_rate, std::vector<double>(i.samples.size())};
  for (std::size_t k = 0; k < out.samples.size(); ++k) {
    const double t = static_cast<double>(k) / i.sample_rate;
    out.samples[k] = i.samples[k] * std::cos(lo_omega * t) +
                     q.samples[k] * std::cos(lo_omega * t - M_PI / 2.0);
  }
  return out;
}

SampledSignal lowpass(const SampledSignal& sig, double cutoff_hz) {
  if (sig.samples.empty()) throw std::invalid_argument("lowpass: empty signal");
  if (!(cutoff_hz > 0.0 && cutoff_hz < sig.sample_rate / 2.0))
    throw std::invalid_argument("lowpass: cutoff outside (0, nyquist)");

  auto spectrum = fft(sig.samples);
  const double bin_hz = sig.sample_rate / static_cast<double>(sig.samples.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    if (static_cast<double>(k) * bin_hz > cutoff_hz) spectrum[k] = 0.0;
  return {sig.sample_rate, ifft(std::move(spectrum), sig.samples.size())};
}

EnvelopeCheck verify_envelope(const MixConfig& cfg, double duration,
                              double sample_rate) {
  const auto [i_sig, q_sig] = generate_iq(cfg, duration, sample_rate);
  const auto mixed = upconvert_mix(i_sig, q_sig, cfg);
  // Cutoff between the wanted w1 line and the w1 + 2 w_awg image.
  const double cutoff = (cfg.omega_1 + cfg.omega_awg) / kTwoPi;
  const auto filtered = lowpass(mixed, cutoff);

  const std::size_t n = filtered.samples.size();
  const std::size_t guard = n / 20; // 5% per edge
  EnvelopeCheck result{0.0, 0.0, 0.0};
  double ss = 0.0, sc = 0.0; // least-squares quadrature accumulators
  double css = 0.0, ccc = 0.0, csc = 0.0;
  for (std::size_t k = guard; k + guard < n; ++k) {
    const double t = static_cast<double>(k) / sample_rate;
    const double env = cfg.envelope_at(t, duration);
    const double target = env * std::sin(cfg.omega_1 * t + cfg.phi);
    result.max_abs_error = std::max(result.max_abs_error,
                                    std::abs(filtered.samples[k] - target));
    result.peak_amplitude = std::max(result.peak_amplitude, std::abs(target));
    const double bs = env * std::sin(cfg.omega_1 * t);
    const double bc = env * std::cos(cfg.omega_1 * t);
    ss += filtered.samples[k] * bs;
    sc += filtered.samples[k] * bc;
    css += bs * bs;
    ccc += bc * bc;
    csc += bs * bc;
  }
  // Solve the 2x2 normal equations for a*sin + b*cos, then phi = atan2(b, a).
  const double det = css * ccc - csc * csc;
  const double a = (ss * ccc - sc * csc) / det;
  const double b = (sc * css - ss * csc) / det;
  result.recovered_phi = std::atan2(b, a);
  return result;
}

std::vector<double> amplitude_spectrum(const SampledSignal& sig) {
  const auto spectrum = fft(sig.samples);
  std::vector<double> amps(spectrum.size());
  const double scale = 2.0 / static_cast<double>(sig.samples.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    amps[k] = std::abs(spectrum[k]) * scale;
  if (!amps.empty()) amps[0] *= 0.5; // DC is not doubled
  return amps;
}

} // namespace ionsim::signal
