#include "ionsim/qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "ionsim/constants.hpp"
#include "ionsim/ode.hpp"

namespace ionsim::qubit {

namespace {

constexpr double kPhiSlice = -M_PI / 2.0;

double wrap_phase(double phi) {
  phi = std::fmod(phi + M_PI, 2.0 * M_PI);
  if (phi <= 0.0) phi += 2.0 * M_PI;
  return phi - M_PI; // (-pi, pi]
}

ode::Rk45<4> make_solver(const QubitParams& params, double drive_omega1, double tol) {
  ode::Rk45<4> solver;
  solver.rel_tol = tol;
  solver.abs_tol = tol * 1e-2;
  // Resolve the counter-rotating terms at wL + w1.
  solver.max_step = 2.0 * M_PI / (20.0 * (params.omega_l + drive_omega1));
  return solver;
}

ode::Rk45<4>::Deriv make_deriv(const QubitParams& params, double drive_omega1) {
  const double wr = params.omega_r;
  const double wl = params.omega_l;
  return [wr, wl, drive_omega1](double t, const std::array<double, 4>& y,
                                std::array<double, 4>& dydt) {
    const cplx c0(y[0], y[1]);
    const cplx c1(y[2], y[3]);
    const double drive = wr * std::cos(drive_omega1 * t);
    const cplx dc0 = cplx(0.0, -1.0) * drive * std::polar(1.0, -wl * t) * c1;
    const cplx dc1 = cplx(0.0, -1.0) * drive * std::polar(1.0, +wl * t) * c0;
    dydt = {dc0.real(), dc0.imag(), dc1.real(), dc1.imag()};
  };
}

} // namespace

void QubitState::check_normalized(double tol) const {
  if (std::abs(norm2() - 1.0) > tol)
    throw std::invalid_argument("qubit state is not normalized");
}

void QubitParams::validate() const {
  if (!(omega_l > 0.0)) throw std::invalid_argument("qubit: omega_l must be positive");
  if (omega_r < 0.0) throw std::invalid_argument("qubit: omega_r must be >= 0");
}

double rabi_frequency(double e_field_v_per_m, double x01_m) {
  if (e_field_v_per_m < 0.0) throw std::invalid_argument("rabi_frequency: E field must be >= 0");
  return constants::elementary_charge * e_field_v_per_m * std::abs(x01_m) /
         constants::hbar;
}

QubitState evolve_rwa(const BlochVector& state0, const QubitParams& params, double t) {
  params.validate();
  if (std::abs(wrap_phase(state0.phi) - kPhiSlice) > 1e-12)
    throw std::invalid_argument(
        "evolve_rwa: closed form requires phi0 = -pi/2; pre-rotate the frame first");
  const double half_polar = (state0.theta + params.omega_r * t) / 2.0;
  const double half_azim = (state0.phi - params.omega_l * t) / 2.0;
  return {std::cos(half_polar) * std::polar(1.0, -half_azim),
          std::sin(half_polar) * std::polar(1.0, +half_azim)};
}

QubitState evolve_full(const QubitState& state0, const QubitParams& params,
                       double drive_omega1, double t, double tol) {
  params.validate();
  state0.check_normalized();
  if (tol > 1e-8) throw std::invalid_argument("evolve_full: tol must be <= 1e-8");
  if (t < 0.0) throw std::invalid_argument("evolve_full: t must be >= 0");
  if (params.omega_r == 0.0 || t == 0.0) return state0;

  auto solver = make_solver(params, drive_omega1, tol);
  std::array<double, 4> y{state0.c0.real(), state0.c0.imag(), state0.c1.real(),
                          state0.c1.imag()};
  solver.integrate(make_deriv(params, drive_omega1), 0.0, t, y);
  QubitState out{{y[0], y[1]}, {y[2], y[3]}};
  if (std::abs(out.norm2() - 1.0) > 10.0 * tol)
    throw std::runtime_error("evolve_full: norm drift beyond 10*tol");
  return out;
}

std::vector<double> evolve_full_p1_trace(const QubitState& state0,
                                         const QubitParams& params,
                                         double drive_omega1, double t_end,
                                         std::size_t samples, double tol) {
  params.validate();
  state0.check_normalized();
  if (samples < 2) throw std::invalid_argument("evolve_full_p1_trace: need >= 2 samples");

  auto solver = make_solver(params, drive_omega1, tol);
  auto deriv = make_deriv(params, drive_omega1);
  std::array<double, 4> y{state0.c0.real(), state0.c0.imag(), state0.c1.real(),
                          state0.c1.imag()};
  std::vector<double> p1;
  p1.reserve(samples);
  double t = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double target = t_end * static_cast<double>(i) / (samples - 1);
    if (params.omega_r != 0.0) solver.integrate(deriv, t, target, y);
    t = target;
    p1.push_back(y[2] * y[2] + y[3] * y[3]);
  }
  return p1;
}

QubitState larmor_precess(const QubitState& state0, double omega_l, double t) {
  const double half = omega_l * t / 2.0;
  return {state0.c0 * std::polar(1.0, +half), state0.c1 * std::polar(1.0, -half)};
}

BlochVector bloch_coordinates(const QubitState& state) {
  state.check_normalized();
  BlochVector v;
  v.theta = 2.0 * std::atan2(std::abs(state.c1), std::abs(state.c0));
  v.phi = wrap_phase(std::arg(state.c1) - std::arg(state.c0));
  return v;
}

} // namespace ionsim::qubit
