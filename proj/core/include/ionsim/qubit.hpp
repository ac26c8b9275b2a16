#pragma once

#include <complex>
#include <vector>

namespace ionsim::qubit {

using cplx = std::complex<double>;

//! Two-level state as the amplitude pair (c0, c1); normalized.
struct QubitState {
  cplx c0;
  cplx c1;

  double norm2() const { return std::norm(c0) + std::norm(c1); }
  void check_normalized(double tol = 1e-9) const;

  static QubitState ground() { return {1.0, 0.0}; }
  static QubitState excited() { return {0.0, 1.0}; }
};

struct QubitParams {
  double omega_l; // angular Larmor frequency, rad/s
  double omega_r; // angular Rabi frequency, rad/s

  void validate() const;
  //! True when the counter-rotating terms are safely negligible.
  bool rwa_valid() const { return omega_r / omega_l <= 1e-2; }
};

//! Bloch-sphere angles; phi measured in (-pi, pi].
struct BlochVector {
  double theta; // [0, pi]
  double phi;
};

//! omega_R = e*E1*X01/hbar. The only place the physical triple appears;
//! a complex X01 is collapsed to |X01| (bound-state matrix elements are real).
double rabi_frequency(double e_field_v_per_m, double x01_m);

//! Closed-form resonant evolution, valid on the phi0 = -pi/2 slice:
//!   c0 = e^{-i(phi0 - wL t)/2} cos((theta0 + wR t)/2)
//!   c1 = e^{+i(phi0 - wL t)/2} sin((theta0 + wR t)/2)
QubitState evolve_rwa(const BlochVector& state0, const QubitParams& params, double t);

//! Full two-level integration without the RWA:
//!   i c0' = wR cos(w1 t) e^{-i wL t} c1,  i c1' = wR cos(w1 t) e^{+i wL t} c0.
QubitState evolve_full(const QubitState& state0, const QubitParams& params,
                       double drive_omega1, double t, double tol = 1e-10);

//! Sampled |c1|^2 trace of the full integration on a uniform grid
//! (single forward pass; avoids re-integrating from zero per sample).
std::vector<double> evolve_full_p1_trace(const QubitState& state0,
                                         const QubitParams& params,
                                         double drive_omega1, double t_end,
                                         std::size_t samples, double tol = 1e-10);

//! Free evolution: relative phase of c1 vs c0 advances by -wL*t.
QubitState larmor_precess(const QubitState& state0, double omega_l, double t);

BlochVector bloch_coordinates(const QubitState& state);

} // namespace ionsim::qubit
