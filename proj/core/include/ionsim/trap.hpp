#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ionsim::trap {

//! Linear Paul trap drive. The physical parameters (charge, V0, M, r0)
//! enter the dynamics only through the dimensionless group
//! epsilon = qV0/(Omega^2 M r0^2), so that is what we store.
struct TrapConfig {
  double epsilon;   // stability parameter, valid in (0, 0.2)
  double omega;     // angular drive frequency, rad/s
  double x0;        // secular amplitude, m
  double theta0 = 0.0; // initial secular phase, rad

  //! For users holding lab numbers.
  static TrapConfig from_physical(double charge_c, double v0, double mass_kg,
                                  double r0_m, double omega, double x0,
                                  double theta0 = 0.0);

  void validate() const;
};

struct Trajectory {
  std::vector<double> times;     // s, strictly increasing
  std::vector<double> positions; // m
  std::string axis;
};

//! x(t) = x0 cos(eps*Omega*t/sqrt(2) + theta0) * (1 + eps*cos(Omega*t)).
double closed_form_position(const TrapConfig& cfg, double t);

//! Slow-envelope angular frequency eps*Omega/sqrt(2).
double secular_frequency(const TrapConfig& cfg);

//! Numerical oracle: integrates x'' = -eps*Omega^2*cos(Omega*t + drive_phase)*x
//! with adaptive RK45 at 1e-9 relative tolerance, sampled on a uniform grid.
Trajectory integrate_equation_of_motion(const TrapConfig& cfg, double x_init,
                                        double v_init, double t_end,
                                        double dt_max, std::size_t samples = 2000,
                                        double drive_phase = 0.0);

//! Closed-form x and y with a secular phase offset between them.
std::pair<Trajectory, Trajectory> trajectory_xy(const TrapConfig& cfg,
                                                double phase_diff, double t_end,
                                                std::size_t samples);

} // namespace ionsim::trap
