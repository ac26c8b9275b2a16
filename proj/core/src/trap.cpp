#include "ionsim/trap.hpp"

#include <cmath>
#include <stdexcept>

#include "ionsim/ode.hpp"

namespace ionsim::trap {

TrapConfig TrapConfig::from_physical(double charge_c, double v0, double mass_kg,
                                     double r0_m, double omega, double x0,
                                     double theta0) {
  if (mass_kg <= 0.0 || r0_m <= 0.0 || omega <= 0.0)
    throw std::invalid_argument("trap: mass, r0, omega must be positive");
  TrapConfig cfg;
  cfg.epsilon = charge_c * v0 / (omega * omega * mass_kg * r0_m * r0_m);
  cfg.omega = omega;
  cfg.x0 = x0;
  cfg.theta0 = theta0;
  cfg.validate();
  return cfg;
}

void TrapConfig::validate() const {
  if (!(omega > 0.0)) throw std::invalid_argument("trap: omega must be positive");
  if (!(epsilon >= 0.0 && epsilon < 0.2))
    throw std::invalid_argument("trap: epsilon outside the validity window [0, 0.2)");
}

double closed_form_position(const TrapConfig& cfg, double t) {
  cfg.validate();
  const double secular = cfg.x0 * std::cos(secular_frequency(cfg) * t + cfg.theta0);
  return secular * (1.0 + cfg.epsilon * std::cos(cfg.omega * t));
}

double secular_frequency(const TrapConfig& cfg) {
  cfg.validate();
  return cfg.epsilon * cfg.omega / std::sqrt(2.0);
}

Trajectory integrate_equation_of_motion(const TrapConfig& cfg, double x_init,
                                        double v_init, double t_end,
                                        double dt_max, std::size_t samples,
                                        double drive_phase) {
  cfg.validate();
  if (samples < 2) throw std::invalid_argument("trap: need at least 2 samples");
  const double micromotion_cap = 2.0 * M_PI / (50.0 * cfg.omega);
  if (!(dt_max > 0.0) || dt_max > micromotion_cap)
    throw std::invalid_argument("trap: dt_max must resolve the micromotion (<= T_drive/50)");

  ode::Rk45<2> solver;
  solver.rel_tol = 1e-9;
  solver.max_step = dt_max;
  auto deriv = [&](double t, const std::array<double, 2>& y, std::array<double, 2>& dydt) {
    dydt[0] = y[1];
    dydt[1] = -cfg.epsilon * cfg.omega * cfg.omega *
              std::cos(cfg.omega * t + drive_phase) * y[0];
  };

  Trajectory traj;
  traj.axis = "x";
  traj.times.reserve(samples);
  traj.positions.reserve(samples);
  std::array<double, 2> y{x_init, v_init};
  double t = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double target = t_end * static_cast<double>(i) / (samples - 1);
    solver.integrate(deriv, t, target, y);
    t = target;
    traj.times.push_back(t);
    traj.positions.push_back(y[0]);
  }
  return traj;
}

std::pair<Trajectory, Trajectory> trajectory_xy(const TrapConfig& cfg,
                                                double phase_diff, double t_end,
                                                std::size_t samples) {
  cfg.validate();
  if (samples < 2) throw std::invalid_argument("trap: need at least 2 samples");
  Trajectory x, y;
  x.axis = "x";
  y.axis = "y";
  TrapConfig cfg_y = cfg;
  cfg_y.theta0 += phase_diff;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = t_end * static_cast<double>(i) / (samples - 1);
    x.times.push_back(t);
    x.positions.push_back(closed_form_position(cfg, t));
    y.times.push_back(t);
    y.positions.push_back(closed_form_position(cfg_y, t));
  }
  return {std::move(x), std::move(y)};
}

} // namespace ionsim::trap
