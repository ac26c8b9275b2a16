#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <utility>

namespace ionsim::ode {

//! Adaptive Dormand-Prince RK45 on a fixed-size real state vector.
//! Steps from t0 to t1 with per-step relative error control; max_step
//! caps the step so fast drive terms stay resolved.
template <std::size_t N>
struct Rk45 {
  using State = std::array<double, N>;
  using Deriv = std::function<void(double t, const State& y, State& dydt)>;

  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  double max_step = std::numeric_limits<double>::infinity();

  void integrate(const Deriv& f, double t0, double t1, State& y) const {
    if (t1 < t0) throw std::invalid_argument("rk45: t1 < t0");
    if (t1 == t0) return;

    double h = std::min((t1 - t0) / 16.0, max_step);
    double t = t0;
    State k1, k2, k3, k4, k5, k6, k7, ytmp, y5, y4;
    f(t, y, k1);

    int steps = 0;
    const int max_steps = 200'000'000;
    while (t < t1) {
      if (++steps > max_steps) throw std::runtime_error("rk45: step budget exceeded");
      if (h < (t1 - t0) * 1e-15)
        throw std::runtime_error("rk45: step size underflow");
      if (t + h > t1) h = t1 - t;

      stage(f, t, y, h, k1, k2, k3, k4, k5, k6, k7, ytmp, y5, y4);

      double err = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        const double e = (y5[i] - y4[i]) / scale;
        err += e * e;
      }
      err = std::sqrt(err / N);

      if (err <= 1.0) {
        t += h;
        y = y5;
        k1 = k7; // FSAL
        for (double v : y)
          if (!std::isfinite(v)) throw std::runtime_error("rk45: non-finite state");
      }
      const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(factor, 0.2, 5.0);
      h = std::min(h, max_step);
    }
  }

private:
  static void stage(const Deriv& f, double t, const State& y, double h,
                    const State& k1, State& k2, State& k3, State& k4, State& k5,
                    State& k6, State& k7, State& ytmp, State& y5, State& y4) {
    auto axpy = [&](State& out, const State& base,
                    std::initializer_list<std::pair<double, const State*>> terms) {
      for (std::size_t i = 0; i < N; ++i) {
        double acc = base[i];
        for (const auto& [c, k] : terms) acc += h * c * (*k)[i];
        out[i] = acc;
      }
    };

    axpy(ytmp, y, {{1.0 / 5, &k1}});
    f(t + h / 5, ytmp, k2);
    axpy(ytmp, y, {{3.0 / 40, &k1}, {9.0 / 40, &k2}});
    f(t + 3 * h / 10, ytmp, k3);
    axpy(ytmp, y, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}});
    f(t + 4 * h / 5, ytmp, k4);
    axpy(ytmp, y, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2},
                   {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}});
    f(t + 8 * h / 9, ytmp, k5);
    axpy(ytmp, y, {{9017.0 / 3168, &k1}, {-355.0 / 33, &k2}, {46732.0 / 5247, &k3},
                   {49.0 / 176, &k4}, {-5103.0 / 18656, &k5}});
    f(t + h, ytmp, k6);
    axpy(y5, y, {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4},
                 {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
    f(t + h, y5, k7);
    axpy(y4, y, {{5179.0 / 57600, &k1}, {7571.0 / 16695, &k3}, {393.0 / 640, &k4},
                 {-92097.0 / 339200, &k5}, {187.0 / 2100, &k6}, {1.0 / 40, &k7}});
  }
};

} // namespace ionsim::ode
