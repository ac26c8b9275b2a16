#include "ionsim/cz.hpp"

#include <cmath>
#include <stdexcept>

namespace ionsim::cz {

CompositeState::CompositeState(unsigned n_max)
    : n_max_(n_max), amplitudes_(4 * (n_max + 1), cplx{0.0, 0.0}) {
  if (n_max < 1) throw std::invalid_argument("CompositeState: n_max must be >= 1");
}

CompositeState CompositeState::basis(int q1, int q2, unsigned n, unsigned n_max) {
  CompositeState s(n_max);
  s.at(q1, q2, n) = 1.0;
  return s;
}

std::size_t CompositeState::index(int q1, int q2, unsigned n) const {
  if (q1 < 0 || q1 > 1 || q2 < 0 || q2 > 1 || n > n_max_)
    throw std::out_of_range("CompositeState: index out of range");
  return (static_cast<std::size_t>(q1) * 2 + q2) * (n_max_ + 1) + n;
}

double CompositeState::norm2() const {
  double sum = 0.0;
  for (const cplx& a : amplitudes_) sum += std::norm(a);
  return sum;
}

double CompositeState::leakage_outside_n0() const {
  double sum = 0.0;
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (unsigned n = 1; n <= n_max_; ++n) sum += std::norm(at(q1, q2, n));
  return sum;
}

namespace {

constexpr cplx kMinusI{0.0, -1.0};

void check_ion(int ion) {
  if (ion != 1 && ion != 2) throw std::invalid_argument("cz: ion must be 1 or 2");
}

//! Applies a per-(internal, N) linear rule to the targeted ion, spectator
//! untouched. The rule receives (q, n) and deposits into the output state.
template <typename Rule>
CompositeState apply_to_ion(const CompositeState& state, int ion, Rule&& rule) {
  CompositeState out(state.n_max());
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (unsigned n = 0; n <= state.n_max(); ++n) {
        const cplx amp = state.at(q1, q2, n);
        if (amp == cplx{0.0, 0.0}) continue;
        const int target = (ion == 1) ? q1 : q2;
        auto deposit = [&](int new_target, unsigned new_n, cplx factor) {
          const int nq1 = (ion == 1) ? new_target : q1;
          const int nq2 = (ion == 2) ? new_target : q2;
          out.at(nq1, nq2, new_n) += factor * amp;
        };
        rule(target, n, deposit);
      }
  return out;
}

} // namespace

CompositeState apply_red_pi(const CompositeState& state, int ion) {
  check_ion(ion);
  return apply_to_ion(state, ion, [](int q, unsigned n, auto deposit) {
    if (q == 0 && n == 1)
      deposit(1, 0, kMinusI); // |g,1> -> -i|e,0>
    else if (q == 1 && n == 0)
      deposit(0, 1, kMinusI); // |e,0> -> -i|g,1>
    else
      deposit(q, n, 1.0); // |g,0> and out-of-domain states: identity
  });
}

CompositeState apply_aux_2pi(const CompositeState& state, int ion) {
  check_ion(ion);
  return apply_to_ion(state, ion, [](int q, unsigned n, auto deposit) {
    deposit(q, n, (q == 0 && n == 1) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0});
  });
}

CompositeState cirac_zoller(const CompositeState& state) {
  if (state.leakage_outside_n0() > 1e-12)
    throw std::invalid_argument("cirac_zoller: input must be supported on N = 0 (cool first)");
  return apply_red_pi(apply_aux_2pi(apply_red_pi(state, 1), 2), 1);
}

Matrix4 matmul(const Matrix4& a, const Matrix4& b) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  return out;
}

Matrix4 cz_matrix() {
  return extract_gate_matrix([](const CompositeState& s) { return cirac_zoller(s); });
}

Matrix4 compose_cnot() {
  const double r = 1.0 / std::sqrt(2.0);
  // I (x) H on (q1, q2) ordering
  Matrix4 ih{};
  for (int q1 = 0; q1 < 2; ++q1)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        ih[q1 * 2 + a][q1 * 2 + b] = (a == 1 && b == 1) ? -r : r;
  return matmul(ih, matmul(cz_matrix(), ih));
}

} // namespace ionsim::cz
