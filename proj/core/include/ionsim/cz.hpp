#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ionsim::cz {

using cplx = std::complex<double>;

//! State vector over |q1, q2, N> with q in {g=0, e=1} and N in 0..n_max.
//! Index layout is q1-major, then q2, then N.
class CompositeState {
public:
  explicit CompositeState(unsigned n_max = 2);

  static CompositeState basis(int q1, int q2, unsigned n, unsigned n_max = 2);

  unsigned n_max() const { return n_max_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::size_t index(int q1, int q2, unsigned n) const;

  cplx& at(int q1, int q2, unsigned n) { return amplitudes_[index(q1, q2, n)]; }
  const cplx& at(int q1, int q2, unsigned n) const { return amplitudes_[index(q1, q2, n)]; }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  std::vector<cplx>& amplitudes() { return amplitudes_; }

  double norm2() const;
  //! Total probability outside the N = 0 manifold.
  double leakage_outside_n0() const;

private:
  unsigned n_max_;
  std::vector<cplx> amplitudes_;
};

//! Red-sideband pi-pulse on one ion:
//!   |g,0> -> |g,0>, |g,1> -> -i|e,0>, |e,0> -> -i|g,1>;
//! states outside the rule domain map to themselves.
CompositeState apply_red_pi(const CompositeState& state, int ion);

//! Auxiliary-level 2pi-pulse on one ion:
//!   |g,1> -> -|g,1>; |g,0>, |e,0>, |e,1> unchanged.
CompositeState apply_aux_2pi(const CompositeState& state, int ion);

//! Three-pulse CZ sequence: red pi (ion 1), aux 2pi (ion 2), red pi (ion 1).
//! Requires the input supported on N = 0 (cooled chain).
CompositeState cirac_zoller(const CompositeState& state);

using Matrix4 = std::array<std::array<cplx, 4>, 4>;

//! 4x4 matrix of a composite-state map restricted to the N = 0 computational
//! subspace; throws if the map leaks out of it.
template <typename Gate>
Matrix4 extract_gate_matrix(Gate&& gate, unsigned n_max = 2) {
  Matrix4 m{};
  for (int col = 0; col < 4; ++col) {
    const auto out = gate(CompositeState::basis(col / 2, col % 2, 0, n_max));
    if (out.leakage_outside_n0() > 1e-12)
      throw std::runtime_error("extract_gate_matrix: leakage outside N = 0 subspace");
    for (int row = 0; row < 4; ++row)
      m[row][col] = out.at(row / 2, row % 2, 0);
  }
  return m;
}

Matrix4 matmul(const Matrix4& a, const Matrix4& b);

//! (I (x) H) * U_CZ * (I (x) H): the CNOT permutation with ion 1 as control.
Matrix4 compose_cnot();

Matrix4 cz_matrix();

} // namespace ionsim::cz
