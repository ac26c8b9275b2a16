#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ionsim/half_int.hpp"

namespace ionsim::atomic {

//! Fine-structure level label ^{2S+1}L_J.
struct TermSymbol {
  HalfInt S; // total spin
  HalfInt L; // total orbital angular momentum (integer-valued)
  HalfInt J; // total angular momentum

  //! ASCII form, e.g. "3P2" or "2P3/2".
  std::string ascii() const;
  //! Unicode pretty form, e.g. "³P₂".
  std::string pretty() const;

  auto operator<=>(const TermSymbol&) const = default;
};

//! One hyperfine level relative to the pre-splitting centroid.
struct HyperfineLevel {
  HalfInt F;
  double energy_j; // joules
};

struct PhotonQuanta {
  double wavelength_m;
  double frequency_hz;
  double energy_ev;
  double energy_j;
};

//! Angular-momentum addition: |j1-j2|, ..., j1+j2 ascending in unit steps.
std::vector<HalfInt> couple(HalfInt j1, HalfInt j2);

//! LS-coupled term symbols for valence electrons in distinct shells
//! (no Pauli filtering). Each entry is (l, s) with s = 1/2.
std::set<TermSymbol> term_symbols(const std::vector<std::pair<HalfInt, HalfInt>>& valence);

//! <L.S> in units of hbar^2: (j(j+1) - l(l+1) - s(s+1)) / 2.
double ls_expectation(HalfInt j, HalfInt l, HalfInt s);

//! Spin-orbit energy of a hydrogen-like level in joules. Zero at l = 0
//! (no orbital angular momentum, no coupling).
double spin_orbit_energy(int z, int n, HalfInt l, HalfInt s, HalfInt j);

//! Hyperfine levels for given A*hbar^2 product (joules) and (I, J).
//! energy(F) = (a/2)(F(F+1) - I(I+1) - J(J+1)).
std::vector<HyperfineLevel> hyperfine_levels(double a_energy_j, HalfInt i, HalfInt j);

//! Integer numerator of 4*(F(F+1) - I(I+1) - J(J+1)); exact arithmetic
//! used by the centroid invariant.
long long hyperfine_factor_x4(HalfInt f, HalfInt i, HalfInt j);

PhotonQuanta photon_from_wavelength(double wavelength_m);
PhotonQuanta photon_from_frequency(double frequency_hz);

//! m_electron / M_proton, about 1/1836.
double nuclear_magneton_ratio();

} // namespace ionsim::atomic
