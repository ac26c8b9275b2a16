#include "ionsim/atomic.hpp"

#include <cmath>
#include <stdexcept>

#include "ionsim/constants.hpp"

namespace ionsim::atomic {

namespace {

const char* orbital_letter(int l) {
  static const char* letters[] = {"S", "P", "D", "F", "G", "H", "I", "K"};
  if (l < 0 || l > 7) throw std::invalid_argument("orbital quantum number out of label range");
  return letters[l];
}

// Unicode superscript/subscript digits for the pretty form.
std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

std::string subscript_halfint(HalfInt j) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄",
                                 "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : j.str()) {
    if (c == '/')
      out += "⁄";
    else
      out += digits[c - '0'];
  }
  return out;
}

} // namespace

std::string TermSymbol::ascii() const {
  return std::to_string(S.twice() + 1) + orbital_letter(L.twice() / 2) + J.str();
}

std::string TermSymbol::pretty() const {
  return superscript(S.twice() + 1) + orbital_letter(L.twice() / 2) + subscript_halfint(J);
}

std::vector<HalfInt> couple(HalfInt j1, HalfInt j2) {
  if (j1.twice() < 0 || j2.twice() < 0)
    throw std::invalid_argument("couple: quantum numbers must be >= 0");
  const int lo = std::abs(j1.twice() - j2.twice());
  const int hi = j1.twice() + j2.twice();
  std::vector<HalfInt> out;
  out.reserve((hi - lo) / 2 + 1);
  for (int t = lo; t <= hi; t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::set<TermSymbol> term_symbols(const std::vector<std::pair<HalfInt, HalfInt>>& valence) {
  if (valence.empty()) throw std::invalid_argument("term_symbols: empty electron list");
  for (const auto& [l, s] : valence) {
    if (!l.is_integer()) throw std::invalid_argument("term_symbols: l must be integer-valued");
    if (s != HalfInt::half()) throw std::invalid_argument("term_symbols: each s must be 1/2");
  }

  // Left-fold couple() over spins and over orbitals independently (LS coupling).
  std::vector<HalfInt> spins = {valence[0].second};
  std::vector<HalfInt> orbitals = {valence[0].first};
  for (std::size_t i = 1; i < valence.size(); ++i) {
    std::vector<HalfInt> next_s;
    for (HalfInt acc : spins)
      for (HalfInt v : couple(acc, valence[i].second)) next_s.push_back(v);
    spins = std::move(next_s);
    std::vector<HalfInt> next_l;
    for (HalfInt acc : orbitals)
      for (HalfInt v : couple(acc, valence[i].first)) next_l.push_back(v);
    orbitals = std::move(next_l);
  }

  std::set<TermSymbol> out;
  for (HalfInt s : spins)
    for (HalfInt l : orbitals)
      for (HalfInt j : couple(l, s)) out.insert(TermSymbol{s, l, j});
  return out;
}

double ls_expectation(HalfInt j, HalfInt l, HalfInt s) {
  const auto allowed = couple(l, s);
  bool ok = false;
  for (HalfInt c : allowed) ok = ok || c == j;
  if (!ok) throw std::invalid_argument("ls_expectation: j not in couple(l, s)");
  const long long num =
      j.j_times_j_plus_1_x4() - l.j_times_j_plus_1_x4() - s.j_times_j_plus_1_x4();
  return static_cast<double>(num) / 8.0; // (1/2) * (num/4)
}

double spin_orbit_energy(int z, int n, HalfInt l, HalfInt s, HalfInt j) {
  if (n < 1) throw std::invalid_argument("spin_orbit_energy: n must be >= 1");
  if (!l.is_integer() || l.twice() / 2 > n - 1)
    throw std::invalid_argument("spin_orbit_energy: need integer l <= n-1");
  const double ls = ls_expectation(j, l, s); // validates j; in units of hbar^2
  const int lv = l.twice() / 2;
  if (lv == 0) return 0.0; // the <L.S> factor vanishes; the 1/l(l+1/2)(l+1) pole is never evaluated

  using namespace constants;
  const double prefactor = bohr_magneton * bohr_magneton / (4.0 * M_PI * epsilon_0 *
                                                            speed_of_light * speed_of_light);
  const double angular = 1.0 / (lv * (lv + 0.5) * (lv + 1.0));
  const double radial = std::pow(static_cast<double>(z), 4) /
                        (std::pow(static_cast<double>(n), 3) * std::pow(bohr_radius, 3));
  // 2*ls = j(j+1) - l(l+1) - s(s+1), the factor as it appears after the
  // Bohr-magneton substitution.
  return prefactor * angular * radial * 2.0 * ls;
}

long long hyperfine_factor_x4(HalfInt f, HalfInt i, HalfInt j) {
  return f.j_times_j_plus_1_x4() - i.j_times_j_plus_1_x4() - j.j_times_j_plus_1_x4();
}

std::vector<HyperfineLevel> hyperfine_levels(double a_energy_j, HalfInt i, HalfInt j) {
  if (i.twice() < 0 || j.twice() < 0)
    throw std::invalid_argument("hyperfine_levels: quantum numbers must be >= 0");
  std::vector<HyperfineLevel> out;
  for (HalfInt f : couple(i, j)) {
    const double energy = a_energy_j / 2.0 * (static_cast<double>(hyperfine_factor_x4(f, i, j)) / 4.0);
    out.push_back(HyperfineLevel{f, energy});
  }
  return out;
}

PhotonQuanta photon_from_wavelength(double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw std::invalid_argument("photon: wavelength must be positive");
  return photon_from_frequency(constants::speed_of_light / wavelength_m);
}

PhotonQuanta photon_from_frequency(double frequency_hz) {
  if (!(frequency_hz > 0.0)) throw std::invalid_argument("photon: frequency must be positive");
  PhotonQuanta q;
  q.frequency_hz = frequency_hz;
  q.wavelength_m = constants::speed_of_light / frequency_hz;
  q.energy_j = constants::planck_h * frequency_hz;
  q.energy_ev = q.energy_j / constants::elementary_charge;
  return q;
}

double nuclear_magneton_ratio() {
  return constants::electron_mass / constants::proton_mass;
}

} // namespace ionsim::atomic
