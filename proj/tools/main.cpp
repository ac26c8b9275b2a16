// Command-line front end: one subcommand per simulation module.
// Outputs are written atomically (temp file + rename) and every run prints a
// small report with the output digest so reruns can be compared byte-for-byte.

#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ionsim/atomic.hpp"
#include "ionsim/constants.hpp"
#include "ionsim/cooling.hpp"
#include "ionsim/cz.hpp"
#include "ionsim/golden.hpp"
#include "ionsim/qubit.hpp"
#include "ionsim/readout.hpp"
#include "ionsim/rng.hpp"
#include "ionsim/signal.hpp"
#include "ionsim/trap.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 ok, 2 usage, 3 precondition violation, 4 golden failure,
// 5 internal error.
enum ExitCode { kOk = 0, kUsage = 2, kPrecondition = 3, kGoldenFail = 4, kInternal = 5 };

std::string default_output_dir() {
  if (const char* dir = std::getenv("IONSIM_OUTPUT_DIR")) return dir;
  return ".";
}

std::filesystem::path resolve_output(const std::string& flag_value,
                                     const std::string& default_name) {
  if (!flag_value.empty()) return flag_value;
  return std::filesystem::path(default_output_dir()) / default_name;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

struct Report {
  std::string scenario;
  std::filesystem::path path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& content) const {
    write_atomic(path, content);
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::ostringstream os;
    os << scenario << ": wrote " << path.string() << " (digest "
       << std::hex << fnv1a(content) << std::dec << ", " << elapsed << " s)";
    std::cerr << os.str() << "\n";
  }
};

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json histogram_json(const ionsim::readout::PhotonHistogram& h) {
  json counts = json::object();
  for (const auto& [n, c] : h.counts) counts[std::to_string(n)] = c;
  return {{"counts", counts}, {"shots", h.shots}, {"mean", h.mean()},
          {"variance", h.variance()}};
}

ionsim::HalfInt orbital_from_letter(const std::string& s) {
  static const std::string letters = "spdfgh";
  if (s.size() == 1) {
    const auto pos = letters.find(std::tolower(s[0]));
    if (pos != std::string::npos) return ionsim::HalfInt::from_int(static_cast<int>(pos));
  }
  // Also accept a bare integer l.
  try {
    return ionsim::HalfInt::from_int(std::stoi(s));
  } catch (...) {
    throw CLI::ValidationError("--shells", "unknown orbital '" + s + "'");
  }
}

// ---------------------------------------------------------------- subcommands

int run_terms(const std::vector<std::string>& shells, const std::string& out_flag) {
  std::vector<std::pair<ionsim::HalfInt, ionsim::HalfInt>> valence;
  for (const auto& s : shells)
    valence.push_back({orbital_from_letter(s), ionsim::HalfInt::half()});
  const auto terms = ionsim::atomic::term_symbols(valence);

  json out;
  out["shells"] = shells;
  out["count"] = terms.size();
  out["terms"] = json::array();
  for (const auto& t : terms) {
    json entry = {{"ascii", t.ascii()},
                  {"pretty", t.pretty()},
                  {"s", t.S.str()},
                  {"l", t.L.str()},
                  {"j", t.J.str()}};
    // single-electron spin-orbit scale, defined only while l fits in the shell
    const unsigned n = 2;
    if (t.L.is_integer() && t.L.twice() / 2 + 1 <= static_cast<int>(n)) {
      const double e_so = ionsim::atomic::spin_orbit_energy(1, n, t.L, t.S, t.J);
      entry["spin_orbit_z1_n2_j"] = e_so;
      entry["spin_orbit_z1_n2_ev"] = e_so / ionsim::constants::elementary_charge;
    } else {
      entry["spin_orbit_z1_n2_j"] = nullptr;
      entry["spin_orbit_z1_n2_ev"] = nullptr;
    }
    out["terms"].push_back(entry);
  }
  Report rep{"terms", resolve_output(out_flag, "terms.json")};
  rep.emit(out.dump(2) + "\n");
  return kOk;
}

int run_trap(double epsilon, double omega_hz, double x0, double theta0,
             double phase_diff, bool have_phase_diff, double t_end,
             std::size_t samples, bool oracle, const std::string& out_flag) {
  ionsim::trap::TrapConfig cfg{epsilon, 2.0 * M_PI * omega_hz, x0, theta0};
  cfg.validate();
  if (t_end <= 0.0) throw std::invalid_argument("trap: --t-end must be positive");

  std::ostringstream csv;
  if (have_phase_diff) {
    csv << "t_s,x_m,y_m\n";
    const auto [x, y] = ionsim::trap::trajectory_xy(cfg, phase_diff, t_end, samples);
    for (std::size_t i = 0; i < x.times.size(); ++i)
      csv << csv_double(x.times[i]) << ',' << csv_double(x.positions[i]) << ','
          << csv_double(y.positions[i]) << '\n';
  } else if (oracle) {
    const double dt_max = 2.0 * M_PI / (50.0 * cfg.omega);
    const double v0 = -x0 * ionsim::trap::secular_frequency(cfg) * std::sin(theta0);
    const auto num = ionsim::trap::integrate_equation_of_motion(
        cfg, ionsim::trap::closed_form_position(cfg, 0.0), v0, t_end, dt_max, samples);
    csv << "t_s,x_m,deviation_m\n";
    for (std::size_t i = 0; i < num.times.size(); ++i) {
      const double closed = ionsim::trap::closed_form_position(cfg, num.times[i]);
      csv << csv_double(num.times[i]) << ',' << csv_double(closed) << ','
          << csv_double(num.positions[i] - closed) << '\n';
    }
  } else {
    csv << "t_s,x_m\n";
    for (std::size_t i = 0; i < samples; ++i) {
      const double t = t_end * static_cast<double>(i) / (samples - 1);
      csv << csv_double(t) << ',' << csv_double(ionsim::trap::closed_form_position(cfg, t))
          << '\n';
    }
  }
  Report rep{"trap", resolve_output(out_flag, "trap.csv")};
  rep.emit(csv.str());
  return kOk;
}

int run_rabi(double omega_l_hz, double omega_r_hz, double theta0, double t_end,
             std::size_t samples, const std::string& mode,
             const std::string& out_flag) {
  ionsim::qubit::QubitParams params{2.0 * M_PI * omega_l_hz, 2.0 * M_PI * omega_r_hz};
  params.validate();
  if (t_end <= 0.0) throw std::invalid_argument("rabi: --t-end must be positive");

  // Closed-form slice lives at azimuth -pi/2; the full integration starts
  // from the matching amplitudes.
  const ionsim::qubit::BlochVector b0{theta0, -M_PI / 2.0};
  const ionsim::qubit::QubitState s0{
      std::cos(theta0 / 2.0) * std::polar(1.0, M_PI / 4.0),
      std::sin(theta0 / 2.0) * std::polar(1.0, -M_PI / 4.0)};

  std::vector<double> p1_full;
  if (mode != "rwa")
    p1_full = ionsim::qubit::evolve_full_p1_trace(s0, params, params.omega_l, t_end,
                                                  samples);

  std::ostringstream csv;
  if (mode == "rwa")
    csv << "t_s,p0,p1\n";
  else if (mode == "full")
    csv << "t_s,p0,p1\n";
  else
    csv << "t_s,p0,p1,p1_rwa,p1_full,abs_diff\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = t_end * static_cast<double>(i) / (samples - 1);
    csv << csv_double(t);
    if (mode == "full") {
      csv << ',' << csv_double(1.0 - p1_full[i]) << ',' << csv_double(p1_full[i]);
    } else {
      const auto s = ionsim::qubit::evolve_rwa(b0, params, t);
      const double p1 = std::norm(s.c1);
      csv << ',' << csv_double(1.0 - p1) << ',' << csv_double(p1);
      if (mode == "both")
        csv << ',' << csv_double(p1) << ',' << csv_double(p1_full[i]) << ','
            << csv_double(std::abs(p1 - p1_full[i]));
    }
    csv << '\n';
  }
  Report rep{"rabi", resolve_output(out_flag, "rabi.csv")};
  rep.emit(csv.str());
  return kOk;
}

int run_readout(double bright, double dark, double leak, std::uint64_t shots,
                std::uint64_t seed, const std::string& out_flag) {
  ionsim::readout::ReadoutModel model{bright, dark, leak};
  model.validate();
  if (shots == 0) throw std::invalid_argument("readout: --shots must be positive");

  const auto h0 = ionsim::readout::simulate_readout(0, model, shots, seed);
  const auto h1 = ionsim::readout::simulate_readout(1, model, shots, seed + 1);
  const auto thr = ionsim::readout::calibrate_threshold(h0, h1);
  const auto fid = ionsim::readout::readout_fidelity(model, thr.threshold, shots, seed);

  json out;
  out["histogram0"] = histogram_json(h0);
  out["histogram1"] = histogram_json(h1);
  out["threshold"] = {{"value", thr.threshold},
                      {"empirical_error", thr.empirical_error},
                      {"degenerate", thr.degenerate}};
  out["f0"] = fid.f0;
  out["f1"] = fid.f1;
  out["stderr"] = {{"f0", fid.stderr0}, {"f1", fid.stderr1}};
  out["seed"] = seed;
  Report rep{"readout", resolve_output(out_flag, "readout.json")};
  rep.emit(out.dump(2) + "\n");
  return kOk;
}

int run_init(double p_ground, double p_dark, const std::string& repump,
             unsigned cycles, std::uint64_t shots, std::uint64_t seed,
             const std::string& out_flag) {
  ionsim::readout::InitModel model{p_ground, p_dark, repump == "on"};
  model.validate();
  if (cycles == 0) throw std::invalid_argument("init: --cycles must be positive");
  if (shots == 0) throw std::invalid_argument("init: --shots must be positive");

  const auto residuals =
      ionsim::readout::simulate_initialization(1, model, cycles, seed, shots);
  std::ostringstream csv;
  csv << "cycle,residual\n";
  for (unsigned k = 0; k < residuals.size(); ++k)
    csv << (k + 1) << ',' << csv_double(residuals[k]) << '\n';
  Report rep{"init", resolve_output(out_flag, "init.csv")};
  rep.emit(csv.str());
  return kOk;
}

int run_cool(const std::string& mode, unsigned n_ions, double p_spread,
             double detuning_hz, double acceptance_hz, unsigned steps, unsigned n0,
             std::uint64_t seed, const std::string& out_flag) {
  std::ostringstream csv;
  if (mode == "doppler") {
    if (n_ions == 0) throw std::invalid_argument("cool: --n-ions must be positive");
    const double lambda = 369.53e-9;
    const double p_ph = ionsim::cooling::photon_momentum(lambda);
    const double omega0 =
        2.0 * M_PI * ionsim::constants::speed_of_light / lambda;
    ionsim::cooling::DopplerBeam beam_a{-1, p_ph, 2.0 * M_PI * detuning_hz,
                                        2.0 * M_PI * acceptance_hz};
    ionsim::cooling::DopplerBeam beam_b = beam_a;
    beam_b.direction = +1;

    ionsim::Rng init_rng(seed, 0xC001D00Dull);
    std::vector<double> momenta(n_ions);
    for (auto& p : momenta) p = (2.0 * init_rng.uniform() - 1.0) * p_spread;

    const auto trace = ionsim::cooling::doppler_cool(
        momenta, ionsim::constants::yb171_mass, beam_a, beam_b, omega0, steps, seed);
    csv << "step,mean_ke_j\n";
    for (std::size_t i = 0; i < trace.size(); ++i)
      csv << i << ',' << csv_double(trace[i]) << '\n';
  } else if (mode == "sideband") {
    const double omega_l = 2.0 * M_PI * 12.64e9;
    const double omega_chain = 2.0 * M_PI * 1e6;
    const auto ladder = ionsim::cooling::cool_to_ground(n0, omega_l, omega_chain);
    csv << "step,internal,n_phonon,e_chain_j\n";
    for (std::size_t i = 0; i < ladder.size(); ++i)
      csv << i << ','
          << (ladder[i].internal == ionsim::cooling::Internal::ground ? "g" : "e")
          << ',' << ladder[i].n_phonon << ','
          << csv_double(ladder[i].n_phonon * ionsim::constants::hbar * omega_chain)
          << '\n';
  } else {
    throw CLI::ValidationError("--mode", "must be doppler or sideband");
  }
  Report rep{"cool", resolve_output(out_flag, "cool.csv")};
  rep.emit(csv.str());
  return kOk;
}

json cplx_json(const ionsim::cz::cplx& z) { return json::array({z.real(), z.imag()}); }

json state_json(const ionsim::cz::CompositeState& s) {
  json out = json::object();
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (unsigned n = 0; n <= s.n_max(); ++n) {
        const auto& a = s.at(q1, q2, n);
        if (std::abs(a) > 0.0) {
          std::string key = "|" + std::to_string(q1) + std::to_string(q2) + "," +
                            std::to_string(n) + ">";
          out[key] = cplx_json(a);
        }
      }
  return out;
}

int run_cz(const std::string& input, bool show_steps, bool matrix,
           const std::string& out_flag) {
  json out;
  if (matrix) {
    const auto m = ionsim::cz::cz_matrix();
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& z : row) r.push_back(cplx_json(z));
      rows.push_back(r);
    }
    out["matrix"] = rows;
  }

  ionsim::cz::CompositeState state(2);
  if (input == "bell-demo") {
    // (|0> + |1>) (x) |0> on the qubits, chain cooled to N = 0.
    const double r = 1.0 / std::sqrt(2.0);
    state.at(0, 0, 0) = r;
    state.at(1, 0, 0) = r;
  } else if (input.size() == 2 && (input[0] == '0' || input[0] == '1') &&
             (input[1] == '0' || input[1] == '1')) {
    state = ionsim::cz::CompositeState::basis(input[0] - '0', input[1] - '0', 0);
  } else {
    throw CLI::ValidationError("--input", "must be 00, 01, 10, 11, or bell-demo");
  }
  out["input"] = state_json(state);

  if (input == "bell-demo") {
    // CNOT = (I (x) H) CZ (I (x) H) applied as the full pulse sandwich:
    // demo only needs the computational-subspace matrix.
    const auto cnot = ionsim::cz::compose_cnot();
    std::array<ionsim::cz::cplx, 4> v{}, w{};
    for (int i = 0; i < 4; ++i) v[i] = state.at(i / 2, i % 2, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) w[i] += cnot[i][j] * v[j];
    ionsim::cz::CompositeState final_state(2);
    for (int i = 0; i < 4; ++i) final_state.at(i / 2, i % 2, 0) = w[i];
    out["output"] = state_json(final_state);
    out["note"] = "CNOT on (|0>+|1>)|0>/sqrt(2): Bell pair (|00>+|11>)/sqrt(2)";
  } else {
    if (show_steps) {
      json steps = json::array();
      auto s = ionsim::cz::apply_red_pi(state, 1);
      steps.push_back({{"pulse", "red_pi(ion1)"}, {"state", state_json(s)}});
      s = ionsim::cz::apply_aux_2pi(s, 2);
      steps.push_back({{"pulse", "aux_2pi(ion2)"}, {"state", state_json(s)}});
      s = ionsim::cz::apply_red_pi(s, 1);
      steps.push_back({{"pulse", "red_pi(ion1)"}, {"state", state_json(s)}});
      out["steps"] = steps;
    }
    out["output"] = state_json(ionsim::cz::cirac_zoller(state));
  }

  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  Report rep{"cz", resolve_output(out_flag, "cz.json")};
  rep.emit(text);
  return kOk;
}

int run_mixer(double omega1_hz, double omega_awg_hz, double phi,
              const std::string& envelope, double duration, double rate,
              double cutoff_hz, const std::string& out_flag) {
  ionsim::signal::MixConfig cfg{2.0 * M_PI * omega_awg_hz, 2.0 * M_PI * omega1_hz,
                                phi};
  if (envelope == "gauss")
    cfg.envelope = ionsim::signal::EnvelopeKind::gaussian;
  else if (envelope != "const")
    throw CLI::ValidationError("--envelope", "must be const or gauss");
  cfg.validate();

  const auto [i_sig, q_sig] = ionsim::signal::generate_iq(cfg, duration, rate);
  const auto mixed = ionsim::signal::upconvert_mix(i_sig, q_sig, cfg);
  const double cutoff =
      cutoff_hz > 0.0 ? cutoff_hz : (cfg.omega_1 + cfg.omega_awg) / (2.0 * M_PI);
  const auto filtered = ionsim::signal::lowpass(mixed, cutoff);
  const auto check = ionsim::signal::verify_envelope(cfg, duration, rate);

  std::ostringstream csv;
  csv << "t_s,vg,target,error\n";
  for (std::size_t k = 0; k < filtered.samples.size(); ++k) {
    const double t = static_cast<double>(k) / rate;
    const double target =
        cfg.envelope_at(t, duration) * std::sin(cfg.omega_1 * t + cfg.phi);
    csv << csv_double(t) << ',' << csv_double(filtered.samples[k]) << ','
        << csv_double(target) << ',' << csv_double(filtered.samples[k] - target)
        << '\n';
  }
  Report rep{"mixer", resolve_output(out_flag, "mixer.csv")};
  rep.emit(csv.str());

  json summary{{"max_error", check.max_abs_error},
               {"peak_amplitude", check.peak_amplitude},
               {"recovered_phi", check.recovered_phi}};
  std::cout << summary.dump(2) << "\n";
  return kOk;
}

int run_golden(const std::string& filter) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = ionsim::golden::run_golden_suite(filter);
  std::size_t failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.group << "] " << r.name;
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << results.size() - failures << "/" << results.size() << " goldens pass ("
            << elapsed << " s, generator: " << ionsim::Rng::generator_id() << ")\n";
  return failures == 0 ? kOk : kGoldenFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-level trapped-ion (Yb-171) simulator"};
  app.set_version_flag("--version", std::string("ionsim ") + kVersion +
                                        " (rng: " + ionsim::Rng::generator_id() + ")");
  app.set_config("--config", "", "Config file (INI, one section per subcommand)");
  app.require_subcommand(1);

  // terms
  auto* terms = app.add_subcommand("terms", "LS-coupled term symbols");
  std::vector<std::string> shells{"p", "p"};
  std::string terms_out;
  terms->add_option("--shells", shells, "Valence orbitals (s,p,d,... or l values)")
      ->delimiter(',');
  terms->add_option("-o,--output", terms_out, "Output path (JSON)");

  // trap
  auto* trap = app.add_subcommand("trap", "Paul-trap trajectory");
  double epsilon = 0.04, omega_hz = 8e6, x0 = 1e-5, theta0 = 0.0, phase_diff = 0.0;
  double trap_t_end = 15e-6;
  std::size_t trap_samples = 2000;
  bool oracle = false;
  std::string trap_out;
  trap->add_option("--epsilon", epsilon, "Stability parameter, (0, 0.2)");
  trap->add_option("--omega-hz", omega_hz, "Drive frequency in Hz");
  trap->add_option("--x0", x0, "Secular amplitude, m");
  trap->add_option("--theta0", theta0, "Initial secular phase, rad");
  auto* pd = trap->add_option("--phase-diff", phase_diff,
                              "Secular phase offset of y vs x (enables y column)");
  trap->add_option("--t-end", trap_t_end, "End time, s");
  trap->add_option("--samples", trap_samples, "Sample count");
  trap->add_flag("--oracle", oracle, "Also integrate the equation of motion");
  trap->add_option("-o,--output", trap_out, "Output path (CSV)");

  // rabi
  auto* rabi = app.add_subcommand("rabi", "Rabi oscillations");
  double omega_l_hz = 12.64e9, omega_r_hz = 1e5, rabi_theta0 = 0.0, rabi_t_end = 1e-5;
  std::size_t rabi_samples = 200;
  std::string rabi_mode = "rwa", rabi_out;
  rabi->add_option("--omega-l-hz", omega_l_hz, "Larmor frequency, Hz");
  rabi->add_option("--omega-r-hz", omega_r_hz, "Rabi frequency, Hz");
  rabi->add_option("--theta0", rabi_theta0, "Initial polar angle, rad");
  rabi->add_option("--t-end", rabi_t_end, "End time, s");
  rabi->add_option("--samples", rabi_samples, "Sample count");
  rabi->add_option("--mode", rabi_mode, "rwa, full, or both")
      ->check(CLI::IsMember({"rwa", "full", "both"}));
  rabi->add_option("-o,--output", rabi_out, "Output path (CSV)");

  // readout
  auto* readout = app.add_subcommand("readout", "Fluorescence readout");
  double bright = 10.0, dark = 0.1, leak = 0.0;
  std::uint64_t ro_shots = 100000, ro_seed = 1;
  std::string ro_out;
  readout->add_option("--bright-mean", bright, "Mean photons for |1>");
  readout->add_option("--dark-mean", dark, "Mean photons for |0>");
  readout->add_option("--leak", leak, "Per-scatter leak probability");
  readout->add_option("--shots", ro_shots, "Shots per prepared state");
  readout->add_option("--seed", ro_seed, "RNG seed");
  readout->add_option("-o,--output", ro_out, "Output path (JSON)");

  // init
  auto* init = app.add_subcommand("init", "Optical-pumping initialization");
  double p_ground = 1.0 / 3.0, p_dark = 0.0;
  std::string repump = "on", init_out;
  unsigned cycles = 10;
  std::uint64_t init_shots = 100000, init_seed = 1;
  init->add_option("--p-ground", p_ground, "Branching to |0> per cycle");
  init->add_option("--p-dark", p_dark, "Branching to the D state per cycle");
  init->add_option("--repump", repump, "on or off")
      ->check(CLI::IsMember({"on", "off"}));
  init->add_option("--cycles", cycles, "Pump cycles");
  init->add_option("--shots", init_shots, "Monte Carlo shots");
  init->add_option("--seed", init_seed, "RNG seed");
  init->add_option("-o,--output", init_out, "Output path (CSV)");

  // cool
  auto* cool = app.add_subcommand("cool", "Doppler / sideband cooling");
  std::string cool_mode = "doppler", cool_out;
  unsigned n_ions = 100, cool_steps = 200, n0 = 2;
  double p_spread = 5e-24, detuning_hz = -10e6, acceptance_hz = 1e7;
  std::uint64_t cool_seed = 1;
  cool->add_option("--mode", cool_mode, "doppler or sideband")
      ->check(CLI::IsMember({"doppler", "sideband"}));
  cool->add_option("--n-ions", n_ions, "Ensemble size (doppler)");
  cool->add_option("--p-init-spread", p_spread, "Initial |p| bound, kg m/s");
  cool->add_option("--detuning-hz", detuning_hz, "Laser detuning, Hz (negative = red)");
  cool->add_option("--acceptance-hz", acceptance_hz, "Absorption half-width, Hz");
  cool->add_option("--steps", cool_steps, "Scattering steps (doppler)");
  cool->add_option("--n0", n0, "Initial phonon number (sideband)");
  cool->add_option("--seed", cool_seed, "RNG seed");
  cool->add_option("-o,--output", cool_out, "Output path (CSV)");

  // cz
  auto* cz = app.add_subcommand("cz", "Three-pulse controlled-Z gate");
  std::string cz_input = "11", cz_out;
  bool show_steps = false, matrix = false;
  cz->add_option("--input", cz_input, "00, 01, 10, 11, or bell-demo");
  cz->add_flag("--show-steps", show_steps, "Print state after each pulse");
  cz->add_flag("--matrix", matrix, "Print the 4x4 gate matrix");
  cz->add_option("-o,--output", cz_out, "Output path (JSON)");

  // mixer
  auto* mixer = app.add_subcommand("mixer", "I/Q upconversion chain");
  double omega1_hz = 500e3, omega_awg_hz = 5e3, phi = 0.0, duration = 2e-3,
         rate = 4e6, cutoff = 0.0;
  std::string envelope = "const", mixer_out;
  mixer->add_option("--omega1-hz", omega1_hz, "Carrier frequency, Hz");
  mixer->add_option("--omega-awg-hz", omega_awg_hz, "AWG frequency, Hz");
  mixer->add_option("--phi", phi, "Phase, rad");
  mixer->add_option("--envelope", envelope, "const or gauss")
      ->check(CLI::IsMember({"const", "gauss"}));
  mixer->add_option("--duration", duration, "Record length, s");
  mixer->add_option("--rate", rate, "Sample rate, S/s");
  mixer->add_option("--cutoff-hz", cutoff, "Lowpass cutoff (default: midband)");
  mixer->add_option("-o,--output", mixer_out, "Output path (CSV)");

  // golden
  auto* golden = app.add_subcommand("golden", "Built-in golden-value suite");
  std::string filter;
  golden->add_option("--filter", filter, "Substring filter on the group tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*terms) return run_terms(shells, terms_out);
    if (*trap)
      return run_trap(epsilon, omega_hz, x0, theta0, phase_diff, pd->count() > 0,
                      trap_t_end, trap_samples, oracle, trap_out);
    if (*rabi)
      return run_rabi(omega_l_hz, omega_r_hz, rabi_theta0, rabi_t_end, rabi_samples,
                      rabi_mode, rabi_out);
    if (*readout) return run_readout(bright, dark, leak, ro_shots, ro_seed, ro_out);
    if (*init)
      return run_init(p_ground, p_dark, repump, cycles, init_shots, init_seed,
                      init_out);
    if (*cool)
      return run_cool(cool_mode, n_ions, p_spread, detuning_hz, acceptance_hz,
                      cool_steps, n0, cool_seed, cool_out);
    if (*cz) return run_cz(cz_input, show_steps, matrix, cz_out);
    if (*mixer)
      return run_mixer(omega1_hz, omega_awg_hz, phi, envelope, duration, rate, cutoff,
                       mixer_out);
    if (*golden) return run_golden(filter);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
