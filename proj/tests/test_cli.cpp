#include <cstdlib>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "ionsim_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_capture(const std::string& args, std::string& out) {
  const auto tmp = work_dir() / "stdout.txt";
  const std::string cmd =
      std::string(CLI_BIN) + " " + args + " >" + tmp.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::ostringstream os;
  os << in.rdbuf();
  out = os.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("") == 2);
  CHECK(run("--no-such-flag") == 2);
  CHECK(run("trap --bogus 1") == 2);
  CHECK(run("rabi --mode sideways") == 2);
}

TEST_CASE("version reports the RNG identity") {
  std::string out;
  CHECK(run_capture("--version", out) == 0);
  CHECK(out.find("mt19937_64") != std::string::npos);
}

TEST_CASE("precondition violations exit with code 3") {
  CHECK(run("trap --epsilon 0.5 -o " + (work_dir() / "x.csv").string()) == 3);
  CHECK(run("trap --t-end -1 -o " + (work_dir() / "x.csv").string()) == 3);
  CHECK(run("rabi --omega-l-hz 0 -o " + (work_dir() / "x.csv").string()) == 3);
  CHECK(run("readout --bright-mean 0.1 --dark-mean 10 -o " +
            (work_dir() / "x.json").string()) == 3);
  CHECK(run("init --p-ground 0.8 --p-dark 0.5 -o " + (work_dir() / "x.csv").string()) ==
        3);
}

TEST_CASE("seed determinism yields identical output bytes") {
  const auto f1 = work_dir() / "ro1.json";
  const auto f2 = work_dir() / "ro2.json";
  CHECK(run("readout --shots 3000 --seed 7 -o " + f1.string()) == 0);
  CHECK(run("readout --shots 3000 --seed 7 -o " + f2.string()) == 0);
  const auto a = slurp(f1), b = slurp(f2);
  CHECK(!a.empty());
  CHECK(a == b);
  const auto f3 = work_dir() / "ro3.json";
  CHECK(run("readout --shots 3000 --seed 8 -o " + f3.string()) == 0);
  CHECK(slurp(f3) != a);
}

TEST_CASE("trap oracle deviation stays within 5% of x0") {
  const auto out = work_dir() / "trap.csv";
  CHECK(run("trap --oracle --t-end 1.4e-5 -o " + out.string()) == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t_s,x_m,deviation_m");
  double max_dev = 0.0;
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    max_dev = std::max(max_dev, std::abs(std::stod(line.substr(c2 + 1))));
    ++rows;
  }
  CHECK(rows == 2000);
  CHECK(max_dev <= 0.05 * 1e-5); // default x0 = 1e-5
}

TEST_CASE("rabi CSV in both mode carries the comparison columns") {
  const auto out = work_dir() / "rabi.csv";
  CHECK(run("rabi --mode both --omega-l-hz 1e6 --omega-r-hz 1e4 --t-end 1e-4 "
            "--samples 51 -o " +
            out.string()) == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t_s,p0,p1,p1_rwa,p1_full,abs_diff");
  // P1 columns stay close at this omega_r / omega_l
  std::string line;
  while (std::getline(in, line)) {
    const auto last = line.rfind(',');
    CHECK(std::stod(line.substr(last + 1)) < 0.05);
  }
}

TEST_CASE("cz matrix output is diag(1,1,1,-1)") {
  const auto out = work_dir() / "cz.json";
  CHECK(run("cz --input 11 --matrix --show-steps -o " + out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  const auto& m = doc.at("matrix");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double re = m[i][j][0].get<double>();
      const double im = m[i][j][1].get<double>();
      const double expect = (i == j) ? (i == 3 ? -1.0 : 1.0) : 0.0;
      CHECK(re == expect);
      CHECK(im == 0.0);
    }
  CHECK(doc.at("steps").size() == 3);
  CHECK(doc.at("output").at("|11,0>")[0].get<double>() == -1.0);
}

TEST_CASE("cz bell demo outputs the Bell pair") {
  const auto out = work_dir() / "bell.json";
  CHECK(run("cz --input bell-demo -o " + out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(doc.at("output").at("|00,0>")[0].get<double>() == doctest::Approx(r));
  CHECK(doc.at("output").at("|11,0>")[0].get<double>() == doctest::Approx(r));
}

TEST_CASE("init CSV matches the absorbing-chain decay") {
  const auto out = work_dir() / "init.csv";
  CHECK(run("init --cycles 5 --shots 20000 --seed 3 -o " + out.string()) == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "cycle,residual");
  std::string line;
  int k = 0;
  while (std::getline(in, line)) {
    ++k;
    const double residual = std::stod(line.substr(line.find(',') + 1));
    const double expect = std::pow(2.0 / 3.0, k);
    CHECK(residual == doctest::Approx(expect).epsilon(0.15));
  }
  CHECK(k == 5);
}

TEST_CASE("cool subcommand emits both trace formats") {
  const auto dop = work_dir() / "cool_doppler.csv";
  CHECK(run("cool --mode doppler --n-ions 20 --steps 30 -o " + dop.string()) == 0);
  std::ifstream din(dop);
  std::string header;
  std::getline(din, header);
  CHECK(header == "step,mean_ke_j");

  const auto side = work_dir() / "cool_sideband.csv";
  CHECK(run("cool --mode sideband --n0 2 -o " + side.string()) == 0);
  const auto text = slurp(side);
  CHECK(text.find("step,internal,n_phonon,e_chain_j") == 0);
  CHECK(text.find("4,g,0,") != std::string::npos); // ladder ends at |g,0>
}

TEST_CASE("mixer run reports a small max error") {
  const auto out = work_dir() / "mixer.csv";
  std::string stdout_text;
  CHECK(run_capture("mixer --phi 0.7 -o " + out.string(), stdout_text) == 0);
  const auto doc = nlohmann::json::parse(stdout_text);
  CHECK(doc.at("max_error").get<double>() <= 1e-3);
  CHECK(doc.at("recovered_phi").get<double>() == doctest::Approx(0.7).epsilon(1e-3));
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t_s,vg,target,error");
}

TEST_CASE("terms subcommand lists the p^2 manifold") {
  const auto out = work_dir() / "terms.json";
  CHECK(run("terms --shells p,p -o " + out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc.at("count").get<int>() == 10);
}

TEST_CASE("golden suite passes and honors --filter") {
  std::string out;
  CHECK(run_capture("golden", out) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(run_capture("golden --filter atomic", out) == 0);
  CHECK(out.find("[atomic]") != std::string::npos);
  CHECK(out.find("[trap]") == std::string::npos);
}

TEST_CASE("output directory env var supplies the default location") {
  const auto dir = work_dir() / "envout";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cmd = std::string("IONSIM_OUTPUT_DIR=") + dir.string() + " " +
                          CLI_BIN + " terms >/dev/null 2>/dev/null";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(fs::exists(dir / "terms.json"));
}
