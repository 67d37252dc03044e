#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fpa/io.hpp"
#include "fpa/shuffle.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace fpa;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FPA_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
    output.append(buffer, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

fs::path sandbox() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "fpa_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = sandbox() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("shuffle command output is the library serialization, byte for byte") {
  const std::string a =
      write_file("a.ncfps", "nc m=2 comps=1 N=4\ne 1\nx1 -1\n");
  const std::string b =
      write_file("b.ncfps", "nc m=2 comps=1 N=4\ne 1\nx1x2 1\n");
  const std::string out = (sandbox() / "out.ncfps").string();

  auto r = run_cli("shuffle " + a + " " + b + " -N 4 -o " + out);
  CHECK(r.exit_code == 0);

  NCSeries expect =
      shuffle(load_nc_file(a), load_nc_file(b), 4);
  CHECK(read_file(out) == serialize_nc(expect));
  CHECK(expect.coeff(Word{1, 1, 2}) == -2);  // the golden product landed
}

TEST_CASE("static feedback command reproduces the k! natural part") {
  std::ostringstream plant;
  plant << "nc m=1 comps=1 N=6\n";
  std::string word = "e";
  plant << "e 1\n";
  for (int k = 1; k <= 6; ++k) {
    word = (k == 1) ? "x1" : word + "x1";
    plant << word << " 1\n";
  }
  const std::string c = write_file("star.ncfps", plant.str());
  const std::string d =
      write_file("ident.cfps", "comm vars=1 comps=1 N=poly\n1 1\n");
  const std::string out = (sandbox() / "closed.ncfps").string();

  auto r = run_cli("feedback --static " + c + " " + d + " -N 6 -o " + out);
  REQUIRE(r.exit_code == 0);
  NCSeries closed = load_nc_file(out);
  Rat expected(1);
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) expected *= k;
    CHECK(closed.coeff(Word::x0_power(k)) == expected);
  }

  // fixed-point route through the CLI agrees byte for byte
  const std::string out2 = (sandbox() / "closed_fp.ncfps").string();
  auto r2 = run_cli("fixed-point " + c + " " + d + " -N 6 -o " + out2);
  CHECK(r2.exit_code == 0);
  CHECK(read_file(out2) == read_file(out));
}

TEST_CASE("exit codes: parse error, inadmissible pair, unknown flag") {
  const std::string bad = write_file("bad.ncfps", "garbage\n");
  const std::string good =
      write_file("good.ncfps", "nc m=1 comps=1 N=4\ne 1\nx1 1\n");
  const std::string trunc_map =
      write_file("trunc.cfps", "comm vars=1 comps=1 N=4\n1 1\n");
  const std::string out = (sandbox() / "never.ncfps").string();

  auto parse_fail = run_cli("shuffle " + bad + " " + good + " -N 4 -o " + out);
  CHECK(parse_fail.exit_code == 1);
  CHECK_FALSE(fs::exists(out));  // no partial output

  // non-proper plant with a truncated (non-polynomial) map
  auto inadmissible =
      run_cli("feedback --static " + good + " " + trunc_map + " -N 4 -o " + out);
  CHECK(inadmissible.exit_code == 2);
  CHECK_FALSE(fs::exists(out));

  auto unknown = run_cli("shuffle " + good + " " + good + " --no-such-flag");
  CHECK(unknown.exit_code != 0);
  CHECK(unknown.output.find("Usage") != std::string::npos);
}

TEST_CASE("reldeg, norm, fit-growth reports") {
  const std::string pend = write_file(
      "pend.ncfps",
      "nc m=1 comps=1 N=6\nx0 1\nx0x1 1\nx0x0x0 -1\nx0x0x0x1 -1\n"
      "x0x0x0x0x0 2\nx0x0x0x0x0x1 4\nx0x0x0x0x1x0 2\nx0x0x0x1x0x0 1\n");
  auto rd = run_cli("reldeg " + pend);
  CHECK(rd.exit_code == 0);
  CHECK(rd.output.find("r = 2") != std::string::npos);

  auto nm = run_cli("norm " + pend + " -R 2");
  CHECK(nm.exit_code == 0);
  CHECK(nm.output.find("seminorm") != std::string::npos);

  auto fit = run_cli("fit-growth " + pend + " --gevrey 1 --json");
  CHECK(fit.exit_code == 0);
  auto j = nlohmann::json::parse(fit.output);
  CHECK(j["command"] == "fit-growth");
  CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("check-bounds passes its grids") {
  auto r = run_cli("check-bounds --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  for (const auto& check : j["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("pendulum demo") {
  auto r = run_cli("pendulum-demo -N 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= x0 + x0x1") != std::string::npos);
  CHECK(r.output.find("simulation error") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("simulate writes a CSV") {
  const std::string c =
      write_file("dbl.ncfps", "nc m=1 comps=1 N=2\nx0 1\nx0x1 1\n");
  const std::string out = (sandbox() / "sim.csv").string();
  auto r = run_cli("simulate " + c + " --input const:1 -T 0.3 --dt 0.001 -o " +
                   out);
  CHECK(r.exit_code == 0);
  std::istringstream csv(read_file(out));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,y1");
  std::string line, last;
  while (std::getline(csv, line))
    if (!line.empty()) last = line;
  // y(0.3) = 0.3 + 0.3^2/2 = 0.345
  const auto comma = last.find(',');
  CHECK(std::stod(last.substr(comma + 1)) == doctest::Approx(0.345).epsilon(1e-5));
}

TEST_CASE("simulate accepts CSV input") {
  const std::string c =
      write_file("dbl2.ncfps", "nc m=1 comps=1 N=2\nx0 1\nx0x1 1\n");
  std::ostringstream csv;
  csv << "t,u1\n";
  for (int k = 0; k <= 300; ++k) csv << 1e-3 * k << ",1\n";
  const std::string u = write_file("input.csv", csv.str());
  const std::string out = (sandbox() / "sim_csv.csv").string();
  auto r = run_cli("simulate " + c + " --input-csv " + u + " -o " + out);
  CHECK(r.exit_code == 0);
  std::istringstream result(read_file(out));
  std::string line, last;
  while (std::getline(result, line))
    if (!line.empty()) last = line;
  const auto comma = last.find(',');
  CHECK(std::stod(last.substr(comma + 1)) == doctest::Approx(0.345).epsilon(1e-5));

  const std::string ragged = write_file("ragged.csv", "t,u1\n0,1\n0.5,1\n0.6,1\n");
  auto bad = run_cli("simulate " + c + " --input-csv " + ragged + " -o " + out);
  CHECK(bad.exit_code == 1);
}
