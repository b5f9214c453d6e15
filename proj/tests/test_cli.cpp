#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
  int status = -1;
  std::string out, err;
};

// runs the CLI with stderr captured to a temporary file
Run run(const std::string& args) {
  static int counter = 0;
  const auto err_path =
      std::filesystem::temp_directory_path() / ("newton_osc_cli_" + std::to_string(::getpid()) + "_" +
                                                std::to_string(counter++) + ".err");
  const std::string cmd = std::string("\"") + NEWTON_OSC_CLI + "\" " + args + " 2>\"" + err_path.string() + "\"";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace

TEST_CASE("analyze succeeds and prints the report") {
  const auto r = run("analyze --dim 2 --phase \"x1^2*x2^2\"");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("predictions").at("main").at("exponent") == "1/2");
  CHECK(j.at("predictions").at("main").at("log_power") == 1);
  CHECK(run("analyze --dim 2 --phase \"x1^2*x2^2\"").out == r.out);
}

TEST_CASE("input errors exit with 2") {
  for (const char* args : {"analyze --dim 2 --phase \"x1^^2\"", "analyze --dim 2 --phase \"x3^2\"",
                           "analyze --dim 2 --phase 0", "analyze --dim 2", "analyze --dim 2 --phase x1^2 --bogus",
                           "frobnicate", "analyze --dim 2 --phase \"x1^2*x2\" --beta 1,2,3",
                           "sublevel --alpha 2,1 --u -1"}) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.status == 2);
    if (r.err.find('{') != std::string::npos) {
      const auto j = nlohmann::json::parse(r.err);
      CHECK(j.at("error").at("exit_code") == 2);
    }
  }
}

TEST_CASE("hypothesis failures exit with 3 and carry the witness") {
  auto r = run("analyze --dim 2 --phase \"x1^2+2*x1*x2+x2^2\"");
  CHECK(r.status == 3);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j.at("error").at("kind") == "hypothesis");
  CHECK(j.at("error").at("witness").at("point") == nlohmann::json::array({"1", "-1"}));
  CHECK(r.out.empty());

  r = run("analyze --dim 2 --phase \"x1+x2^2\"");
  CHECK(r.status == 3);
  r = run("charts --dim 1 --phase 7");
  CHECK(r.status == 3);
}

TEST_CASE("verify exits with 5 when the fit is outside the tolerance") {
  auto r = run("verify --dim 1 --phase \"x1^2\" --lmax 1e4 --lpoints 10 --fit-tol 1e-9");
  CHECK(r.status == 5);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("verification").at("within_tolerance") == false);
  r = run("verify --dim 1 --phase \"x1^2\" --lmax 1e4 --lpoints 10");
  CHECK(r.status == 0);
  r = run("verify --dim 1 --phase \"x1^2\" --lmax 1e4 --lpoints 10 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("lambda,re,im,abs,nodes_per_axis,converged\n", 0) == 0);
}

TEST_CASE("charts subcommand") {
  const auto r = run("charts --dim 2 --phase \"x1^3+x2^2\"");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("charts").size() == 4);
  CHECK(!j.contains("predictions"));
}

TEST_CASE("sublevel CSV") {
  const auto r = run("sublevel --alpha 1,1 --u 1/4,1/100,2 --samples 20000 --seed 3");
  CHECK(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "# alpha=1,1 samples=20000 seed=3");
  std::getline(is, line);
  CHECK(line == "# measure(u) = u + u*log(1/u)");
  std::getline(is, line);
  CHECK(line == "u,exact_value,float_value,monte_carlo_value,mc_stderr");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 3);
  CHECK(run("sublevel --alpha 1,1 --u 1/4,1/100,2 --samples 20000 --seed 3").out == r.out);
}

TEST_CASE("output flag writes the file") {
  const auto path = std::filesystem::temp_directory_path() / ("newton_osc_cli_out_" + std::to_string(::getpid()));
  const auto r = run("analyze --dim 2 --phase \"x1^2+x2^2\" --output \"" + path.string() + "\"");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("distance").at("d_f") == "1");
  std::filesystem::remove(path);
}
