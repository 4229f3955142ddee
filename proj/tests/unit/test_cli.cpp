#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nfftlab/cli.hpp"

using namespace nfftlab;
using namespace nfftlab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"nfftlab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string p;
  while (std::getline(ss, p, ',')) parts.push_back(p);
  return parts;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("list parsing") {
  CHECK(parse_int_list("2..6") == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(parse_int_list("2, 4") == std::vector<int>{2, 4});
  CHECK(parse_real_list("1.25,1.5,2") == std::vector<double>{1.25, 1.5, 2.0});
  CHECK(parse_window_list("ckb,sinh").size() == 2);
  CHECK_THROWS_AS(parse_int_list("6..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_list("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window_list("gauss"), std::invalid_argument);
}

TEST_CASE("shortest round-trip formatting") {
  for (double x : {0.1, 8.069951757030463e-05, 1.0 / 3.0, 5.255485176006454e-13}) {
    CHECK(std::stod(format_number(x)) == x);
  }
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("table1 examples") {
  const auto r = run_cli({"table1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("# nfftlab version=", 0) == 0);
  CHECK(r.out.find("method=poisson") != std::string::npos);
  CHECK(r.out.find("r_max=64") != std::string::npos);
  CHECK(r.out.find("x_grid=2048") != std::string::npos);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "m,sigma,beta,exp_minus_beta");
  const auto row2 = split(lines[1]);
  const auto row5 = split(lines[4]);
  CHECK(agrees_to_digits(std::stod(row2[3]), 8.06e-5, 3));
  CHECK(agrees_to_digits(std::stod(row5[3]), 5.85e-11, 3));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split(lines[i]);
    const double m = std::stod(row[0]), sigma = std::stod(row[1]);
    CHECK(std::stod(row[2]) == doctest::Approx(std::numbers::pi * m * (2.0 - 1.0 / sigma)).epsilon(1e-15));
  }
}

TEST_CASE("table2 examples") {
  const auto r = run_cli({"table2"});
  CHECK(r.code == kExitOk);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(agrees_to_digits(std::stod(split(lines[2])[2]), 5.08e-3, 3));
  CHECK(agrees_to_digits(std::stod(split(lines[3])[2]), 2.84e-3, 3));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    CHECK(std::stod(split(lines[i])[2]) < std::stod(split(lines[i - 1])[2]));
  }
}

TEST_CASE("figure71 examples and companion file") {
  const auto dir = std::filesystem::temp_directory_path() / "nfftlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "fig.csv").string();
  const auto r = run_cli({"figure71", "--windows", "ckb,kb,sinh", "--out", out.c_str()});
  CHECK(r.code == kExitOk);
  const auto main = data_lines(slurp(dir / "fig.csv"));
  CHECK(main[0] == "window,sigma,m,N,estimate,tail_slack");
  CHECK(main.size() == 1 + 3 * 3 * 5);
  const auto find = [&](const std::string& prefix) {
    for (const auto& l : main) {
      if (l.rfind(prefix, 0) == 0) return std::stod(split(l)[4]);
    }
    return -1.0;
  };
  CHECK(std::fabs(find("ckb,1.5,3,") / 4.2453e-4 - 1.0) <= 0.02);
  CHECK(std::fabs(find("sinh,1.25,6,") / 4.2561e-6 - 1.0) <= 0.02);
  CHECK(std::fabs(find("kb,2,2,") / 3.1539e-3 - 1.0) <= 0.02);
  const auto ref = data_lines(slurp(dir / "fig_reference.csv"));
  CHECK(ref[0] == "curve,window,sigma,m,reference,estimate,rel_deviation,within_tolerance");
  CHECK(ref.size() == 1 + 45);
}

TEST_CASE("bounds-report JSON") {
  const auto r = run_cli({"bounds-report", "--windows", "ckb,kb,sinh,rect", "--sigma", "1.5,2"});
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4 * 2 * 5);
  bool all = true;
  for (const auto& item : j) {
    all = all && item["dominated"].get<bool>();
    if (item["window"] != "rect") CHECK(item["slack_ratio"].get<double>() >= 1.0);
    CHECK(item.contains("bound_value"));
    CHECK(item.contains("tail_slack"));
  }
  CHECK(all);
  CHECK(r.code == kExitOk);
}

TEST_CASE("nfft-demo examples") {
  const auto r = run_cli({"nfft-demo", "--windows", "sinh", "--m", "2,4", "--M", "1000",
                          "--seed", "42"});
  CHECK(r.code == kExitOk);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 3);
  const auto m2 = split(lines[1]);
  const auto m4 = split(lines[2]);
  CHECK(m4.back() == "true");
  CHECK(std::stod(m2[6]) >= 10.0 * std::stod(m4[6]));
}

TEST_CASE("identical configuration gives byte-identical output") {
  const auto a = run_cli({"nfft-demo", "--windows", "kb,ckb", "--m", "3", "--seed", "7"});
  const auto b = run_cli({"nfft-demo", "--windows", "kb,ckb", "--m", "3", "--seed", "7"});
  CHECK(a.out == b.out);
  const auto c = run_cli({"error-constant", "--windows", "sinh", "--m", "2", "--format", "json"});
  const auto d = run_cli({"error-constant", "--windows", "sinh", "--m", "2", "--format", "json"});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"bogus"}).code == kExitUsage);
  CHECK(run_cli({"table1", "--N", "7"}).code == kExitUsage);
  CHECK(run_cli({"table1", "--sigma", "1.3"}).code == kExitUsage);
  CHECK(run_cli({"table1", "--method", "exact"}).code == kExitUsage);
  CHECK(run_cli({"figure71", "--format", "xml"}).code == kExitUsage);
  CHECK(run_cli({"table1", "--unknown"}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == kExitOk);
  // The Rect bracket fails at sigma = 1.25, which the report flags with exit code 1.
  CHECK(run_cli({"bounds-report", "--windows", "rect", "--sigma", "1.25", "--m", "2"}).code ==
        kExitCheckFailed);
}

TEST_CASE("self-check passes") {
  const auto r = run_cli({"self-check"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find(",false") == std::string::npos);
}
