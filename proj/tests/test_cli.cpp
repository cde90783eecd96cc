#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "twoxor/cli.hpp"
#include "twoxor/csv.hpp"
#include "twoxor/theory.hpp"

using namespace twoxor;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twoxor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("csv helpers") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(-INFINITY) == "-inf");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
  CHECK(split_csv_line("a,b,,c") == std::vector<std::string>{"a", "b", "", "c"});
}

TEST_CASE("theory subcommand") {
  const Run one = run({"theory", "--n", "100000", "--lambda", "0"});
  REQUIRE(one.code == kExitOk);
  const auto l = lines(one.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == kTheoryHeader);
  const auto f = split_csv_line(l[1]);
  REQUIRE(f.size() == 6);
  CHECK(std::stod(f[1]) == doctest::Approx(c_lambda(0.0)).epsilon(1e-12));
  CHECK(std::stod(f[5]) / std::stod(f[4]) == doctest::Approx(bipartite_factor()).epsilon(1e-12));

  const Run grid = run({"theory", "--grid-n", "1000,100000", "--grid-lambda", "-1,0,1"});
  REQUIRE(grid.code == kExitOk);
  CHECK(lines(grid.out).size() == 7);

  CHECK(run({"theory", "--lambda", "0"}).code == kExitUsage);
  const Run far = run({"theory", "--n", "1000", "--lambda", "40"});
  CHECK(far.code == kExitOk);
  CHECK(far.err.find("warning") != std::string::npos);
}

TEST_CASE("simulate subcommand") {
  const std::vector<std::string> args = {"simulate", "--n", "2000", "--lambda", "0", "--samples", "200", "--seed", "9"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto l = lines(a.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == kSimulateHeader);
  const auto f = split_csv_line(l[1]);
  REQUIRE(f.size() == 12);
  CHECK(f[0] == "gnp");
  CHECK(f[6] == "9");
  const double mean = std::stod(f[7]);
  CHECK(mean > 0.2);
  CHECK(mean < 0.8);
  CHECK(std::stod(f[9]) > 0.0);

  CHECK(run({"simulate", "--n", "2000", "--lambda", "0", "--samples", "200", "--seed", "10"}).out != a.out);
  CHECK(run({"simulate", "--n", "100", "--lambda", "0", "--samples", "0"}).code == kExitUsage);
  CHECK(run({"simulate", "--n", "100", "--lambda", "0", "--phat", "0.3"}).code == kExitUsage);
  CHECK(run({"simulate", "--n", "100", "--lambda", "0", "--model", "bogus"}).code == kExitUsage);

  const Run ind = run({"simulate", "--n", "100", "--lambda", "0", "--samples", "50", "--phat", "0.3", "--method",
                       "indicator"});
  REQUIRE(ind.code == kExitOk);
  CHECK(split_csv_line(lines(ind.out)[1])[9] == "nan");
}

TEST_CASE("enumerate subcommand") {
  const Run r = run({"enumerate", "--n", "4"});
  REQUIRE(r.code == kExitOk);
  const auto l = lines(r.out);
  CHECK(l[0] == "n,m,count");
  bool seen = false;
  for (const auto& line : l) seen = seen || line == "4,3,16";
  CHECK(seen);
  CHECK(run({"enumerate"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  const Run r = run({"verify", "--suite", "sequences"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("suite=sequences") != std::string::npos);
  CHECK(r.out.find("suite=graph") == std::string::npos);
  CHECK(r.out.find("status=FAIL") == std::string::npos);
  CHECK(run({"verify", "--suite", "nonsense"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);

  const std::string path = "twoxor_cli_sequences.csv";
  REQUIRE(run({"verify", "--suite", "sequences", "--out", path}).code == kExitOk);
  std::ifstream in(path);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "r,epsilon,f,c");
  CHECK(row2 == "1,5/24,5/48,5/24");
  in.close();
  std::remove(path.c_str());
}
