#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "twoxor/verify.hpp"

using namespace twoxor;

TEST_CASE("all suites pass") {
  const VerifyReport report = run_verify({});
  std::ostringstream out;
  print_report(out, report);
  INFO(out.str());
  CHECK(report.passed());
  CHECK(exit_code(report) == 0);
  CHECK(out.str().find("status=FAIL") == std::string::npos);
  for (const auto& name : verify_suite_names()) CHECK(out.str().find("suite=" + name) != std::string::npos);
}

TEST_CASE("suite selection") {
  const VerifyReport report = run_verify({"sequences"});
  REQUIRE_FALSE(report.checks.empty());
  for (const auto& c : report.checks) CHECK(c.suite == "sequences");
  CHECK_THROWS_AS(run_verify({"nope"}), std::invalid_argument);
}

TEST_CASE("a corrupted table is reported") {
  const auto eps = epsilon_seq(100);
  const auto f = f_seq(100);
  const auto c = wright_c_seq(100);
  VerifyReport clean;
  clean.append(check_sequence_tables(eps, f, c));
  CHECK(exit_code(clean) == 0);

  auto values = f.values();
  values[37] += Rational(1, 1000000);
  const SequenceTable bad(f.kind(), f.first_index(), values);
  VerifyReport report;
  report.append(check_sequence_tables(eps, bad, c));
  CHECK_FALSE(report.passed());
  CHECK(exit_code(report) == 1);
  std::ostringstream out;
  print_report(out, report);
  CHECK(out.str().find("status=FAIL") != std::string::npos);
  CHECK(out.str().find("FAILED") != std::string::npos);
}
