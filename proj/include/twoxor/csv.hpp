#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twoxor/montecarlo.hpp"
#include "twoxor/theory.hpp"

namespace twoxor {

/// Shortest round-trip-safe rendering with 17 significant digits,
/// independent of the global locale. Non-finite values print as "nan",
/// "inf" or "-inf".
std::string format_double(double x);

inline constexpr const char* kSimulateHeader = "model,n,lambda,phat,method,samples,seed,mean,stderr,theory,ratio,z";
inline constexpr const char* kTheoryHeader = "lambda,c,c1,n,prediction_half,prediction_ones";

struct SimulateRow {
  Estimate estimate;
  double theory = 0.0;  // NaN when no prediction applies
  Comparison comparison;
};

void write_simulate_row(std::ostream& out, const SimulateRow& row);

struct TheoryRow {
  double lambda = 0.0;
  std::size_t n = 0;
  double c = 0.0;
  double c1 = 0.0;
  double prediction_half = 0.0;
  double prediction_ones = 0.0;
};

void write_theory_row(std::ostream& out, const TheoryRow& row);

/// Splits "a,b,c" into fields (no quoting; the schemas here never need it).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace twoxor
