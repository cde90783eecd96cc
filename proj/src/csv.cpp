#include "twoxor/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace twoxor {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_simulate_row(std::ostream& out, const SimulateRow& row) {
  const auto& e = row.estimate;
  out << to_string(e.model.model) << ',' << e.model.n << ',' << format_double(e.model.lambda) << ','
      << format_double(e.model.phat) << ',' << to_string(e.method) << ',' << e.samples << ','
      << e.seed.master_seed << ',' << format_double(e.mean) << ',' << format_double(e.std_error) << ','
      << format_double(row.theory) << ',' << format_double(row.comparison.ratio) << ','
      << format_double(row.comparison.z) << '\n';
}

void write_theory_row(std::ostream& out, const TheoryRow& row) {
  out << format_double(row.lambda) << ',' << format_double(row.c) << ',' << format_double(row.c1) << ','
      << row.n << ',' << format_double(row.prediction_half) << ',' << format_double(row.prediction_ones)
      << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace twoxor
