#include "twoxor/sequences.hpp"

#include <stdexcept>

namespace twoxor {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string SequenceTable::name() const {
  switch (kind_) {
    case SequenceKind::Epsilon: return "epsilon";
    case SequenceKind::F: return "f";
    case SequenceKind::WrightC: return "wright_c";
    case SequenceKind::FTruncated: return "f_truncated_L" + std::to_string(truncation_);
  }
  return "?";
}

SequenceTable epsilon_seq(std::size_t max_r) {
  std::vector<Rational> eps;
  eps.reserve(max_r + 1);
  for (unsigned long r = 0; r <= max_r; ++r) {
    BigInt num, f3, f2;
    mpz_fac_ui(num.get_mpz_t(), 6 * r);
    mpz_fac_ui(f3.get_mpz_t(), 3 * r);
    mpz_fac_ui(f2.get_mpz_t(), 2 * r);
    BigInt pow2, pow3;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 5 * r);
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, 2 * r);
    Rational q(num, pow2 * pow3 * f3 * f2);
    q.canonicalize();
    eps.push_back(std::move(q));
  }
  return SequenceTable(SequenceKind::Epsilon, 0, std::move(eps));
}

SequenceTable f_seq(std::size_t max_r) {
  const auto eps = epsilon_seq(max_r);
  std::vector<Rational> f{Rational(1)};
  f.reserve(max_r + 1);
  for (std::size_t r = 1; r <= max_r; ++r) {
    Rational conv = 0;
    for (std::size_t k = 1; k < r; ++k) conv += f[k] * f[r - k];
    Rational fr = (eps[r] - conv) / 2;
    const Rational upper = eps[r] / 2;
    const Rational lower = upper * Rational(static_cast<long>(r) - 1, static_cast<long>(r));
    if (fr < lower || fr > upper) {
      throw std::logic_error("f_" + std::to_string(r) + " violates (eps_r/2)(1-1/r) <= f_r <= eps_r/2");
    }
    f.push_back(std::move(fr));
  }
  return SequenceTable(SequenceKind::F, 0, std::move(f));
}

SequenceTable wright_c_seq(std::size_t max_r) {
  if (max_r < 1) throw std::invalid_argument("wright_c_seq needs max_r >= 1");
  const auto eps = epsilon_seq(max_r);
  std::vector<Rational> c;  // c[k-1] holds c_k
  c.reserve(max_r);
  for (std::size_t r = 1; r <= max_r; ++r) {
    Rational rest = 0;
    for (std::size_t k = 1; k < r; ++k) rest += static_cast<long>(k) * c[k - 1] * eps[r - k];
    Rational cr = (static_cast<long>(r) * eps[r] - rest) / static_cast<long>(r);
    c.push_back(std::move(cr));
  }
  return SequenceTable(SequenceKind::WrightC, 1, std::move(c));
}

SequenceTable f_truncated_seq(std::size_t truncation, std::size_t max_r) {
  if (truncation < 1) throw std::invalid_argument("f_truncated_seq needs L >= 1");
  const auto c = wright_c_seq(truncation);
  std::vector<Rational> f{Rational(1)};
  f.reserve(max_r + 1);
  for (std::size_t r = 1; r <= max_r; ++r) {
    Rational sum = 0;
    const std::size_t upto = std::min(r, truncation);
    for (std::size_t k = 1; k <= upto; ++k) sum += static_cast<long>(k) * c[k] * f[r - k];
    Rational fr = sum / (2 * static_cast<long>(r));
    f.push_back(std::move(fr));
  }
  return SequenceTable(SequenceKind::FTruncated, 0, std::move(f), truncation);
}

}  // namespace twoxor
