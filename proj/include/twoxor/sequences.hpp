#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twoxor {

/// Exact reduced fraction with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

std::string to_fraction_string(const Rational& q);  // "num/den", "num/1" for integers

enum class SequenceKind { Epsilon, F, WrightC, FTruncated };

/// Eagerly computed, immutable table of one coefficient sequence.
///
/// `first_index()` is 0 for every kind except WrightC, which starts at 1;
/// `truncation()` is the cutoff L for FTruncated and 0 otherwise.
class SequenceTable {
 public:
  SequenceTable(SequenceKind kind, std::size_t first, std::vector<Rational> values,
                std::size_t truncation = 0)
      : kind_(kind), first_(first), truncation_(truncation), values_(std::move(values)) {}

  SequenceKind kind() const noexcept { return kind_; }
  std::size_t first_index() const noexcept { return first_; }
  std::size_t last_index() const noexcept { return first_ + values_.size() - 1; }
  std::size_t truncation() const noexcept { return truncation_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at sequence index r (not the storage offset).
  const Rational& operator[](std::size_t r) const { return values_.at(r - first_); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  std::string name() const;

 private:
  SequenceKind kind_;
  std::size_t first_;
  std::size_t truncation_;
  std::vector<Rational> values_;
};

/// eps_r = (6r)! / (2^{5r} 3^{2r} (3r)! (2r)!), r = 0..max_r.
SequenceTable epsilon_seq(std::size_t max_r);

/// f_0 = 1 and sum_{k=0}^r f_k f_{r-k} = eps_r, i.e. (sum f_r x^r)^2 = sum eps_r x^r.
/// Checks (eps_r/2)(1 - 1/r) <= f_r <= eps_r/2 for every computed r >= 1 and
/// throws std::logic_error if it fails.
SequenceTable f_seq(std::size_t max_r);

/// Wright's leading coefficients c_1..c_max_r from r eps_r = sum_{k=1}^r k c_k eps_{r-k}.
SequenceTable wright_c_seq(std::size_t max_r);

/// Truncated sequence: f_0^L = 1, r f_r^L = (1/2) sum_{k=1}^{min(r,L)} k c_k f_{r-k}^L.
SequenceTable f_truncated_seq(std::size_t truncation, std::size_t max_r);

}  // namespace twoxor
