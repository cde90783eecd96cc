#include <doctest.h>

#include <cmath>
#include <numbers>

#include "twoxor/sequences.hpp"

using namespace twoxor;

namespace {

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// eps_r straight from the factorial formula.
Rational epsilon_direct(unsigned long r) {
  BigInt den = factorial(3 * r) * factorial(2 * r);
  BigInt p2, p3;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 5 * r);
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, 2 * r);
  den *= p2 * p3;
  Rational q(factorial(6 * r), den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("golden values") {
  const auto eps = epsilon_seq(3);
  const auto f = f_seq(3);
  const auto c = wright_c_seq(3);
  CHECK(eps[0] == 1);
  CHECK(eps[1] == Rational(5, 24));
  CHECK(eps[2] == Rational(385, 1152));
  CHECK(f[0] == 1);
  CHECK(f[1] == Rational(5, 48));
  CHECK(f[2] == Rational(745, 4608));
  CHECK(c[1] == Rational(5, 24));
  CHECK(c[2] == Rational(5, 16));
  CHECK(c.first_index() == 1);
  CHECK(eps.first_index() == 0);
  CHECK(to_fraction_string(f[2]) == "745/4608");
  CHECK(to_fraction_string(eps[0]) == "1/1");
}

TEST_CASE("epsilon matches the factorial formula") {
  const auto eps = epsilon_seq(60);
  for (unsigned long r = 0; r <= 60; ++r) REQUIRE(eps[r] == epsilon_direct(r));
}

TEST_CASE("square-root identity and two-sided bound up to r = 100") {
  const auto eps = epsilon_seq(100);
  const auto f = f_seq(100);
  for (std::size_t r = 1; r <= 100; ++r) {
    Rational conv = 0;
    for (std::size_t k = 0; k <= r; ++k) conv += f[k] * f[r - k];
    REQUIRE(conv == eps[r]);
    const Rational hi = eps[r] / 2;
    REQUIRE(f[r] <= hi);
    REQUIRE(f[r] >= hi * Rational(static_cast<long>(r) - 1, static_cast<long>(r)));
    REQUIRE(sgn(f[r]) > 0);
  }
}

TEST_CASE("Wright coefficients") {
  const auto eps = epsilon_seq(60);
  const auto c = wright_c_seq(60);
  for (std::size_t r = 1; r <= 60; ++r) {
    Rational rhs = 0;
    for (std::size_t k = 1; k <= r; ++k) rhs += static_cast<long>(k) * c[k] * eps[r - k];
    REQUIRE(rhs == static_cast<long>(r) * eps[r]);
    REQUIRE(sgn(c[r]) > 0);
  }
  // c_r ~ (2 pi)^{-1} (3/2)^r (r-1)!
  const double r = 40;
  const double log_lead = -std::log(2 * std::numbers::pi) + r * std::log(1.5) + std::lgamma(r);
  const double log_c = std::log(c[40].get_d());
  CHECK(std::abs(std::exp(log_c - log_lead) - 1) <= 0.1);
}

TEST_CASE("truncated sequences") {
  const auto f = f_seq(40);
  for (std::size_t L = 1; L <= 10; ++L) {
    const auto fl = f_truncated_seq(L, 40);
    CHECK(fl.truncation() == L);
    for (std::size_t r = 0; r <= 40; ++r) {
      if (r <= L) REQUIRE(fl[r] == f[r]);
      REQUIRE(fl[r] <= f[r]);
      REQUIRE(sgn(fl[r]) > 0);
    }
  }
  // Growth: (f_r^L)^{1/r} <= 2 (3L / 2e) for r <= 4L.
  for (std::size_t L : {10, 12}) {
    const auto fl = f_truncated_seq(L, 4 * L);
    const double bound = 2 * 3.0 * static_cast<double>(L) / (2 * std::numbers::e);
    for (std::size_t r = 1; r <= 4 * L; ++r)
      REQUIRE(std::pow(fl[r].get_d(), 1.0 / static_cast<double>(r)) <= bound);
  }
}

TEST_CASE("prefixes are reproduced exactly") {
  const auto long_f = f_seq(50);
  const auto short_f = f_seq(20);
  const auto long_c = wright_c_seq(50);
  const auto short_c = wright_c_seq(20);
  for (std::size_t r = 0; r <= 20; ++r) REQUIRE(long_f[r] == short_f[r]);
  for (std::size_t r = 1; r <= 20; ++r) REQUIRE(long_c[r] == short_c[r]);
  CHECK(long_f.size() == 51);
  CHECK(long_c.size() == 50);
  CHECK(epsilon_seq(0).size() == 1);
  CHECK(long_f.name() != long_c.name());
}
