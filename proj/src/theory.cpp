#include "twoxor/theory.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "twoxor/sequences.hpp"
#include "twoxor/special_functions.hpp"

namespace twoxor {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::CriticalHalf: return "critical_half";
    case Regime::CriticalOnes: return "critical_ones";
    case Regime::SubMultigraph: return "sub_multigraph";
    case Regime::SubGraph: return "sub_graph";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxCTerms = 2000;

// Shared prefix of f_r, grown by doubling.
std::shared_ptr<const SequenceTable> f_table(std::size_t min_r) {
  static std::mutex mutex;
  static std::shared_ptr<const SequenceTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->last_index() < min_r) {
    std::size_t want = table ? table->last_index() : 32;
    while (want < min_r) want *= 2;
    table = std::make_shared<const SequenceTable>(f_seq(want));
  }
  return table;
}

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("subcritical formulas need 0 <= gamma < 1");
}

void check_phat(double phat) {
  if (!(phat >= 0.0 && phat <= 1.0)) throw std::invalid_argument("phat must lie in [0,1]");
}

}  // namespace

CLambdaDetail c_lambda_detail(double lambda) {
  if (!(std::abs(lambda) <= kLambdaEnvelope)) {
    throw EnvelopeError("c(lambda): |lambda| = " + std::to_string(std::abs(lambda)) +
                        " is outside the series envelope");
  }
  CLambdaDetail out;
  auto table = f_table(64);
  double sum = 0.0, previous = 0.0;
  for (std::size_t r = 0; r < kMaxCTerms; ++r) {
    if (r > table->last_index()) table = f_table(r);
    auto a = a_series_big(0.25 + 3.0 * static_cast<double>(r), lambda);
    BigFloat term(a.precision, (*table)[r]);
    term *= a.value;
    mpfr_div_2ui(term.get(), term.get(), static_cast<unsigned long>(r), MPFR_RNDN);
    const double t = term.to_double();
    sum += t;
    if (r > 0 && previous != 0.0) out.last_term_ratio = std::abs(t / previous);
    previous = t;
    if (r >= 10 && std::abs(t) < 1e-14 * std::abs(sum)) {
      out.terms = r + 1;
      out.value = std::exp(0.375) * std::sqrt(2.0 * std::numbers::pi) * sum;
      return out;
    }
  }
  throw ConvergenceError("c(lambda) did not converge within " + std::to_string(kMaxCTerms) + " terms");
}

double c_lambda(double lambda) { return c_lambda_detail(lambda).value; }

double c_lambda_asymptotic(double lambda) {
  if (lambda == 0.0) throw std::invalid_argument("c_lambda_asymptotic: lambda must be nonzero");
  if (lambda < 0.0) return std::exp(0.375) * std::pow(-lambda, 0.25);
  return std::exp(0.375) / (4.0 * std::pow(3.0, 0.75)) * std::pow(lambda, 0.25) *
         std::exp(-10.0 * lambda * lambda * lambda / 81.0);
}

double bipartite_factor() { return std::pow(2.0, -0.25) * std::exp(0.125); }

double c1_lambda(double lambda) { return bipartite_factor() * c_lambda(lambda); }

Prediction critical_prediction(std::size_t n, double lambda, double phat) {
  if (n < 10) throw std::invalid_argument("critical_prediction needs n >= 10");
  Prediction p;
  p.n = n;
  p.parameter = lambda;
  p.phat = phat;
  const double scale = std::pow(static_cast<double>(n), -1.0 / 12.0);
  if (phat == 0.5) {
    p.regime = Regime::CriticalHalf;
    p.value = scale * c_lambda(lambda);
  } else if (phat == 1.0) {
    p.regime = Regime::CriticalOnes;
    p.value = scale * c1_lambda(lambda);
  } else {
    throw std::invalid_argument("critical_prediction supports phat = 1/2 or 1 only");
  }
  p.value = std::clamp(p.value, 0.0, 1.0);
  return p;
}

double conjectured_phat_factor(double phat) {
  if (!(phat > 0.0 && phat <= 1.0)) throw std::invalid_argument("conjectured factor needs 0 < phat <= 1");
  return std::pow(2.0 * phat, -0.25) * std::exp(-(1.0 - phat) * (1.0 - phat) / 2.0 + 0.125);
}

double subcritical_multigraph(double gamma, double phat) {
  check_gamma(gamma);
  check_phat(phat);
  return std::pow((1.0 - gamma) / (1.0 - (1.0 - 2.0 * phat) * gamma), 0.25);
}

double subcritical_graph(double gamma, double phat) {
  return subcritical_multigraph(gamma, phat) *
         std::exp(gamma * phat / 2.0 + gamma * gamma * phat * (1.0 - phat) / 2.0);
}

double expected_bad_cycles(double gamma, double phat) {
  check_gamma(gamma);
  check_phat(phat);
  return 0.25 * std::log((1.0 - gamma * (1.0 - 2.0 * phat)) / (1.0 - gamma)) - gamma * phat / 2.0 -
         gamma * gamma * phat * (1.0 - phat) / 2.0;
}

double expected_bad_cycles_partial(double gamma, double phat, std::size_t max_len) {
  check_gamma(gamma);
  check_phat(phat);
  const double q = 1.0 - 2.0 * phat;
  double sum = 0.0, gpow = gamma * gamma, qpow = q * q;
  for (std::size_t s = 3; s <= max_len; ++s) {
    gpow *= gamma;
    qpow *= q;
    sum += (1.0 - qpow) / 2.0 * gpow / (2.0 * static_cast<double>(s));
  }
  return sum;
}

}  // namespace twoxor
