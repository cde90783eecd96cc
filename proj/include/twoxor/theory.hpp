#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twoxor {

enum class Regime { CriticalHalf, CriticalOnes, SubMultigraph, SubGraph };

std::string to_string(Regime regime);

struct Prediction {
  double value = 0.0;
  Regime regime = Regime::CriticalHalf;
  std::size_t n = 0;
  double parameter = 0.0;  // lambda for critical regimes, gamma for subcritical
  double phat = 0.5;
};

/// Largest |lambda| for which c(lambda) is evaluated from its series.
inline constexpr double kLambdaEnvelope = 30.0;

class EnvelopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CLambdaDetail {
  double value = 0.0;
  std::size_t terms = 0;         // number of r-terms summed
  double last_term_ratio = 0.0;  // |term_R / term_{R-1}| at truncation
};

/// c(lambda) = e^{3/8} sqrt(2 pi) sum_{r>=0} (f_r / 2^r) A(1/4 + 3r, lambda),
/// summed until a term drops below 1e-14 of the partial sum (r >= 10).
/// Throws EnvelopeError for |lambda| > kLambdaEnvelope.
double c_lambda(double lambda);
CLambdaDetail c_lambda_detail(double lambda);

/// Leading behaviour of c(lambda) as lambda -> -inf or +inf:
///   e^{3/8} |lambda|^{1/4}                                   (lambda < 0)
///   e^{3/8} / (4 3^{3/4}) lambda^{1/4} exp(-10 lambda^3 / 81) (lambda > 0)
double c_lambda_asymptotic(double lambda);

/// 2^{-1/4} e^{1/8}: ratio of the 2-colorability constant to c(lambda).
double bipartite_factor();

double c1_lambda(double lambda);

/// n^{-1/12} c(lambda) for phat = 1/2 and n^{-1/12} c_1(lambda) for phat = 1,
/// clipped to [0, 1]. Other phat values throw std::invalid_argument.
Prediction critical_prediction(std::size_t n, double lambda, double phat);

/// Unproven general-phat factor relative to phat = 1/2:
///   (2 phat)^{-1/4} exp(-(1 - phat)^2 / 2 + 1/8).
/// Exposed for empirical comparison only.
double conjectured_phat_factor(double phat);

/// (1 - gamma)^{1/4} / (1 - (1 - 2 phat) gamma)^{1/4}, 0 <= gamma < 1.
double subcritical_multigraph(double gamma, double phat);

/// subcritical_multigraph(gamma, phat) * exp(gamma phat / 2 + gamma^2 phat (1 - phat) / 2).
double subcritical_graph(double gamma, double phat);

/// Expected number of cycles whose label sum is odd, in closed form:
///   (1/4) ln[(1 - gamma (1 - 2 phat)) / (1 - gamma)] - gamma phat / 2 - gamma^2 phat (1 - phat) / 2.
double expected_bad_cycles(double gamma, double phat);

/// sum_{s=3}^{max_len} pi_s sigma_s with pi_s = (1 - (1 - 2 phat)^s) / 2 and
/// sigma_s = gamma^s / (2 s).
double expected_bad_cycles_partial(double gamma, double phat, std::size_t max_len);

}  // namespace twoxor
