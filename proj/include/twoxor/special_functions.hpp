#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "twoxor/bigfloat.hpp"

namespace twoxor {

enum class AMethod { Series, Contour, AsymptoticNeg, AsymptoticPos };

std::string to_string(AMethod method);

struct AEvalResult {
  double value = 0.0;
  std::size_t terms_used = 0;  // series terms, or quadrature panels for Contour
  AMethod method = AMethod::Series;
  /// Series: working precision in bits. Contour: |imaginary part| of the integral.
  double diagnostic = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entire function 1/Gamma(x); exactly 0 at x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// 1/Gamma(x) for exact rational x, correct to about `bits` bits. Gamma on
/// (0, 1] comes from the lower incomplete gamma series summed exactly by
/// binary splitting, then the recurrence moves x there.
BigFloat reciprocal_gamma_big(mpfr_prec_t bits, const mpq_class& x);

/// Series for
///   A(y, mu) = e^{-mu^3/6} 3^{-(y+1)/3} sum_k (3^{2/3} mu / 2)^k / (k! Gamma((y+1-2k)/3)).
///
/// The terms reach ~e^{|mu|^3/6} while the sum is ~e^{-|mu|^3/6}, so the sum is
/// formed in MPFR; the working precision is raised until at least 64 bits
/// survive the cancellation. Throws ConvergenceError if 10^5 terms do not
/// suffice.
AEvalResult a_series(double y, double mu);

/// Same evaluation, returning the full-precision value (which may be far
/// outside the double range for large y or mu).
struct ASeriesBig {
  BigFloat value;
  std::size_t terms_used;
  mpfr_prec_t precision;
};
ASeriesBig a_series_big(double y, double mu);

/// A(y, mu) = e^{-mu^3/6}/(2 pi i) * integral over Re s = a of
///   s^{1-y} exp(mu s^2/2 + s^3/3) ds,
/// with a 31-point Kronrod rule on panels of the truncated line, each at most
/// half an oscillation wide. Requires
/// a > 0 and a > -mu/2.
AEvalResult a_contour(double y, double mu, double a);
AEvalResult a_contour(double y, double mu);  // a = max(1, 1 - mu/2)

/// Leading asymptotics for |mu| >= 5:
///   mu -> -inf: (2 pi)^{-1/2} |mu|^{1/2-y}
///   mu -> +inf: e^{-mu^3/6} / (2^{y/2} Gamma(y/2) mu^{1-y/2})
AEvalResult a_asymptotic(double y, double mu);

}  // namespace twoxor
