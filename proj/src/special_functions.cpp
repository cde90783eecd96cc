#include "twoxor/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

namespace twoxor {

std::string to_string(AMethod method) {
  switch (method) {
    case AMethod::Series: return "series";
    case AMethod::Contour: return "contour";
    case AMethod::AsymptoticNeg: return "asymptotic_neg";
    case AMethod::AsymptoticPos: return "asymptotic_pos";
  }
  return "?";
}

double reciprocal_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 0.5) return 1.0 / std::tgamma(x);
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi.
  return boost::math::sin_pi(x) * std::tgamma(1.0 - x) / std::numbers::pi;
}

namespace {

// Exact sum over k in [lo, hi) of prod_{i=lo}^{k} a / (p + i q), as T / Q,
// with P = a^(hi - lo).
struct Split {
  mpz_class p, q, t;
};

Split split(const mpz_class& a, const mpz_class& p, const mpz_class& q, unsigned long lo, unsigned long hi) {
  if (hi - lo == 1) {
    mpz_class b = p + q * lo;
    return {a, b, a};
  }
  const unsigned long mid = lo + (hi - lo) / 2;
  Split l = split(a, p, q, lo, mid);
  Split r = split(a, p, q, mid, hi);
  return {l.p * r.p, l.q * r.q, l.t * r.q + l.p * r.t};
}

// Gamma(x) for rational 0 < x <= 1 from
//   Gamma(x) ~ N^x e^{-N} sum_{k>=0} N^k / (x (x+1) ... (x+k)),
// whose neglected tail Gamma(x, N) is below e^{-N}.
BigFloat gamma_unit_interval(mpfr_prec_t bits, const mpq_class& x) {
  const mpfr_prec_t work = bits + 64;
  const auto n = static_cast<unsigned long>(std::ceil(static_cast<double>(work) * std::numbers::ln2)) + 8;
  // Terms peak near k = N at about e^N; stop once they are 2^{-work} below that.
  const double nd = static_cast<double>(n);
  unsigned long k_max = 2 * n;
  while (static_cast<double>(k_max) * std::log(nd) - std::lgamma(static_cast<double>(k_max) + 2.0) >
         nd - static_cast<double>(work) * std::numbers::ln2)
    k_max += n / 4 + 1;

  const mpz_class p = x.get_num(), q = x.get_den();
  const mpz_class a = q * n;
  // sum = (q / p) (1 + T / Q) with the ratios N q / (p + i q), i = 1..k_max.
  const Split s = split(a, p, q, 1, k_max + 1);
  BigFloat sum(work, mpq_class(s.t, s.q));
  mpfr_add_ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  sum *= BigFloat(work, mpq_class(q, p));

  BigFloat scale(work);  // N^x e^{-N}
  BigFloat xf(work, x);
  mpfr_set_ui(scale.get(), n, MPFR_RNDN);
  mpfr_log(scale.get(), scale.get(), MPFR_RNDN);
  scale *= xf;
  mpfr_sub_ui(scale.get(), scale.get(), n, MPFR_RNDN);
  mpfr_exp(scale.get(), scale.get(), MPFR_RNDN);
  sum *= scale;
  return sum;
}

}  // namespace

BigFloat reciprocal_gamma_big(mpfr_prec_t bits, const mpq_class& x) {
  if (x.get_den() == 1 && sgn(x) <= 0) return BigFloat(bits);
  // x = f + m with 0 < f <= 1 and integer m.
  mpz_class m;
  mpz_cdiv_q(m.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  m -= 1;
  const mpq_class f = x - mpq_class(m);
  // Gamma(x) = Gamma(f) (f)(f+1)...(f+m-1) for m > 0, Gamma(f) / (x (x+1)...(f-1)) for m < 0.
  mpq_class ratio = 1;
  if (m > 0) {
    for (mpz_class i = 0; i < m; ++i) ratio *= f + mpq_class(i);
  } else {
    for (mpq_class v = x; v < f; v += 1) ratio /= v;
  }
  BigFloat out(bits + 32, 1.0);
  out /= gamma_unit_interval(bits + 32, f);
  out /= BigFloat(bits + 32, ratio);
  mpfr_prec_round(out.get(), bits, MPFR_RNDN);
  return out;
}

namespace {

constexpr std::size_t kMaxSeriesTerms = 100000;
constexpr long kGuardBits = 64;

struct SeriesRun {
  BigFloat sum;
  long max_term_exponent;
  std::size_t terms;
};

// Sum of (3^{2/3} mu/2)^k / (k! Gamma((y+1-2k)/3)) at `bits` precision.
//
// Terms are advanced three indices at a time so that the gamma argument
// drops by exactly 2:  t_{k+3} = t_k * z^3 (y-2-2k)(y-5-2k) / (9 (k+1)(k+2)(k+3)).
SeriesRun run_series(double y, double mu, mpfr_prec_t bits) {
  BigFloat z(bits);
  mpfr_set_ui(z.get(), 9, MPFR_RNDN);
  mpfr_cbrt(z.get(), z.get(), MPFR_RNDN);
  mpfr_mul_d(z.get(), z.get(), mu, MPFR_RNDN);
  mpfr_div_2ui(z.get(), z.get(), 1, MPFR_RNDN);

  // z^3 / 9 = mu^3 / 8, exact in double for the mu used here.
  const double step = mu * mu * mu / 8.0;

  std::array<BigFloat, 3> term{BigFloat(bits), BigFloat(bits), BigFloat(bits)};
  BigFloat zpow(bits, 1.0);
  for (unsigned j = 0; j < 3; ++j) {
    const mpq_class x = (mpq_class(y) + 1 - 2 * static_cast<int>(j)) / 3;
    term[j] = reciprocal_gamma_big(bits, x);
    term[j] *= zpow;
    if (j == 2) mpfr_div_ui(term[j].get(), term[j].get(), 2, MPFR_RNDN);
    zpow *= z;
  }

  // Past this index every three-step ratio is below 1/2 in magnitude.
  const double zabs = std::abs(mu) * std::cbrt(9.0) / 2.0;
  const auto settle = static_cast<std::size_t>(std::max(std::max(y, 0.0), 8.0 * zabs * zabs * zabs / 9.0)) + 8;

  SeriesRun run{BigFloat(bits), -(1L << 40), 0};
  std::size_t negligible = 0;
  for (std::size_t k = 0;; ++k) {
    if (k >= kMaxSeriesTerms) {
      throw ConvergenceError("A(y,mu) series did not converge within 1e5 terms (y=" + std::to_string(y) +
                             ", mu=" + std::to_string(mu) + ")");
    }
    BigFloat& t = term[k % 3];
    run.sum += t;
    run.max_term_exponent = std::max(run.max_term_exponent, t.exponent());
    if (t.is_zero() || t.exponent() < run.sum.exponent() - kGuardBits)
      ++negligible;
    else
      negligible = 0;
    if (k >= settle && negligible >= 8) {
      run.terms = k + 1;
      return run;
    }
    // Fold the double factors into one multiplication when the product is exact.
    const double kd = static_cast<double>(k);
    const double fa = y - 2.0 - 2.0 * kd, fb = y - 5.0 - 2.0 * kd;
    const double ab = fa * fb, factor = ab * step;
    if (std::fma(fa, fb, -ab) == 0.0 && std::fma(ab, step, -factor) == 0.0) {
      mpfr_mul_d(t.get(), t.get(), factor, MPFR_RNDN);
    } else {
      mpfr_mul_d(t.get(), t.get(), step, MPFR_RNDN);
      mpfr_mul_d(t.get(), t.get(), fa, MPFR_RNDN);
      mpfr_mul_d(t.get(), t.get(), fb, MPFR_RNDN);
    }
    const unsigned long kk = k;
    mpfr_div_ui(t.get(), t.get(), (kk + 1) * (kk + 2) * (kk + 3), MPFR_RNDN);
  }
}

}  // namespace

ASeriesBig a_series_big(double y, double mu) {
  if (!std::isfinite(y) || !std::isfinite(mu)) throw std::invalid_argument("A(y,mu): non-finite input");
  const double amu = std::abs(mu);
  // The tail cannot be certified before index 8 |z|^3 / 9 = |mu|^3; refuse
  // up front rather than after an expensive high-precision run.
  if (amu * amu * amu + 8.0 > static_cast<double>(kMaxSeriesTerms))
    throw ConvergenceError("A(y,mu) series needs more than 1e5 terms at mu=" + std::to_string(mu));
  // Terms reach e^{|mu|^3/6} and the raw sum is near e^{-|mu|^3/6}: about 0.48 |mu|^3 bits cancel.
  auto bits = static_cast<mpfr_prec_t>(128 + std::ceil(0.5 * amu * amu * amu));
  for (int attempt = 0;; ++attempt) {
    SeriesRun run = run_series(y, mu, bits);
    const long cancelled = run.sum.is_zero() ? 0 : std::max(0L, run.max_term_exponent - run.sum.exponent());
    if (bits - cancelled < kGuardBits + 24) {
      if (attempt >= 4) throw ConvergenceError("A(y,mu) series: precision escalation failed");
      bits = std::max(2 * bits, static_cast<mpfr_prec_t>(cancelled + 2 * kGuardBits + 32));
      continue;
    }
    // Prefactor e^{-mu^3/6} 3^{-(y+1)/3}.
    BigFloat pre(bits, mu);
    mpfr_pow_ui(pre.get(), pre.get(), 3, MPFR_RNDN);
    mpfr_div_si(pre.get(), pre.get(), -6, MPFR_RNDN);
    mpfr_exp(pre.get(), pre.get(), MPFR_RNDN);
    BigFloat scale(bits, y);
    mpfr_add_ui(scale.get(), scale.get(), 1, MPFR_RNDN);
    mpfr_div_si(scale.get(), scale.get(), -3, MPFR_RNDN);
    mpfr_ui_pow(scale.get(), 3, scale.get(), MPFR_RNDN);
    run.sum *= pre;
    run.sum *= scale;
    return {std::move(run.sum), run.terms, bits};
  }
}

AEvalResult a_series(double y, double mu) {
  const auto big = a_series_big(y, mu);
  return {big.value.to_double(), big.terms_used, AMethod::Series, static_cast<double>(big.precision)};
}

AEvalResult a_contour(double y, double mu, double a) {
  if (!(a > 0.0) || !(a > -mu / 2.0)) {
    throw std::invalid_argument("a_contour: the line Re s = a needs a > 0 and a > -mu/2");
  }
  using cplx = std::complex<double>;
  const double shift = -mu * mu * mu / 6.0;
  auto integrand = [=](double t) {
    const cplx s(a, t);
    return std::exp((1.0 - y) * std::log(s) + mu * s * s / 2.0 + s * s * s / 3.0 + shift);
  };
  // log |integrand|, which has a Gaussian envelope exp(-t^2 (mu/2 + a)).
  const double width = mu / 2.0 + a;
  auto log_mag = [=](double t) {
    return (1.0 - y) * 0.5 * std::log(a * a + t * t) + mu * a * a / 2.0 + a * a * a / 3.0 + shift -
           t * t * width;
  };
  const double t_peak = std::sqrt(std::max(0.0, (1.0 - y) / (2.0 * width) - a * a));
  const double cutoff = log_mag(t_peak) - std::log(1e18);
  double limit = std::max(t_peak, 0.5);
  while (log_mag(limit) > cutoff) limit *= 1.05;

  // Panels sized to the accumulated phase so each spans at most half an
  // oscillation; a fixed 31-point Kronrod rule per panel is then ample.
  const double phase = limit * limit * limit / 3.0 + std::abs(mu) * limit * limit / 2.0 + a * a * limit;
  const auto panels = static_cast<std::size_t>(std::ceil(phase / std::numbers::pi)) + 32;
  const double h = limit / static_cast<double>(panels);

  using boost::math::quadrature::gauss_kronrod;
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = h * static_cast<double>(i), hi = lo + h;
    for (double sign : {1.0, -1.0}) {
      auto real_part = [&](double t) { return integrand(sign * t).real(); };
      auto imag_part = [&](double t) { return integrand(sign * t).imag(); };
      re += gauss_kronrod<double, 31>::integrate(real_part, lo, hi, 0, 0.0);
      im += gauss_kronrod<double, 31>::integrate(imag_part, lo, hi, 0, 0.0);
    }
  }
  const double norm = 2.0 * std::numbers::pi;
  return {re / norm, panels, AMethod::Contour, std::abs(im) / norm};
}

AEvalResult a_contour(double y, double mu) { return a_contour(y, mu, std::max(1.0, 1.0 - mu / 2.0)); }

AEvalResult a_asymptotic(double y, double mu) {
  if (std::abs(mu) < 5.0) throw std::invalid_argument("a_asymptotic: needs |mu| >= 5");
  if (mu < 0.0) {
    const double v = std::exp((0.5 - y) * std::log(-mu)) / std::sqrt(2.0 * std::numbers::pi);
    return {v, 1, AMethod::AsymptoticNeg, 0.0};
  }
  const double log_v = -mu * mu * mu / 6.0 - (y / 2.0) * std::log(2.0) - std::lgamma(y / 2.0) -
                       (1.0 - y / 2.0) * std::log(mu);
  // lgamma drops the sign of Gamma(y/2); restore it for y < 0.
  const double sign = std::tgamma(y / 2.0) < 0.0 ? -1.0 : 1.0;
  return {sign * std::exp(log_v), 1, AMethod::AsymptoticPos, 0.0};
}

}  // namespace twoxor
