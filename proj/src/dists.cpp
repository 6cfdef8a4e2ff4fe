#include "ard/dists.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ard {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog4Pi = std::log(4.0 * M_PI);

// log Gamma(y+r) - log Gamma(r) for integer y >= 0.  The product form is
// used for short sums and for huge r, where the difference of two lgamma
// calls loses the leading digits.
double log_rising_gamma(long long y, double r) {
  if (y == 0) return 0.0;
  if (y <= 64 || r > 1e5) {
    double s = 0.0;
    for (long long j = 0; j < y; ++j) s += std::log(r + static_cast<double>(j));
    return s;
  }
  return std::lgamma(static_cast<double>(y) + r) - std::lgamma(r);
}

double negbin_core(long long y, double mu, double r, double log_p, double log_1mp) {
  if (mu == 0.0) return y == 0 ? 0.0 : kNegInf;
  if (std::isinf(mu)) return kNegInf;
  return log_rising_gamma(y, r) - std::lgamma(static_cast<double>(y) + 1.0) +
         r * log_p + static_cast<double>(y) * log_1mp;
}

}  // namespace

double log_vmf_norm_const(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("vmf_norm_const: kappa must be finite and >= 0");
  if (kappa == 0.0) return -kLog4Pi;
  // log sinh(k) = k - log 2 + log(1 - e^{-2k}), stable for all k > 0
  double log_sinh = kappa - M_LN2 + std::log(-std::expm1(-2.0 * kappa));
  return std::log(kappa) - kLog4Pi - log_sinh;
}

double vmf_norm_const(double kappa) { return std::exp(log_vmf_norm_const(kappa)); }

double poisson_logpmf(long long y, double mean) {
  if (y < 0) throw std::invalid_argument("poisson_logpmf: y must be >= 0");
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson_logpmf: mean must be >= 0");
  if (mean == 0.0) return y == 0 ? 0.0 : kNegInf;
  if (std::isinf(mean)) return kNegInf;
  return static_cast<double>(y) * std::log(mean) - mean -
         std::lgamma(static_cast<double>(y) + 1.0);
}

double poisson_logpmf_logmean(long long y, double log_mean, double log_fact_y) {
  if (log_mean == kNegInf) return y == 0 ? 0.0 : kNegInf;
  double mean = std::exp(log_mean);
  if (std::isinf(mean)) return kNegInf;
  return static_cast<double>(y) * log_mean - mean - log_fact_y;
}

double negbin_logpmf(long long y, const NegBinMuOmega& params) {
  if (y < 0) throw std::invalid_argument("negbin_logpmf: y must be >= 0");
  if (std::isnan(params.mu) || std::isnan(params.omega) || !(params.mu >= 0.0) ||
      !std::isfinite(params.omega) || !(params.omega >= 1.0))
    throw std::invalid_argument("negbin_logpmf: need mu >= 0 and finite omega >= 1");
  if (params.omega == 1.0) return poisson_logpmf(y, params.mu);
  double om1 = params.omega - 1.0;
  double r = params.mu / om1;
  return negbin_core(y, params.mu, r, -std::log(params.omega),
                     std::log(om1) - std::log(params.omega));
}

double negbin_logpmf_mu_invomega(long long y, double mu, double inv_omega) {
  if (y < 0) throw std::invalid_argument("negbin_logpmf: y must be >= 0");
  if (std::isnan(mu) || !(mu >= 0.0) || !(inv_omega > 0.0) || !(inv_omega <= 1.0))
    throw std::invalid_argument("negbin_logpmf: need mu >= 0 and 1/omega in (0,1]");
  if (inv_omega == 1.0) return poisson_logpmf(y, mu);
  // p = 1/omega = inv_omega; omega - 1 = (1 - inv_omega)/inv_omega
  double r = mu * inv_omega / (1.0 - inv_omega);
  return negbin_core(y, mu, r, std::log(inv_omega), std::log1p(-inv_omega));
}

double betabinom_logpmf(long long y, long long trials, double a, double b) {
  if (trials < 0) throw std::invalid_argument("betabinom_logpmf: trials must be >= 0");
  if (y < 0 || y > trials)
    throw std::invalid_argument("betabinom_logpmf: y outside 0..trials");
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("betabinom_logpmf: shapes must be positive");
  if (trials == 0) return 0.0;
  double n = static_cast<double>(trials), yy = static_cast<double>(y);
  double log_choose =
      std::lgamma(n + 1.0) - std::lgamma(yy + 1.0) - std::lgamma(n - yy + 1.0);
  return log_choose + lbeta(yy + a, n - yy + b) - lbeta(a, b);
}

double normal_logpdf(double x, double mean, double sd) {
  if (!(sd > 0.0)) return kNegInf;
  double z = (x - mean) / sd;
  return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * M_PI);
}

double halfnormal_logpdf(double x, double sd) {
  if (x < 0.0) return kNegInf;
  return M_LN2 + normal_logpdf(x, 0.0, sd);
}

double gamma_logpdf(double x, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::invalid_argument("gamma_logpdf: shape and rate must be positive");
  if (x < 0.0) return kNegInf;
  if (x == 0.0) return shape > 1.0 ? kNegInf : (shape == 1.0 ? std::log(rate) : kNegInf);
  return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
         rate * x;
}

double lbeta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double logsumexp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (std::isinf(m) && m < 0) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

LogFactorialTable::LogFactorialTable(long long max_y) {
  table_.resize(static_cast<std::size_t>(std::max(1LL, max_y + 1)));
  table_[0] = 0.0;
  for (std::size_t y = 1; y < table_.size(); ++y)
    table_[y] = table_[y - 1] + std::log(static_cast<double>(y));
}

double LogFactorialTable::operator()(long long y) const {
  if (y >= 0 && static_cast<std::size_t>(y) < table_.size())
    return table_[static_cast<std::size_t>(y)];
  return std::lgamma(static_cast<double>(y) + 1.0);
}

}  // namespace ard
