#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ard {

// mean/overdispersion parameterization of the negative binomial:
// internally shape r = mu/(omega-1), success prob p = 1/omega, so that
// E[y] = mu and Var[y] = omega * mu.  omega == 1 is the Poisson limit.
struct NegBinMuOmega {
  double mu;
  double omega;
};

// log C_3(kappa) with C_3(kappa) = kappa / (4 pi sinh kappa); evaluated in
// log space so large kappa cannot overflow sinh.
double log_vmf_norm_const(double kappa);
double vmf_norm_const(double kappa);

double poisson_logpmf(long long y, double mean);
// variant taking the log mean directly plus a precomputed log(y!)
double poisson_logpmf_logmean(long long y, double log_mean, double log_fact_y);

double negbin_logpmf(long long y, const NegBinMuOmega& params);
// numerically preferred form when 1/omega is the native parameter
double negbin_logpmf_mu_invomega(long long y, double mu, double inv_omega);

double betabinom_logpmf(long long y, long long trials, double a, double b);

double normal_logpdf(double x, double mean, double sd);
// density of |N(0, sd^2)| on x >= 0; -inf below 0
double halfnormal_logpdf(double x, double sd);
double gamma_logpdf(double x, double shape, double rate);

double lbeta(double a, double b);
double logsumexp(std::span<const double> xs);

// Cached log(y!) for the integer counts a dataset can contain; falls back
// to lgamma beyond the table.  Read-only after construction.
class LogFactorialTable {
 public:
  LogFactorialTable() = default;
  explicit LogFactorialTable(long long max_y);
  double operator()(long long y) const;

 private:
  std::vector<double> table_;
};

}  // namespace ard
