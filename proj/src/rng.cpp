#include "ard/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ard {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
  // rejection to remove modulo bias
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t x = gen_();
    if (x < limit) return x % n;
  }
}

long long Rng::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // multiplication method
    double limit = std::exp(-mean);
    double prod = uniform();
    long long k = 0;
    while (prod > limit) {
      prod *= uniform();
      ++k;
    }
    return k;
  }
  // Hormann's PTRD transformed-rejection sampler
  double smu = std::sqrt(mean);
  double b = 0.931 + 2.53 * smu;
  double a = -0.059 + 0.02483 * b;
  double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  double v_r = 0.9277 - 3.6224 / (b - 2.0);
  double log_mean = std::log(mean);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::fabs(u);
    double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<long long>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0))
      return static_cast<long long>(kf);
  }
}

double Rng::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::invalid_argument("gamma: shape and rate must be positive");
  if (shape < 1.0) {
    // boost to shape+1, then scale by u^(1/shape)
    double u = uniform();
    return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

double Rng::beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("beta: shapes must be positive");
  double x = gamma(a, 1.0);
  double y = gamma(b, 1.0);
  return x / (x + y);
}

double Rng::lognormal(double log_mean, double log_sd) {
  if (!(log_sd >= 0.0)) throw std::invalid_argument("lognormal: sd must be >= 0");
  return std::exp(log_mean + log_sd * normal());
}

long long Rng::binomial(long long trials, double p) {
  if (trials < 0) throw std::invalid_argument("binomial: trials must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - binomial(trials, 1.0 - p);
  double np = static_cast<double>(trials) * p;
  double n_log_q = static_cast<double>(trials) * std::log1p(-p);
  if (np <= 30.0 && n_log_q > -700.0) {
    // CDF inversion with pmf recurrence
    double pmf = std::exp(n_log_q);
    double cdf = pmf;
    double u = uniform();
    long long k = 0;
    double odds = p / (1.0 - p);
    while (u > cdf && k < trials) {
      ++k;
      pmf *= odds * static_cast<double>(trials - k + 1) / static_cast<double>(k);
      cdf += pmf;
    }
    return k;
  }
  // exact Bernoulli sum; trials are modest everywhere this path is hit
  long long k = 0;
  for (long long t = 0; t < trials; ++t)
    if (uniform() < p) ++k;
  return k;
}

long long Rng::geometric(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric: p outside (0,1]");
  if (p == 1.0) return 0;
  double u = uniform();
  return static_cast<long long>(std::floor(std::log(u) / std::log1p(-p)));
}

std::array<double, 3> Rng::unit_sphere() {
  double w = 2.0 * uniform() - 1.0;
  double a = 2.0 * M_PI * uniform();
  double s = std::sqrt(std::max(0.0, 1.0 - w * w));
  return {s * std::cos(a), s * std::sin(a), w};
}

namespace {

// deterministic orthonormal basis of the plane normal to unit vector v
void tangent_basis(const std::array<double, 3>& v, std::array<double, 3>& e1,
                   std::array<double, 3>& e2) {
  // start from the coordinate axis least aligned with v
  std::array<double, 3> a = {1.0, 0.0, 0.0};
  double ax = std::fabs(v[0]), ay = std::fabs(v[1]), az = std::fabs(v[2]);
  if (ay <= ax && ay <= az)
    a = {0.0, 1.0, 0.0};
  else if (az <= ax && az <= ay)
    a = {0.0, 0.0, 1.0};
  // e1 = normalize(a - (a.v) v)
  double d = a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
  for (int i = 0; i < 3; ++i) e1[i] = a[i] - d * v[i];
  double n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (int i = 0; i < 3; ++i) e1[i] /= n;
  // e2 = v x e1
  e2[0] = v[1] * e1[2] - v[2] * e1[1];
  e2[1] = v[2] * e1[0] - v[0] * e1[2];
  e2[2] = v[0] * e1[1] - v[1] * e1[0];
}

}  // namespace

std::array<double, 3> Rng::vmf(const std::array<double, 3>& mean_dir, double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("vmf: kappa must be finite and >= 0");
  double n2 = mean_dir[0] * mean_dir[0] + mean_dir[1] * mean_dir[1] +
              mean_dir[2] * mean_dir[2];
  if (std::fabs(n2 - 1.0) > 1e-10)
    throw std::invalid_argument("vmf: mean direction must be a unit vector");
  if (kappa < 1e-8) return unit_sphere();
  // closed-form inversion for the cosine toward the mean direction:
  //   w = 1 + log(u + (1-u) e^{-2 kappa}) / kappa
  double u = uniform();
  double w = 1.0 + std::log(u + (1.0 - u) * std::exp(-2.0 * kappa)) / kappa;
  w = std::fmin(1.0, std::fmax(-1.0, w));
  double a = 2.0 * M_PI * uniform();
  double s = std::sqrt(std::max(0.0, 1.0 - w * w));
  std::array<double, 3> e1, e2;
  tangent_basis(mean_dir, e1, e2);
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = w * mean_dir[i] + s * (std::cos(a) * e1[i] + std::sin(a) * e2[i]);
  // renormalize against accumulated rounding
  double nn = std::sqrt(out[0] * out[0] + out[1] * out[1] + out[2] * out[2]);
  for (int i = 0; i < 3; ++i) out[i] /= nn;
  return out;
}

}  // namespace ard
