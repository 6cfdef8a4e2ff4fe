#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace ard {

// splitmix64 finalizer; used to mix (seed, stream) pairs into engine seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Random generator with hand-rolled samplers on top of mt19937_64.
//
// The std:: distribution classes are implementation-defined, so every
// sampler here is written out explicitly: a fixed seed yields the same
// draw sequence on every platform with IEEE double semantics.
// One generator per thread; never share an instance across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix64(seed)) {}

  // Independent stream addressed by (seed, stream); used to give chains,
  // egos and posterior draws their own generators.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(0);
    r.gen_.seed(mix64(mix64(seed) ^ mix64(stream + 0x51ed2701a2b9e4d3ULL)));
    return r;
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform on (0,1); never returns 0 or 1
  double uniform() {
    for (;;) {
      double u = (gen_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  // standard normal via Box-Muller, spare cached
  double normal();

  // uniform integer in [0, n), n >= 1
  std::uint64_t uniform_int(std::uint64_t n);

  long long poisson(double mean);
  double gamma(double shape, double rate);
  double beta(double a, double b);
  double lognormal(double log_mean, double log_sd);
  long long binomial(long long trials, double p);
  // support {0, 1, 2, ...}
  long long geometric(double p);
  bool bernoulli(double p) { return uniform() < p; }

  std::array<double, 3> unit_sphere();
  // von Mises-Fisher on the unit sphere in 3 dimensions
  std::array<double, 3> vmf(const std::array<double, 3>& mean_dir, double kappa);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_int(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ard
