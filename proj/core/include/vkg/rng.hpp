#pragma once

#include <numeric>
#include <random>
#include <tuple>
#include <utility>

#include "vkg/free_group.hpp"
#include "vkg/fox.hpp"

namespace vkg {

/// Deterministic generators for the randomized property checks (used by the
/// test suites and the `selftest` subcommand).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  Word word(const Alphabet& a, int max_letters) {
    int len = static_cast<int>(uniform(0, max_letters));
    std::vector<Syllable> raw;
    raw.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
      raw.push_back({static_cast<int>(uniform(0, a.rank() - 1)), uniform(0, 1) ? 1 : -1});
    return Word::reduce(a, raw);
  }

  /// Endomorphism parameters with alpha*b - beta*a = +-1, spread by the
  /// shear family (a, b) += t (alpha, beta).
  EndoParams unimodular_params(std::int64_t range = 4) {
    std::int64_t alpha, beta;
    do {
      alpha = uniform(-range, range);
      beta = uniform(-range, range);
    } while (std::gcd(alpha, beta) != 1);
    // Extended gcd: alpha*u + beta*v = 1.
    std::int64_t u = 1, v = 0, u1 = 0, v1 = 1, x = alpha < 0 ? -alpha : alpha, y = beta < 0 ? -beta : beta;
    while (y != 0) {
      std::int64_t q = x / y;
      std::tie(x, y) = std::pair(y, x - q * y);
      std::tie(u, u1) = std::pair(u1, u - q * u1);
      std::tie(v, v1) = std::pair(v1, v - q * v1);
    }
    if (alpha < 0) u = -u;
    if (beta < 0) v = -v;
    EndoParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.b = u;
    p.a = -v;
    std::int64_t t = uniform(-range, range);
    p.a += t * alpha;
    p.b += t * beta;
    if (uniform(0, 1)) {
      p.a = -p.a;
      p.b = -p.b;
    }
    p.gamma = uniform(-range, range);
    p.c = uniform(-range, range);
    return p;
  }

  EndoParams any_params(std::int64_t range = 4) {
    EndoParams p;
    p.alpha = uniform(-range, range);
    p.beta = uniform(-range, range);
    p.gamma = uniform(-range, range);
    p.a = uniform(-range, range);
    p.b = uniform(-range, range);
    p.c = uniform(-range, range);
    return p;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vkg
