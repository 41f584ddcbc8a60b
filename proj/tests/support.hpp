#pragma once

#include "compord/linear_function.hpp"
#include "compord/matrix2.hpp"
#include "compord/maxplus.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace compord;

inline Rational pick(std::mt19937_64 &rng, const std::vector<Rational> &pool) {
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

inline Rational small_int(std::mt19937_64 &rng, long lo, long hi) {
  return Rational(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// Small pools so that repeated rays, identities and ties actually occur.
inline const std::vector<Rational> &positive_slopes() {
  static const std::vector<Rational> pool = {Rational(1, 3), Rational(1, 2), Rational(1),
                                             Rational(1), Rational(2), Rational(3), Rational(3, 2)};
  return pool;
}

inline const std::vector<Rational> &negative_slopes() {
  static const std::vector<Rational> pool = {Rational(-1, 2), Rational(-1), Rational(-2),
                                             Rational(-3)};
  return pool;
}

inline std::vector<LinearFunction> random_monotone(std::mt19937_64 &rng, std::size_t n) {
  std::vector<LinearFunction> fs;
  for (std::size_t i = 0; i < n; ++i)
    fs.push_back({pick(rng, positive_slopes()), small_int(rng, -3, 3)});
  return fs;
}

inline std::vector<LinearFunction> random_with_constants(std::mt19937_64 &rng, std::size_t n) {
  auto fs = random_monotone(rng, n);
  std::size_t constants = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, n / 2))(rng);
  for (std::size_t i = 0; i < constants && i < n; ++i)
    fs[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)].a = 0;
  return fs;
}

inline std::vector<LinearFunction> random_general(std::mt19937_64 &rng, std::size_t n, std::size_t k) {
  std::vector<LinearFunction> fs;
  for (std::size_t i = 0; i < n; ++i) {
    Rational a;
    if (i < k)
      a = pick(rng, negative_slopes());
    else if (std::uniform_int_distribution<int>(0, 5)(rng) == 0)
      a = 0;
    else
      a = pick(rng, positive_slopes());
    fs.push_back({a, small_int(rng, -3, 3)});
  }
  std::shuffle(fs.begin(), fs.end(), rng);
  return fs;
}

inline std::vector<Matrix2> random_triangular(std::mt19937_64 &rng, std::size_t n, bool allow_negative) {
  std::vector<Matrix2> ms;
  for (std::size_t i = 0; i < n; ++i) {
    long lo = allow_negative ? -3 : 0;
    ms.push_back(Matrix2::upper(small_int(rng, lo, 3), small_int(rng, -3, 3), small_int(rng, lo, 3)));
  }
  return ms;
}

inline std::vector<MaxPlusMatrix2> random_maxplus(std::mt19937_64 &rng, std::size_t n, long range) {
  std::vector<MaxPlusMatrix2> ns;
  for (std::size_t i = 0; i < n; ++i)
    ns.push_back({MaxPlus(small_int(rng, 0, range)), MaxPlus(small_int(rng, 0, range)),
                  MaxPlus(small_int(rng, 0, range))});
  return ns;
}

inline std::vector<Job> random_jobs(std::mt19937_64 &rng, std::size_t n) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < n; ++i)
    jobs.push_back({small_int(rng, 0, 9), small_int(rng, 0, 9)});
  return jobs;
}

} // namespace testing_support
