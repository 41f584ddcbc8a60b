#include "compord/bench.hpp"

#include "compord/fpt_solver.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace compord {

LuBenchInstance random_lu_instance(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > n)
    throw Error("bad-bench-size", "need 1 <= k <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9), den(1, 4), icpt(-9, 9);
  LuBenchInstance inst;
  for (std::size_t i = 0; i < n; ++i) {
    Rational a(num(rng), den(rng)), b(icpt(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (i < k)
      inst.decreasing.push_back({Rational(-a), b});
    else
      ((i - k) % 2 == 0 ? inst.lower : inst.upper).push_back({a, b});
  }
  return inst;
}

BenchRow bench_lu(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed) {
  std::vector<double> times;
  for (std::size_t t = 0; t < trials; ++t) {
    auto inst = random_lu_instance(n, k, seed + t);
    auto start = std::chrono::steady_clock::now();
    auto r = lu_ordered_optimal(inst.lower, inst.upper, inst.decreasing);
    auto stop = std::chrono::steady_clock::now();
    if (r.sigma.size() != n)
      throw Error("bench-invalid", "ordered split lost functions");
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  BenchRow row{n, k, trials, 0};
  if (!times.empty())
    row.median_ms = times.size() % 2 ? times[times.size() / 2]
                                     : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
  return row;
}

} // namespace compord
