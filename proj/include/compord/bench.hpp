#pragma once

// Timing of the ordered-split dynamic program on seeded random instances.

#include "compord/linear_function.hpp"

#include <cstdint>
#include <vector>

namespace compord {

struct LuBenchInstance {
  std::vector<LinearFunction> lower;
  std::vector<LinearFunction> upper;
  std::vector<LinearFunction> decreasing;
};

// n functions, k of them decreasing; the rest split evenly into lower and upper.
LuBenchInstance random_lu_instance(std::size_t n, std::size_t k, std::uint64_t seed);

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  double median_ms = 0;
};

BenchRow bench_lu(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed);

} // namespace compord
