#include "doctest.h"

#include "compord/ccw_solver.hpp"
#include "compord/fpt_solver.hpp"
#include "compord/oracle.hpp"
#include "support.hpp"

using namespace compord;
using namespace testing_support;

namespace {

std::string show(std::span<const LinearFunction> fs) {
  std::string s;
  for (const auto &f : fs)
    s += to_string(f) + " ; ";
  return s;
}

} // namespace

TEST_CASE("solve_min and solve_max match brute force on monotone instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    auto fs = random_monotone(rng, 1 + trial % 7);
    CAPTURE(show(fs));
    auto lo = brute_min_composition(fs, 0, Sense::Min);
    auto hi = brute_min_composition(fs, 0, Sense::Max);
    CHECK(solve_min(fs, 0).value == lo.best_value);
    CHECK(solve_max(fs, 0).value == hi.best_value);
  }
}

TEST_CASE("constants are handled by the perturbed order") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    auto fs = random_with_constants(rng, 1 + trial % 6);
    CAPTURE(show(fs));
    CHECK(solve_min(fs, 0).value == brute_min_composition(fs, 0).best_value);
    CHECK(solve_max(fs, 0).value == brute_min_composition(fs, 0, Sense::Max).best_value);
  }
}

TEST_CASE("general instances with decreasing functions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t n = 1 + trial % 7;
    std::size_t k = std::min<std::size_t>(n, 1 + trial % 3);
    auto fs = random_general(rng, n, k);
    CAPTURE(show(fs));
    CHECK(solve(fs, 0, Sense::Min).value == brute_min_composition(fs, 0).best_value);
    CHECK(solve(fs, 1, Sense::Max).value == brute_min_composition(fs, 1, Sense::Max).best_value);
  }
}

TEST_CASE("count_optimal and the certificate agree with the oracle") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 400; ++trial) {
    auto fs = random_monotone(rng, 1 + trial % 7);
    CAPTURE(show(fs));
    auto rep = brute_min_composition(fs, 0);
    CHECK(count_optimal(fs) == BigInt(rep.optimal.size()));
    auto listed = enumerate_optimal(fs, 100000);
    std::sort(listed.begin(), listed.end());
    CHECK(listed == rep.optimal);
    if (fs.size() <= 5) {
      Permutation sigma = identity_permutation(fs.size());
      do {
        bool optimal = std::binary_search(rep.optimal.begin(), rep.optimal.end(), sigma);
        CHECK(is_optimal_certificate(fs, sigma) == optimal);
        CHECK(is_locally_optimal(fs, sigma) == optimal);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
}

TEST_CASE("certificate with constants") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    auto fs = random_with_constants(rng, 1 + trial % 5);
    CAPTURE(show(fs));
    auto rep = brute_min_composition(fs, 0);
    Permutation sigma = identity_permutation(fs.size());
    do {
      CAPTURE(sigma);
      bool optimal = std::binary_search(rep.optimal.begin(), rep.optimal.end(), sigma);
      CHECK(is_optimal_certificate(fs, sigma) == optimal);
      CHECK(is_locally_optimal(fs, sigma) == optimal);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("matrix orderings") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 400; ++trial) {
    auto ms = random_triangular(rng, 1 + trial % 6, trial % 2 == 1);
    MatrixInstance inst{ms};
    inst.sense = trial % 4 < 2 ? Sense::Min : Sense::Max;
    CHECK(solve_matrix2(inst).value == brute_min_matrix(ms, inst.w, inst.y, inst.sense).best_value);
  }
}

TEST_CASE("max-plus orderings") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    auto ns = random_maxplus(rng, 1 + trial % 7, 6);
    CHECK(solve_maxplus_min(ns).value.value() == brute_min_maxplus(ns).best_value);
    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
      CHECK_NOTHROW(mp_commutes(ns[i], ns[i + 1]));
  }
}
