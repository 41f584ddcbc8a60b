#pragma once

// Orderings of nondecreasing linear functions (all slopes >= 0).
//
// A composite of every order of a multiset shares one slope, so "minimum"
// is pointwise: the returned order is optimal for every evaluation point.

#include "compord/linear_function.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace compord {

enum class CaseTag { Colinear, PotentiallyIdentical, General, ConstantPresent, Fpt };

const char *case_name(CaseTag tag);

struct OrderingResult {
  Permutation sigma;
  LinearFunction composite;
  Rational value;
  CaseTag case_tag = CaseTag::General;
};

struct InstanceClass {
  CaseTag tag = CaseTag::General;
  // General: angles of the first and last non-identity function of an optimum.
  std::optional<Direction> first_boundary;
  std::optional<Direction> last_boundary;
  // ConstantPresent: smallest intercept among the constants.
  std::optional<Rational> beta_min;
};

Permutation sort_counterclockwise(std::span<const LinearFunction> fs);

OrderingResult solve_min(std::span<const LinearFunction> fs, const Rational &c);
OrderingResult solve_max(std::span<const LinearFunction> fs, const Rational &c);

InstanceClass classify_instance(std::span<const LinearFunction> fs);

// Non-identity angles of sigma have at most one cyclic descent. Constants
// are read with their infinitesimal slope unless perturb_constants is false.
bool is_counterclockwise(std::span<const LinearFunction> fs, const Permutation &sigma,
                         bool perturb_constants = true);

// Decides optimality from the angular structure alone.
bool is_optimal_certificate(std::span<const LinearFunction> fs, const Permutation &sigma);

// No swap of two adjacent blocks improves the composite.
bool is_locally_optimal(std::span<const LinearFunction> fs, const Permutation &sigma);

// Number of optimal orders. Slopes must be strictly positive.
BigInt count_optimal(std::span<const LinearFunction> fs);

// Visits optimal orders, each once; the visitor returns false to stop.
void for_each_optimal(std::span<const LinearFunction> fs,
                      const std::function<bool(const Permutation &)> &visit);
std::vector<Permutation> enumerate_optimal(std::span<const LinearFunction> fs, std::size_t limit);

// Values of every cyclic shift; entry k applies sigma[k..] first, then sigma[..k).
std::vector<Rational> shift_profile(std::span<const LinearFunction> fs, const Permutation &sigma,
                                    const Rational &c);

// Cyclic sequence rises once and falls once. When strict, adjacent equal
// values may only sit at the minimum or the maximum.
bool is_cyclically_unimodal(std::span<const Rational> values, bool strict);

} // namespace compord
