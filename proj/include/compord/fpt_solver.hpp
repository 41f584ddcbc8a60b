#pragma once

// Orderings of arbitrary linear functions. Exponential only in the number k
// of decreasing functions: every split of the nondecreasing functions into a
// counterclockwise lower chain and a clockwise upper chain is tried, and each
// split is solved by a dynamic program over subsets of the decreasing ones.

#include "compord/ccw_solver.hpp"
#include "compord/linear_function.hpp"

#include <span>
#include <vector>

namespace compord {

struct GeneralInstance {
  std::vector<std::size_t> increasing;
  std::vector<std::size_t> constants;
  std::vector<std::size_t> decreasing;
  std::vector<std::size_t> identities;
};

GeneralInstance split_by_slope(std::span<const LinearFunction> fs);

struct GroupedFunctions {
  std::vector<LinearFunction> functions;          // one per ray, ascending angle
  std::vector<Direction> directions;              // constants carry their perturbation
  std::vector<std::vector<std::size_t>> members;  // input indices, applied in this order
};

// Nondecreasing non-identity functions only.
GroupedFunctions group_equal_angles(std::span<const LinearFunction> fs);

struct LUCandidate {
  Direction psi1;
  Direction psi2;
  std::vector<std::size_t> lower; // indices into the grouped list
  std::vector<std::size_t> upper;
};

std::vector<LUCandidate> enumerate_candidates(const GroupedFunctions &groups);

struct LUOrdered {
  // Application order over the concatenation lower ++ upper ++ decreasing.
  Permutation sigma;
  LinearFunction composite;
};

LUOrdered lu_ordered_optimal(std::span<const LinearFunction> lower,
                             std::span<const LinearFunction> upper,
                             std::span<const LinearFunction> decreasing);

OrderingResult solve_general_min(std::span<const LinearFunction> fs, const Rational &c);
OrderingResult solve_general_max(std::span<const LinearFunction> fs, const Rational &c);

enum class Sense { Min, Max };
// Routes to the counterclockwise solver when nothing decreases.
OrderingResult solve(std::span<const LinearFunction> fs, const Rational &c, Sense sense);

struct LUPartition {
  std::vector<std::size_t> lower;                   // function indices
  std::vector<std::size_t> upper;
  std::vector<std::vector<std::size_t>> intervals;  // between decreasing functions, first applied first
};

// Nondecreasing functions followed by an even number of decreasing ones form
// the lower set; an odd number, the upper set.
LUPartition lu_partition(std::span<const LinearFunction> fs, const Permutation &sigma);

} // namespace compord
