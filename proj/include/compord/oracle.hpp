#pragma once

// Exhaustive n! enumeration in lexicographic order. No pruning.

#include "compord/fpt_solver.hpp"
#include "compord/linear_function.hpp"
#include "compord/matrix2.hpp"
#include "compord/maxplus.hpp"

#include <optional>
#include <span>
#include <vector>

namespace compord {

inline constexpr std::size_t kLinearCap = 9;
inline constexpr std::size_t kMatrixCap = 8;

struct OracleReport {
  Rational best_value;
  std::vector<Permutation> optimal; // lexicographic order
  std::uint64_t evaluated_count = 0;
  std::optional<LinearFunction> best_composite; // linear objectives only
};

using MatrixN = std::vector<std::vector<Rational>>;

// Throws "cap-exceeded" when fs.size() > cap.
OracleReport brute_min_composition(std::span<const LinearFunction> fs, const Rational &c,
                                   Sense sense = Sense::Min, std::size_t cap = kLinearCap);
OracleReport brute_min_matrix(std::span<const MatrixN> ms, std::span<const Rational> w,
                              std::span<const Rational> y, Sense sense = Sense::Min,
                              std::size_t cap = kMatrixCap);
OracleReport brute_min_matrix(std::span<const Matrix2> ms, const Vec2 &w, const Vec2 &y,
                              Sense sense = Sense::Min, std::size_t cap = kMatrixCap);
// Throws "infinite-entry-unsupported" when the best objective is -inf.
OracleReport brute_min_maxplus(std::span<const MaxPlusMatrix2> ns, std::size_t cap = kMatrixCap);
// Minimizes |f^sigma(c) - t|.
OracleReport brute_target(std::span<const LinearFunction> fs, const Rational &c, const Rational &t,
                          std::size_t cap = kLinearCap);

} // namespace compord
