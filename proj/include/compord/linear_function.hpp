#pragma once

#include "compord/direction.hpp"
#include "compord/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace compord {

// f(x) = a*x + b
struct LinearFunction {
  Rational a{1};
  Rational b{0};

  static LinearFunction identity() { return {}; }
  static LinearFunction constant(Rational c) { return {Rational(0), std::move(c)}; }

  friend bool operator==(const LinearFunction &, const LinearFunction &) = default;
};

enum class FunctionClass { Identity, Constant, Increasing, Decreasing };

FunctionClass classify(const LinearFunction &f);
inline bool is_identity(const LinearFunction &f) { return f.a == 1 && f.b == 0; }
// Slope > 0, identity included.
inline bool is_monotone(const LinearFunction &f) { return f.a > 0; }
inline bool is_nondecreasing(const LinearFunction &f) { return f.a >= 0; }

// position i holds the index applied i-th; index 0 is applied first.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation_of(const Permutation &sigma, std::size_t n);

// h after g.
LinearFunction compose(const LinearFunction &h, const LinearFunction &g);
LinearFunction compose_seq(std::span<const LinearFunction> fs, const Permutation &sigma);
Rational evaluate(const LinearFunction &f, const Rational &c);

// Vector (b, 1 - a). With perturb_constants a constant f is read as f + e*x.
Vec2 vector_of(const LinearFunction &f);
Direction direction(const LinearFunction &f, bool perturb_constants = false);

// x -> a*x - b; max over orders of f equals minus min over orders of tilde f.
LinearFunction tilde(const LinearFunction &f);

// Sign of (g o h) - (h o g); +1 means h o g lies below g o h everywhere.
int commute_sign(const LinearFunction &g, const LinearFunction &h);

bool is_colinear(std::span<const LinearFunction> fs);

// Pointwise order of two functions with equal slope.
int compare_same_slope(const LinearFunction &f, const LinearFunction &g);

std::string to_string(const LinearFunction &f);

} // namespace compord
