#pragma once

// Solver core shared by the linear-function and 2x2 matrix front ends.
//
// Elements are upper triangular (a b; 0 d). A linear function a*x + b is
// (a b; 0 1), and composition h o g is the product H*G, so every order of a
// multiset shares the diagonal products and differs only in the upper-right
// entry. The core minimizes that entry.
//
// Elements must be sign-normalized: d >= 0, and a >= 0 whenever d == 0.
// A zero d is read as an infinitesimal e > 0; a zero a with d > 0 (a
// constant) gets the smaller infinitesimal slope of the second level.

#include "compord/direction.hpp"
#include "compord/linear_function.hpp"

#include <functional>
#include <span>
#include <vector>

namespace compord {

struct TriElement {
  Rational a{1};
  Rational b{0};
  Rational d{1};

  static TriElement from(const LinearFunction &f) { return {f.a, f.b, Rational(1)}; }
  LinearFunction as_linear() const;
  bool normalized() const { return d > 0 || (d == 0 && a >= 0); }
  friend bool operator==(const TriElement &, const TriElement &) = default;
};

// outer * inner, i.e. inner is applied first.
TriElement operator*(const TriElement &outer, const TriElement &inner);

// Positive scalar matrix; commutes with everything and has no direction.
bool is_neutral(const TriElement &t);
inline bool is_decreasing(const TriElement &t) { return t.a < 0; }

Vec2 plain_vector(const TriElement &t);
Direction perturbed_direction(const TriElement &t);

// Compares upper-right entries of two orders of one multiset.
int compare_entry(const TriElement &x, const TriElement &y);

TriElement product(std::span<const TriElement> elems, const Permutation &order);

struct CoreResult {
  Permutation order;
  TriElement product;
};

// Non-neutral indices sorted by perturbed angle (stable), neutral ones after.
Permutation counterclockwise_order(std::span<const TriElement> elems);

// Products of all cyclic shifts of `order`; shift k applies order[k..] first.
std::vector<TriElement> shift_products(std::span<const TriElement> elems,
                                       std::span<const std::size_t> order);

// All elements nondecreasing (a >= 0).
CoreResult ccw_minimize(std::span<const TriElement> elems);

struct RayGroups {
  std::vector<TriElement> elements;           // product of each group
  std::vector<Direction> directions;          // shared perturbed ray
  std::vector<std::vector<std::size_t>> members; // original indices, applied in this order
};

// Groups non-neutral nondecreasing elements by perturbed ray, ascending angle.
RayGroups group_by_ray(std::span<const TriElement> elems, std::span<const std::size_t> indices);

struct SplitCandidate {
  Direction psi1;
  Direction psi2;
  std::vector<std::size_t> lower; // group ids, counterclockwise rotation
  std::vector<std::size_t> upper; // group ids, clockwise rotation
};

// Every (psi1, psi2) split, deduplicated, crossed with every rotation.
// The visitor returns false to stop early.
void for_each_split_candidate(const RayGroups &groups,
                              const std::function<bool(const SplitCandidate &)> &visit);
std::vector<SplitCandidate> split_candidates(const RayGroups &groups);

enum class Slot { Lower, Upper, Decreasing };
struct SlotRef {
  Slot slot;
  std::size_t index;
  friend bool operator==(const SlotRef &, const SlotRef &) = default;
};

struct LuResult {
  std::vector<SlotRef> order; // application order
  TriElement product;
};

// Best order of lower, upper and decreasing elements in which lower keeps its
// order and sits after an even number of decreasing elements, and upper keeps
// its order after an odd number. Requires !decreasing.empty().
LuResult lu_ordered_minimize(std::span<const TriElement> lower, std::span<const TriElement> upper,
                             std::span<const TriElement> decreasing);

// Some element has a < 0.
CoreResult fpt_minimize(std::span<const TriElement> elems);

// Dispatches to ccw_minimize or fpt_minimize.
CoreResult minimize(std::span<const TriElement> elems);

} // namespace compord
