#include "compord/linear_function.hpp"

#include <numeric>

namespace compord {

FunctionClass classify(const LinearFunction &f) {
  if (is_identity(f))
    return FunctionClass::Identity;
  int s = sgn(f.a);
  if (s == 0)
    return FunctionClass::Constant;
  return s > 0 ? FunctionClass::Increasing : FunctionClass::Decreasing;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_permutation_of(const Permutation &sigma, std::size_t n) {
  if (sigma.size() != n)
    return false;
  std::vector<bool> seen(n, false);
  for (auto i : sigma) {
    if (i >= n || seen[i])
      return false;
    seen[i] = true;
  }
  return true;
}

LinearFunction compose(const LinearFunction &h, const LinearFunction &g) {
  return {h.a * g.a, h.a * g.b + h.b};
}

LinearFunction compose_seq(std::span<const LinearFunction> fs, const Permutation &sigma) {
  if (!is_permutation_of(sigma, fs.size()))
    throw Error("length-mismatch", "permutation does not match the function list");
  LinearFunction acc;
  for (auto i : sigma)
    acc = compose(fs[i], acc);
  return acc;
}

Rational evaluate(const LinearFunction &f, const Rational &c) { return f.a * c + f.b; }

Vec2 vector_of(const LinearFunction &f) { return {f.b, 1 - f.a}; }

Direction direction(const LinearFunction &f, bool perturb_constants) {
  EpsVector v{vector_of(f), {}, {}};
  if (perturb_constants && f.a == 0)
    v.eps = {0, -1};
  return Direction(std::move(v));
}

LinearFunction tilde(const LinearFunction &f) { return {f.a, -f.b}; }

int commute_sign(const LinearFunction &g, const LinearFunction &h) {
  return sgn(g.b * (1 - h.a) - h.b * (1 - g.a));
}

bool is_colinear(std::span<const LinearFunction> fs) {
  const LinearFunction *ref = nullptr;
  for (const auto &f : fs) {
    if (is_identity(f))
      continue;
    if (!ref)
      ref = &f;
    else if (cross(vector_of(*ref), vector_of(f)) != 0)
      return false;
  }
  return true;
}

int compare_same_slope(const LinearFunction &f, const LinearFunction &g) {
  if (f.a != g.a)
    throw Error("slope-mismatch", "composites of one multiset must share a slope");
  return sgn(f.b - g.b);
}

std::string to_string(const LinearFunction &f) {
  return to_string(f.a) + "x" + (f.b < 0 ? " - " + to_string(Rational(-f.b)) : " + " + to_string(f.b));
}

} // namespace compord
