#pragma once

#include "compord/rational.hpp"

#include <compare>

namespace compord {

struct Vec2 {
  Rational x;
  Rational y;
  friend bool operator==(const Vec2 &, const Vec2 &) = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

Rational cross(const Vec2 &u, const Vec2 &v);
Rational dot(const Vec2 &u, const Vec2 &v);

// base + eps*e + eps2*d, where e > 0 is infinitesimal and d > 0 is
// infinitesimal even relative to every power of e.
// Linear functions only ever use `eps`; `eps2` carries the second
// perturbation level needed when matrices with a zero lower-right entry
// coexist with constants.
struct EpsVector {
  Vec2 base;
  Vec2 eps;
  Vec2 eps2;
  friend bool operator==(const EpsVector &, const EpsVector &) = default;
  bool is_zero() const { return base.is_zero() && eps.is_zero() && eps2.is_zero(); }
  EpsVector operator-() const;
};

// Sign of u.x*v.y - u.y*v.x at infinitesimal perturbation, decided
// lexicographically by perturbation order.
int cross_sign(const EpsVector &u, const EpsVector &v);
int dot_sign(const EpsVector &u, const EpsVector &v);

// Polar angle class of a vector, possibly the origin (Bot).
class Direction {
public:
  Direction() = default;
  explicit Direction(EpsVector v) : v_(std::move(v)) {}
  explicit Direction(Vec2 base) : v_{std::move(base), {}, {}} {}
  Direction(Rational x, Rational y) : Direction(Vec2{std::move(x), std::move(y)}) {}

  bool is_bot() const { return v_.is_zero(); }
  const EpsVector &vec() const { return v_; }

  // Same ray: parallel and pointing the same way. Bot equals only Bot.
  friend bool operator==(const Direction &a, const Direction &b);

private:
  EpsVector v_;
};

// 0: positive x axis, 1: open upper half plane, 2: negative x axis,
// 3: open lower half plane.
int half_plane(const Direction &d);

// Order by polar angle lifted to [0, 2*pi). Equivalent iff same ray.
std::weak_ordering cmp_polar(const Direction &a, const Direction &b);

// theta(d) in [theta(lo), theta(hi)] walking counterclockwise from lo.
bool in_closed_arc(const Direction &d, const Direction &lo, const Direction &hi);

Direction antipode(const Direction &d);

} // namespace compord
