#include "compord/direction.hpp"

#include <array>

namespace compord {

Rational cross(const Vec2 &u, const Vec2 &v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Vec2 &u, const Vec2 &v) { return u.x * v.x + u.y * v.y; }

EpsVector EpsVector::operator-() const {
  return {{-base.x, -base.y}, {-eps.x, -eps.y}, {-eps2.x, -eps2.y}};
}

namespace {

using Bilinear = Rational (*)(const Vec2 &, const Vec2 &);

// Terms ordered 1, e, e^2, d, e*d, d^2.
int expanded_sign(const EpsVector &u, const EpsVector &v, Bilinear f) {
  const std::array<Rational, 6> terms = {
      f(u.base, v.base),
      f(u.eps, v.base) + f(u.base, v.eps),
      f(u.eps, v.eps),
      f(u.eps2, v.base) + f(u.base, v.eps2),
      f(u.eps, v.eps2) + f(u.eps2, v.eps),
      f(u.eps2, v.eps2),
  };
  for (const auto &t : terms)
    if (int s = sgn(t); s != 0)
      return s;
  return 0;
}

int lex_sign(const Rational &a, const Rational &b, const Rational &c) {
  if (int s = sgn(a))
    return s;
  if (int s = sgn(b))
    return s;
  return sgn(c);
}

void require_angle(const Direction &d) {
  if (d.is_bot())
    throw Error("bot-has-no-angle", "the origin vector has no polar angle");
}

} // namespace

int cross_sign(const EpsVector &u, const EpsVector &v) { return expanded_sign(u, v, cross); }
int dot_sign(const EpsVector &u, const EpsVector &v) { return expanded_sign(u, v, dot); }

bool operator==(const Direction &a, const Direction &b) {
  if (a.is_bot() || b.is_bot())
    return a.is_bot() && b.is_bot();
  return cross_sign(a.vec(), b.vec()) == 0 && dot_sign(a.vec(), b.vec()) > 0;
}

int half_plane(const Direction &d) {
  require_angle(d);
  const EpsVector &v = d.vec();
  int ys = lex_sign(v.base.y, v.eps.y, v.eps2.y);
  if (ys > 0)
    return 1;
  if (ys < 0)
    return 3;
  return lex_sign(v.base.x, v.eps.x, v.eps2.x) > 0 ? 0 : 2;
}

std::weak_ordering cmp_polar(const Direction &a, const Direction &b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb)
    return ha <=> hb;
  // Within one class the angular spread is below pi, so orientation decides.
  int s = cross_sign(a.vec(), b.vec());
  if (s > 0)
    return std::weak_ordering::less;
  if (s < 0)
    return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

bool in_closed_arc(const Direction &d, const Direction &lo, const Direction &hi) {
  require_angle(d);
  require_angle(lo);
  require_angle(hi);
  // Position relative to lo: directions below lo wrap past 2*pi.
  auto wraps = [&](const Direction &x) { return cmp_polar(x, lo) < 0; };
  bool wd = wraps(d), wh = wraps(hi);
  if (wd != wh)
    return !wd;
  return cmp_polar(d, hi) <= 0;
}

Direction antipode(const Direction &d) {
  require_angle(d);
  return Direction(-d.vec());
}

} // namespace compord
