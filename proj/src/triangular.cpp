#include "compord/triangular.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>

namespace compord {

LinearFunction TriElement::as_linear() const {
  if (d != 1)
    throw Error("not-linear", "element with d != 1 is not a linear function");
  return {a, b};
}

TriElement operator*(const TriElement &outer, const TriElement &inner) {
  return {outer.a * inner.a, outer.a * inner.b + outer.b * inner.d, outer.d * inner.d};
}

bool is_neutral(const TriElement &t) { return t.b == 0 && t.a == t.d && t.d > 0; }

Vec2 plain_vector(const TriElement &t) { return {t.b, t.d - t.a}; }

Direction perturbed_direction(const TriElement &t) {
  if (!t.normalized())
    throw Error("not-normalized", "element needs d >= 0, and a >= 0 when d = 0");
  if (is_neutral(t))
    return {};
  EpsVector v{plain_vector(t), {}, {}};
  if (t.d == 0)
    v.eps = {0, 1};
  if (t.a == 0)
    v.eps2 = {0, -1};
  return Direction(std::move(v));
}

int compare_entry(const TriElement &x, const TriElement &y) {
  if (x.a != y.a || x.d != y.d)
    throw Error("slope-mismatch", "compared products do not share their diagonal");
  return sgn(x.b - y.b);
}

TriElement product(std::span<const TriElement> elems, const Permutation &order) {
  TriElement acc;
  for (auto i : order)
    acc = elems[i] * acc;
  return acc;
}

Permutation counterclockwise_order(std::span<const TriElement> elems) {
  Permutation moving, neutral;
  std::vector<Direction> dirs(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    dirs[i] = perturbed_direction(elems[i]);
    (dirs[i].is_bot() ? neutral : moving).push_back(i);
  }
  std::stable_sort(moving.begin(), moving.end(),
                   [&](std::size_t i, std::size_t j) { return cmp_polar(dirs[i], dirs[j]) < 0; });
  moving.insert(moving.end(), neutral.begin(), neutral.end());
  return moving;
}

std::vector<TriElement> shift_products(std::span<const TriElement> elems,
                                       std::span<const std::size_t> order) {
  const std::size_t m = order.size();
  std::vector<TriElement> prefix(m + 1), suffix(m + 1);
  for (std::size_t k = 0; k < m; ++k)
    prefix[k + 1] = elems[order[k]] * prefix[k];
  for (std::size_t k = m; k-- > 0;)
    suffix[k] = suffix[k + 1] * elems[order[k]];
  std::vector<TriElement> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k)
    out.push_back(prefix[k] * suffix[k]);
  return out;
}

CoreResult ccw_minimize(std::span<const TriElement> elems) {
  for (const auto &t : elems)
    if (is_decreasing(t))
      throw Error("not-nondecreasing", "counterclockwise solver needs slopes >= 0");
  Permutation sorted = counterclockwise_order(elems);
  std::size_t m = 0;
  while (m < sorted.size() && !is_neutral(elems[sorted[m]]))
    ++m;
  if (m == 0)
    return {sorted, product(elems, sorted)};

  auto shifts = shift_products(elems, std::span(sorted).first(m));
  std::size_t best = 0;
  for (std::size_t k = 1; k < m; ++k)
    if (compare_entry(shifts[k], shifts[best]) < 0)
      best = k;

  Permutation order;
  order.reserve(sorted.size());
  for (std::size_t k = 0; k < m; ++k)
    order.push_back(sorted[(best + k) % m]);
  order.insert(order.end(), sorted.begin() + static_cast<std::ptrdiff_t>(m), sorted.end());
  return {order, product(elems, order)};
}

RayGroups group_by_ray(std::span<const TriElement> elems, std::span<const std::size_t> indices) {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::vector<Direction> dirs(elems.size());
  for (auto i : idx) {
    dirs[i] = perturbed_direction(elems[i]);
    if (dirs[i].is_bot() || is_decreasing(elems[i]))
      throw Error("not-groupable", "only non-neutral nondecreasing elements are grouped");
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return cmp_polar(dirs[i], dirs[j]) < 0; });
  RayGroups g;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || cmp_polar(dirs[idx[k - 1]], dirs[idx[k]]) != 0) {
      g.directions.push_back(dirs[idx[k]]);
      g.members.emplace_back();
    }
    g.members.back().push_back(idx[k]);
  }
  for (auto &members : g.members) {
    std::sort(members.begin(), members.end());
    TriElement acc;
    for (auto i : members)
      acc = elems[i] * acc;
    g.elements.push_back(acc);
  }
  return g;
}

namespace {

const Direction &pi_direction() {
  static const Direction d(Rational(-1), Rational(0));
  return d;
}

template <class T> std::vector<T> rotated(const std::vector<T> &v, std::size_t k) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[(i + k) % v.size()];
  return out;
}

} // namespace

void for_each_split_candidate(const RayGroups &groups,
                              const std::function<bool(const SplitCandidate &)> &visit) {
  const auto &dirs = groups.directions;
  std::vector<Direction> first{pi_direction()}, second{pi_direction()};
  for (const auto &d : dirs) {
    if (half_plane(d) == 1)
      first.push_back(d);
    else if (half_plane(d) == 3)
      second.push_back(d);
  }

  std::set<std::vector<bool>> seen;
  for (const auto &psi1 : first) {
    for (const auto &psi2 : second) {
      std::vector<bool> in_lower(dirs.size());
      std::vector<std::size_t> lower, upper;
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        in_lower[i] = cmp_polar(psi1, dirs[i]) <= 0 && cmp_polar(dirs[i], psi2) <= 0;
        (in_lower[i] ? lower : upper).push_back(i);
      }
      if (!seen.insert(in_lower).second)
        continue;
      // Groups are in ascending angle; upper runs clockwise.
      std::reverse(upper.begin(), upper.end());
      for (std::size_t rl = 0; rl < std::max<std::size_t>(1, lower.size()); ++rl)
        for (std::size_t ru = 0; ru < std::max<std::size_t>(1, upper.size()); ++ru)
          if (!visit({psi1, psi2, rotated(lower, rl), rotated(upper, ru)}))
            return;
    }
  }
}

std::vector<SplitCandidate> split_candidates(const RayGroups &groups) {
  std::vector<SplitCandidate> out;
  for_each_split_candidate(groups, [&](const SplitCandidate &c) {
    out.push_back(c);
    return true;
  });
  return out;
}

LuResult lu_ordered_minimize(std::span<const TriElement> lower, std::span<const TriElement> upper,
                             std::span<const TriElement> decreasing) {
  const std::size_t k = decreasing.size();
  if (k == 0)
    throw Error("no-decreasing", "ordered split needs at least one decreasing element");
  if (k > 20)
    throw Error("too-many-decreasing", "subset table would exceed memory");
  const std::size_t nl = lower.size(), nu = upper.size();
  const std::size_t masks = std::size_t{1} << k;
  const std::size_t full = masks - 1;

  struct Cell {
    std::optional<TriElement> value;
    SlotRef choice{Slot::Lower, 0};
  };
  std::vector<Cell> table((nl + 1) * (nu + 1) * masks);
  auto at = [&](std::size_t s, std::size_t t, std::size_t g) -> Cell & {
    return table[(s * (nu + 1) + t) * masks + g];
  };

  for (std::size_t s = 0; s <= nl; ++s) {
    for (std::size_t t = 0; t <= nu; ++t) {
      for (std::size_t g = 0; g < masks; ++g) {
        Cell &cell = at(s, t, g);
        if (g == 0) {
          if (s == 0 && t == 0) {
            cell.value = TriElement{};
            continue;
          }
          if ((k % 2 == 0 && t > 0) || (k % 2 == 1 && s > 0))
            continue;
        }
        const bool minimizing = (k - static_cast<std::size_t>(std::popcount(g))) % 2 == 0;
        auto offer = [&](const TriElement &outer, const Cell &inner, SlotRef ref) {
          if (!inner.value)
            return;
          TriElement cand = outer * *inner.value;
          if (cell.value) {
            int c = compare_entry(cand, *cell.value);
            if (minimizing ? c >= 0 : c <= 0)
              return;
          }
          cell.value = std::move(cand);
          cell.choice = ref;
        };
        for (std::size_t j = 0; j < k; ++j)
          if (g >> j & 1)
            offer(decreasing[j], at(s, t, g & ~(std::size_t{1} << j)), {Slot::Decreasing, j});
        if (minimizing && s > 0)
          offer(lower[s - 1], at(s - 1, t, g), {Slot::Lower, s - 1});
        if (!minimizing && t > 0)
          offer(upper[t - 1], at(s, t - 1, g), {Slot::Upper, t - 1});
      }
    }
  }

  LuResult result;
  const Cell &final_cell = at(nl, nu, full);
  if (!final_cell.value)
    throw Error("infeasible-split", "no order realizes the requested split");
  result.product = *final_cell.value;
  std::size_t s = nl, t = nu, g = full;
  while (s + t + static_cast<std::size_t>(std::popcount(g)) > 0) {
    SlotRef ref = at(s, t, g).choice;
    result.order.push_back(ref);
    switch (ref.slot) {
    case Slot::Lower: --s; break;
    case Slot::Upper: --t; break;
    case Slot::Decreasing: g &= ~(std::size_t{1} << ref.index); break;
    }
  }
  std::reverse(result.order.begin(), result.order.end());
  return result;
}

CoreResult fpt_minimize(std::span<const TriElement> elems) {
  std::vector<std::size_t> moving, decreasing, neutral;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (is_decreasing(elems[i]))
      decreasing.push_back(i);
    else if (is_neutral(elems[i]))
      neutral.push_back(i);
    else
      moving.push_back(i);
  }
  if (decreasing.empty())
    return ccw_minimize(elems);

  RayGroups groups = group_by_ray(elems, moving);
  std::vector<TriElement> dec;
  for (auto i : decreasing)
    dec.push_back(elems[i]);

  std::optional<LuResult> best;
  SplitCandidate best_split;
  std::vector<TriElement> lower, upper;
  for_each_split_candidate(groups, [&](const SplitCandidate &c) {
    lower.clear();
    upper.clear();
    for (auto i : c.lower)
      lower.push_back(groups.elements[i]);
    for (auto i : c.upper)
      upper.push_back(groups.elements[i]);
    LuResult r = lu_ordered_minimize(lower, upper, dec);
    if (!best || compare_entry(r.product, best->product) < 0) {
      best = std::move(r);
      best_split = c;
    }
    return true;
  });

  Permutation order;
  for (const auto &ref : best->order) {
    switch (ref.slot) {
    case Slot::Lower:
      for (auto i : groups.members[best_split.lower[ref.index]])
        order.push_back(i);
      break;
    case Slot::Upper:
      for (auto i : groups.members[best_split.upper[ref.index]])
        order.push_back(i);
      break;
    case Slot::Decreasing:
      order.push_back(decreasing[ref.index]);
      break;
    }
  }
  order.insert(order.end(), neutral.begin(), neutral.end());
  return {order, product(elems, order)};
}

CoreResult minimize(std::span<const TriElement> elems) {
  bool any_decreasing = std::any_of(elems.begin(), elems.end(), is_decreasing);
  return any_decreasing ? fpt_minimize(elems) : ccw_minimize(elems);
}

} // namespace compord
