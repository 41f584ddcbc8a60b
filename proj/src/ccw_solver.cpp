#include "compord/ccw_solver.hpp"

#include "compord/triangular.hpp"

#include <algorithm>

namespace compord {

const char *case_name(CaseTag tag) {
  switch (tag) {
  case CaseTag::Colinear: return "colinear";
  case CaseTag::PotentiallyIdentical: return "potentially_identical";
  case CaseTag::General: return "general";
  case CaseTag::ConstantPresent: return "constant_present";
  case CaseTag::Fpt: return "fpt";
  }
  return "general";
}

namespace {

void require_nondecreasing(std::span<const LinearFunction> fs) {
  for (const auto &f : fs)
    if (f.a < 0)
      throw Error("not-nondecreasing", "a function has a negative slope");
}

void require_permutation(std::span<const LinearFunction> fs, const Permutation &sigma) {
  if (!is_permutation_of(sigma, fs.size()))
    throw Error("length-mismatch", "permutation does not match the function list");
}

std::vector<TriElement> to_elements(std::span<const LinearFunction> fs) {
  std::vector<TriElement> out;
  out.reserve(fs.size());
  for (const auto &f : fs)
    out.push_back(TriElement::from(f));
  return out;
}

bool has_constant(std::span<const LinearFunction> fs) {
  return std::any_of(fs.begin(), fs.end(), [](const LinearFunction &f) { return f.a == 0; });
}

Rational min_constant(std::span<const LinearFunction> fs) {
  std::optional<Rational> m;
  for (const auto &f : fs)
    if (f.a == 0 && (!m || f.b < *m))
      m = f.b;
  return *m;
}

CaseTag tag_for(std::span<const LinearFunction> fs, const LinearFunction &optimum) {
  if (has_constant(fs))
    return CaseTag::ConstantPresent;
  if (is_colinear(fs))
    return CaseTag::Colinear;
  if (is_identity(optimum))
    return CaseTag::PotentiallyIdentical;
  return CaseTag::General;
}

BigInt factorial(std::size_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Angles along sigma, identities skipped.
std::vector<Direction> angles_along(std::span<const LinearFunction> fs, const Permutation &sigma,
                                    bool perturb) {
  std::vector<Direction> out;
  for (auto i : sigma)
    if (auto d = direction(fs[i], perturb); !d.is_bot())
      out.push_back(std::move(d));
  return out;
}

bool at_most_one_descent(const std::vector<Direction> &dirs) {
  int descents = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (cmp_polar(dirs[i], dirs[(i + 1) % dirs.size()]) > 0)
      ++descents;
  return descents <= 1;
}

// Composite direction reflected, inside the arc from the last to the first
// non-identity function of sigma.
bool arc_condition(std::span<const LinearFunction> fs, const Permutation &sigma) {
  LinearFunction composite = compose_seq(fs, sigma);
  Direction dc = direction(composite);
  if (dc.is_bot())
    return true;
  std::optional<std::size_t> first, last;
  for (auto i : sigma) {
    if (is_identity(fs[i]))
      continue;
    if (!first)
      first = i;
    last = i;
  }
  if (!first)
    return true;
  return in_closed_arc(antipode(dc), direction(fs[*last]), direction(fs[*first]));
}

bool constant_certificate(std::span<const LinearFunction> fs, const Permutation &sigma) {
  const Rational beta_min = min_constant(fs);
  const Direction beta_dir = direction(LinearFunction::constant(beta_min));
  const Direction lo = antipode(beta_dir);

  std::size_t q = 0;
  for (std::size_t pos = 0; pos < sigma.size(); ++pos)
    if (fs[sigma[pos]].a == 0)
      q = pos;

  bool optimum_is_beta_min = std::all_of(fs.begin(), fs.end(), [&](const LinearFunction &f) {
    Direction d = direction(f);
    return d.is_bot() || in_closed_arc(d, lo, beta_dir);
  });

  if (optimum_is_beta_min) {
    // The tail from the last constant on must fix beta_min.
    const Vec2 anchor = vector_of(LinearFunction::constant(beta_min));
    for (std::size_t pos = q; pos < sigma.size(); ++pos)
      if (cross(anchor, vector_of(fs[sigma[pos]])) != 0)
        return false;
    return true;
  }

  // Functions applied before the last constant may be reordered freely.
  std::vector<std::size_t> head_moving, head_fixed;
  for (std::size_t pos = 0; pos < q; ++pos)
    (is_identity(fs[sigma[pos]]) ? head_fixed : head_moving).push_back(sigma[pos]);
  std::stable_sort(head_moving.begin(), head_moving.end(), [&](std::size_t i, std::size_t j) {
    return cmp_polar(direction(fs[i]), direction(fs[j])) < 0;
  });
  const std::size_t rotations = std::max<std::size_t>(1, head_moving.size());
  for (std::size_t r = 0; r < rotations; ++r) {
    Permutation mu;
    for (std::size_t k = 0; k < head_moving.size(); ++k)
      mu.push_back(head_moving[(r + k) % head_moving.size()]);
    mu.insert(mu.end(), head_fixed.begin(), head_fixed.end());
    mu.insert(mu.end(), sigma.begin() + static_cast<std::ptrdiff_t>(q), sigma.end());
    if (at_most_one_descent(angles_along(fs, mu, false)) && arc_condition(fs, mu))
      return true;
  }
  return false;
}

struct RayBlocks {
  std::vector<std::vector<std::size_t>> members;
  std::vector<LinearFunction> products;
  std::vector<Vec2> rays;
};

RayBlocks ray_blocks(std::span<const LinearFunction> fs) {
  auto elems = to_elements(fs);
  Permutation sorted = counterclockwise_order(elems);
  RayBlocks blocks;
  for (auto i : sorted) {
    if (is_identity(fs[i]))
      continue;
    bool same = !blocks.members.empty() &&
                direction(fs[blocks.members.back().front()]) == direction(fs[i]);
    if (!same) {
      blocks.members.emplace_back();
      blocks.products.push_back(LinearFunction::identity());
      blocks.rays.push_back(vector_of(fs[i]));
    }
    blocks.members.back().push_back(i);
    blocks.products.back() = compose(fs[i], blocks.products.back());
  }
  return blocks;
}

// Composite of blocks from..from+count-1 (cyclic), applied in that order.
LinearFunction blocks_product(const RayBlocks &b, std::size_t from, std::size_t count) {
  LinearFunction acc;
  for (std::size_t k = 0; k < count; ++k)
    acc = compose(b.products[(from + k) % b.products.size()], acc);
  return acc;
}

struct CountingPlan {
  bool all_orders = false;
  RayBlocks blocks;
  std::vector<bool> optimal_start; // aligned rotation starting at block j is optimal
  std::vector<bool> splittable;    // block j may also straddle the ends
};

CountingPlan counting_plan(std::span<const LinearFunction> fs) {
  for (const auto &f : fs)
    if (f.a <= 0)
      throw Error("counting-unsupported", "counting needs strictly positive slopes");
  CountingPlan plan;
  std::size_t moving = static_cast<std::size_t>(
      std::count_if(fs.begin(), fs.end(), [](const LinearFunction &f) { return !is_identity(f); }));
  if (moving <= 1 || is_colinear(fs)) {
    plan.all_orders = true;
    return plan;
  }
  plan.blocks = ray_blocks(fs);
  const std::size_t g = plan.blocks.products.size();
  std::vector<LinearFunction> aligned(g);
  for (std::size_t j = 0; j < g; ++j)
    aligned[j] = blocks_product(plan.blocks, j, g);
  auto best = std::min_element(aligned.begin(), aligned.end(),
                               [](const auto &x, const auto &y) { return compare_same_slope(x, y) < 0; });
  plan.optimal_start.resize(g);
  plan.splittable.resize(g);
  for (std::size_t j = 0; j < g; ++j) {
    plan.optimal_start[j] = compare_same_slope(aligned[j], *best) == 0;
    LinearFunction rest = blocks_product(plan.blocks, j + 1, g - 1);
    plan.splittable[j] = cross(vector_of(rest), plan.blocks.rays[j]) == 0;
  }
  return plan;
}

} // namespace

Permutation sort_counterclockwise(std::span<const LinearFunction> fs) {
  require_nondecreasing(fs);
  auto elems = to_elements(fs);
  return counterclockwise_order(elems);
}

OrderingResult solve_min(std::span<const LinearFunction> fs, const Rational &c) {
  require_nondecreasing(fs);
  auto elems = to_elements(fs);
  CoreResult r = ccw_minimize(elems);
  OrderingResult out;
  out.sigma = std::move(r.order);
  out.composite = r.product.as_linear();
  out.value = evaluate(out.composite, c);
  out.case_tag = tag_for(fs, out.composite);
  return out;
}

OrderingResult solve_max(std::span<const LinearFunction> fs, const Rational &c) {
  require_nondecreasing(fs);
  std::vector<LinearFunction> dual;
  for (const auto &f : fs)
    dual.push_back(tilde(f));
  OrderingResult r = solve_min(dual, Rational(-c));
  r.composite = tilde(r.composite);
  r.value = evaluate(r.composite, c);
  return r;
}

InstanceClass classify_instance(std::span<const LinearFunction> fs) {
  require_nondecreasing(fs);
  InstanceClass ic;
  if (has_constant(fs)) {
    ic.tag = CaseTag::ConstantPresent;
    ic.beta_min = min_constant(fs);
    return ic;
  }
  if (is_colinear(fs)) {
    ic.tag = CaseTag::Colinear;
    return ic;
  }
  OrderingResult r = solve_min(fs, Rational(0));
  if (is_identity(r.composite)) {
    ic.tag = CaseTag::PotentiallyIdentical;
    return ic;
  }
  ic.tag = CaseTag::General;
  for (auto i : r.sigma) {
    if (is_identity(fs[i]))
      continue;
    if (!ic.first_boundary)
      ic.first_boundary = direction(fs[i]);
    ic.last_boundary = direction(fs[i]);
  }
  return ic;
}

bool is_counterclockwise(std::span<const LinearFunction> fs, const Permutation &sigma,
                         bool perturb_constants) {
  require_nondecreasing(fs);
  require_permutation(fs, sigma);
  return at_most_one_descent(angles_along(fs, sigma, perturb_constants));
}

bool is_optimal_certificate(std::span<const LinearFunction> fs, const Permutation &sigma) {
  require_nondecreasing(fs);
  require_permutation(fs, sigma);
  if (has_constant(fs))
    return constant_certificate(fs, sigma);
  if (is_colinear(fs))
    return true;
  if (!is_counterclockwise(fs, sigma))
    return false;
  // A counterclockwise identity composite means every counterclockwise order
  // composes to the identity.
  return arc_condition(fs, sigma);
}

bool is_locally_optimal(std::span<const LinearFunction> fs, const Permutation &sigma) {
  require_permutation(fs, sigma);
  const std::size_t n = sigma.size();
  const bool nondecreasing = std::all_of(fs.begin(), fs.end(), is_nondecreasing);
  // span[l][r]: composite of positions l..r-1, r in [l, n].
  std::vector<std::vector<LinearFunction>> span(n + 1, std::vector<LinearFunction>(n + 1));
  for (std::size_t l = 0; l <= n; ++l)
    for (std::size_t r = l; r < n; ++r)
      span[l][r + 1] = compose(fs[sigma[r]], span[l][r]);

  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t m = l + 1; m < n; ++m) {
      for (std::size_t r = m + 1; r <= n; ++r) {
        const LinearFunction &first = span[l][m];
        const LinearFunction &second = span[m][r];
        const LinearFunction &inner = span[0][l];
        const LinearFunction &outer = span[r][n];
        if (nondecreasing && inner.a > 0 && outer.a > 0) {
          Direction d1 = direction(first), d2 = direction(second);
          if (d1.is_bot() || d2.is_bot())
            continue;
          if (!in_closed_arc(d2, d1, antipode(d1)))
            return false;
          continue;
        }
        LinearFunction current = compose(outer, compose(compose(second, first), inner));
        LinearFunction swapped = compose(outer, compose(compose(first, second), inner));
        if (compare_same_slope(current, swapped) > 0)
          return false;
      }
    }
  }
  return true;
}

BigInt count_optimal(std::span<const LinearFunction> fs) {
  CountingPlan plan = counting_plan(fs);
  const std::size_t n = fs.size();
  if (plan.all_orders)
    return factorial(n);
  std::size_t moving = 0;
  BigInt within = 1;
  for (const auto &members : plan.blocks.members) {
    moving += members.size();
    within *= factorial(members.size());
  }
  BigInt starts = 0;
  for (std::size_t j = 0; j < plan.optimal_start.size(); ++j) {
    if (!plan.optimal_start[j])
      continue;
    std::size_t mj = plan.blocks.members[j].size();
    starts += plan.splittable[j] ? mj : 1;
  }
  return factorial(n) / factorial(moving) * within * starts;
}

namespace {

// Visits every placement of the identity indices among the slots of a full
// order, keeping the non-identity sequence intact.
bool interleave(const Permutation &moving, const std::vector<std::size_t> &identities, std::size_t n,
                const std::function<bool(const Permutation &)> &visit) {
  const std::size_t z = identities.size();
  std::vector<bool> is_id_slot(n, false);
  std::fill(is_id_slot.end() - static_cast<std::ptrdiff_t>(z), is_id_slot.end(), true);
  do {
    std::vector<std::size_t> ids = identities;
    do {
      Permutation p(n);
      std::size_t mi = 0, ii = 0;
      for (std::size_t pos = 0; pos < n; ++pos)
        p[pos] = is_id_slot[pos] ? ids[ii++] : moving[mi++];
      if (!visit(p))
        return false;
    } while (std::next_permutation(ids.begin(), ids.end()));
  } while (std::next_permutation(is_id_slot.begin(), is_id_slot.end()));
  return true;
}

// Cartesian product of the orders inside every block.
bool block_orders(std::vector<std::vector<std::size_t>> &blocks, std::size_t at,
                  const std::function<bool()> &visit) {
  if (at == blocks.size())
    return visit();
  std::sort(blocks[at].begin(), blocks[at].end());
  do {
    if (!block_orders(blocks, at + 1, visit))
      return false;
  } while (std::next_permutation(blocks[at].begin(), blocks[at].end()));
  return true;
}

} // namespace

void for_each_optimal(std::span<const LinearFunction> fs,
                      const std::function<bool(const Permutation &)> &visit) {
  CountingPlan plan = counting_plan(fs);
  const std::size_t n = fs.size();
  if (plan.all_orders) {
    Permutation p = identity_permutation(n);
    do {
      if (!visit(p))
        return;
    } while (std::next_permutation(p.begin(), p.end()));
    return;
  }
  std::vector<std::size_t> identities;
  for (std::size_t i = 0; i < n; ++i)
    if (is_identity(fs[i]))
      identities.push_back(i);

  const std::size_t g = plan.blocks.members.size();
  auto blocks = plan.blocks.members;
  for (std::size_t j = 0; j < g; ++j) {
    if (!plan.optimal_start[j])
      continue;
    const std::size_t mj = blocks[j].size();
    const std::size_t splits = plan.splittable[j] ? mj : 1;
    for (std::size_t s = 0; s < splits; ++s) {
      bool go_on = block_orders(blocks, 0, [&] {
        Permutation moving;
        moving.insert(moving.end(), blocks[j].begin() + static_cast<std::ptrdiff_t>(s), blocks[j].end());
        for (std::size_t k = 1; k < g; ++k) {
          const auto &b = blocks[(j + k) % g];
          moving.insert(moving.end(), b.begin(), b.end());
        }
        moving.insert(moving.end(), blocks[j].begin(), blocks[j].begin() + static_cast<std::ptrdiff_t>(s));
        return interleave(moving, identities, n, visit);
      });
      if (!go_on)
        return;
    }
  }
}

std::vector<Permutation> enumerate_optimal(std::span<const LinearFunction> fs, std::size_t limit) {
  std::vector<Permutation> out;
  if (limit == 0)
    return out;
  for_each_optimal(fs, [&](const Permutation &p) {
    out.push_back(p);
    return out.size() < limit;
  });
  return out;
}

std::vector<Rational> shift_profile(std::span<const LinearFunction> fs, const Permutation &sigma,
                                    const Rational &c) {
  require_permutation(fs, sigma);
  auto elems = to_elements(fs);
  std::vector<Rational> out;
  for (const auto &t : shift_products(elems, sigma))
    out.push_back(evaluate(t.as_linear(), c));
  return out;
}

bool is_cyclically_unimodal(std::span<const Rational> values, bool strict) {
  const std::size_t n = values.size();
  if (n <= 2)
    return true;
  std::vector<int> signs;
  for (std::size_t k = 0; k < n; ++k)
    if (int s = sgn(values[(k + 1) % n] - values[k]))
      signs.push_back(s);
  std::size_t changes = 0;
  for (std::size_t k = 0; k < signs.size(); ++k)
    if (signs[k] != signs[(k + 1) % signs.size()])
      ++changes;
  if (changes > 2)
    return false;
  if (!strict)
    return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  for (std::size_t k = 0; k < n; ++k)
    if (values[k] == values[(k + 1) % n] && values[k] != *lo && values[k] != *hi)
      return false;
  return true;
}

} // namespace compord
