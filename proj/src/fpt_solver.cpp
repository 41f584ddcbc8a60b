#include "compord/fpt_solver.hpp"

#include "compord/triangular.hpp"

#include <algorithm>

namespace compord {

namespace {

std::vector<TriElement> to_elements(std::span<const LinearFunction> fs) {
  std::vector<TriElement> out;
  out.reserve(fs.size());
  for (const auto &f : fs)
    out.push_back(TriElement::from(f));
  return out;
}

} // namespace

GeneralInstance split_by_slope(std::span<const LinearFunction> fs) {
  GeneralInstance gi;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (classify(fs[i])) {
    case FunctionClass::Identity: gi.identities.push_back(i); break;
    case FunctionClass::Constant: gi.constants.push_back(i); break;
    case FunctionClass::Increasing: gi.increasing.push_back(i); break;
    case FunctionClass::Decreasing: gi.decreasing.push_back(i); break;
    }
  }
  return gi;
}

GroupedFunctions group_equal_angles(std::span<const LinearFunction> fs) {
  auto elems = to_elements(fs);
  RayGroups rg = group_by_ray(elems, identity_permutation(fs.size()));
  GroupedFunctions out;
  for (std::size_t g = 0; g < rg.elements.size(); ++g) {
    out.functions.push_back(rg.elements[g].as_linear());
    out.directions.push_back(direction(fs[rg.members[g].front()], true));
  }
  out.members = std::move(rg.members);
  return out;
}

namespace {

RayGroups as_ray_groups(const GroupedFunctions &groups) {
  RayGroups rg;
  for (const auto &f : groups.functions) {
    rg.elements.push_back(TriElement::from(f));
    rg.directions.push_back(perturbed_direction(rg.elements.back()));
  }
  rg.members = groups.members;
  return rg;
}

} // namespace

std::vector<LUCandidate> enumerate_candidates(const GroupedFunctions &groups) {
  std::vector<LUCandidate> out;
  for (auto &c : split_candidates(as_ray_groups(groups)))
    out.push_back({std::move(c.psi1), std::move(c.psi2), std::move(c.lower), std::move(c.upper)});
  return out;
}

LUOrdered lu_ordered_optimal(std::span<const LinearFunction> lower,
                             std::span<const LinearFunction> upper,
                             std::span<const LinearFunction> decreasing) {
  if (decreasing.empty())
    throw Error("no-decreasing", "ordered split needs at least one decreasing function");
  for (const auto &g : decreasing)
    if (g.a >= 0)
      throw Error("not-decreasing", "decreasing list holds a function with slope >= 0");
  auto lo = to_elements(lower), up = to_elements(upper), dec = to_elements(decreasing);
  LuResult r = lu_ordered_minimize(lo, up, dec);
  LUOrdered out;
  for (const auto &ref : r.order) {
    switch (ref.slot) {
    case Slot::Lower: out.sigma.push_back(ref.index); break;
    case Slot::Upper: out.sigma.push_back(lower.size() + ref.index); break;
    case Slot::Decreasing: out.sigma.push_back(lower.size() + upper.size() + ref.index); break;
    }
  }
  out.composite = r.product.as_linear();
  return out;
}

OrderingResult solve_general_min(std::span<const LinearFunction> fs, const Rational &c) {
  auto elems = to_elements(fs);
  if (!std::any_of(elems.begin(), elems.end(), is_decreasing))
    return solve_min(fs, c);
  CoreResult r = fpt_minimize(elems);
  OrderingResult out;
  out.sigma = std::move(r.order);
  out.composite = r.product.as_linear();
  out.value = evaluate(out.composite, c);
  out.case_tag = CaseTag::Fpt;
  return out;
}

OrderingResult solve_general_max(std::span<const LinearFunction> fs, const Rational &c) {
  std::vector<LinearFunction> dual;
  for (const auto &f : fs)
    dual.push_back(tilde(f));
  OrderingResult r = solve_general_min(dual, Rational(-c));
  r.composite = tilde(r.composite);
  r.value = evaluate(r.composite, c);
  return r;
}

OrderingResult solve(std::span<const LinearFunction> fs, const Rational &c, Sense sense) {
  return sense == Sense::Min ? solve_general_min(fs, c) : solve_general_max(fs, c);
}

LUPartition lu_partition(std::span<const LinearFunction> fs, const Permutation &sigma) {
  if (!is_permutation_of(sigma, fs.size()))
    throw Error("length-mismatch", "permutation does not match the function list");
  LUPartition p;
  p.intervals.emplace_back();
  for (auto i : sigma) {
    if (fs[i].a < 0)
      p.intervals.emplace_back();
    else
      p.intervals.back().push_back(i);
  }
  const std::size_t k = p.intervals.size() - 1;
  for (std::size_t j = 0; j <= k; ++j) {
    auto &dst = (k - j) % 2 == 0 ? p.lower : p.upper;
    dst.insert(dst.end(), p.intervals[j].begin(), p.intervals[j].end());
  }
  return p;
}

} // namespace compord
