#include "compord/maxplus.hpp"

#include <algorithm>

namespace compord {

const Rational &MaxPlus::value() const {
  if (!v_)
    throw Error("infinite-entry-unsupported", "value of -inf requested");
  return *v_;
}

MaxPlus operator+(const MaxPlus &x, const MaxPlus &y) {
  if (!x.v_)
    return y;
  if (!y.v_)
    return x;
  return *x.v_ < *y.v_ ? y : x;
}

MaxPlus operator*(const MaxPlus &x, const MaxPlus &y) {
  if (!x.v_ || !y.v_)
    return {};
  return MaxPlus(Rational(*x.v_ + *y.v_));
}

std::strong_ordering operator<=>(const MaxPlus &x, const MaxPlus &y) {
  if (!x.v_ || !y.v_)
    return x.v_.has_value() <=> y.v_.has_value();
  int c = cmp(*x.v_, *y.v_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const MaxPlus &x) { return x.is_finite() ? to_string(x.value()) : "-inf"; }

MaxPlusMatrix2 mp_multiply(const MaxPlusMatrix2 &outer, const MaxPlusMatrix2 &inner) {
  return {outer.a * inner.a, outer.a * inner.b + outer.b * inner.d, outer.d * inner.d};
}

MaxPlus mp_objective(std::span<const MaxPlusMatrix2> ns, const Permutation &sigma) {
  if (!is_permutation_of(sigma, ns.size()))
    throw Error("length-mismatch", "permutation does not match the matrix list");
  MaxPlusMatrix2 acc;
  for (auto i : sigma)
    acc = mp_multiply(ns[i], acc);
  return acc.b;
}

namespace {

void require_finite(const MaxPlusMatrix2 &n) {
  if (!n.is_finite())
    throw Error("infinite-entry-unsupported", "matrix entries must be finite");
}

} // namespace

KappaKey kappa_star(const MaxPlusMatrix2 &n) {
  require_finite(n);
  const auto &a = n.a.value(), &b = n.b.value(), &d = n.d.value();
  if (a > d)
    return {{Rational(-1), Rational(b - a)}};
  if (a == d)
    return {{Rational(0), Rational(0)}};
  return {{Rational(1), Rational(d - b)}};
}

KappaKey kappa_full(const MaxPlusMatrix2 &n) {
  require_finite(n);
  const auto &a = n.a.value(), &b = n.b.value(), &d = n.d.value();
  if (a > d)
    return {{Rational(-1), Rational(b - a), Rational(d - b)}};
  if (a == d)
    return {{Rational(0), Rational(0), Rational(0)}};
  return {{Rational(1), Rational(d - b), Rational(a - b)}};
}

KappaKey kappa_blb(const MaxPlusMatrix2 &n) {
  require_finite(n);
  const auto &a = n.a.value(), &b = n.b.value(), &d = n.d.value();
  if (a >= d)
    return {{Rational(-1), Rational(b - a)}};
  return {{Rational(1), Rational(d - b)}};
}

Permutation sort_by_key(std::span<const MaxPlusMatrix2> ns, KappaKey (*key)(const MaxPlusMatrix2 &)) {
  std::vector<KappaKey> keys;
  for (const auto &n : ns)
    keys.push_back(key(n));
  Permutation order = identity_permutation(ns.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });
  return order;
}

MaxPlusSolution solve_maxplus_min(std::span<const MaxPlusMatrix2> ns) {
  MaxPlusSolution s;
  s.sigma = sort_by_key(ns, kappa_star);
  s.value = mp_objective(ns, s.sigma);
  return s;
}

std::vector<MaxPlusMatrix2> flowshop_to_maxplus(std::span<const Job> jobs) {
  std::vector<MaxPlusMatrix2> out;
  for (const auto &j : jobs) {
    if (j.p1 < 0 || j.p2 < 0)
      throw Error("negative-time", "processing times must be nonnegative");
    out.push_back({MaxPlus(j.p2), MaxPlus(Rational(j.p1 + j.p2)), MaxPlus(j.p1)});
  }
  return out;
}

Rational makespan(std::span<const Job> jobs, const Permutation &order) {
  if (!is_permutation_of(order, jobs.size()))
    throw Error("length-mismatch", "order does not match the job list");
  Rational first = 0, second = 0;
  for (auto i : order) {
    first += jobs[i].p1;
    second = std::max(first, second) + jobs[i].p2;
  }
  return second;
}

Permutation johnson_rule(std::span<const Job> jobs) {
  Permutation early, late;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    (jobs[i].p1 < jobs[i].p2 ? early : late).push_back(i);
  std::stable_sort(early.begin(), early.end(),
                   [&](std::size_t i, std::size_t j) { return jobs[i].p1 < jobs[j].p1; });
  std::stable_sort(late.begin(), late.end(),
                   [&](std::size_t i, std::size_t j) { return jobs[i].p2 > jobs[j].p2; });
  early.insert(early.end(), late.begin(), late.end());
  return early;
}

bool commuting_family(std::span<const MaxPlusMatrix2> ns) {
  for (const auto &n : ns)
    require_finite(n);
  auto holds = [&](bool above) {
    // above: every a >= d, strict ones share b - a, ties stay below it.
    std::optional<Rational> c;
    for (const auto &n : ns) {
      const auto &a = n.a.value(), &b = n.b.value(), &d = n.d.value();
      if (above ? a < d : a > d)
        return false;
      if (a != d) {
        Rational key = above ? Rational(b - a) : Rational(d - b);
        if (c && *c != key)
          return false;
        c = key;
      }
    }
    if (!c)
      return true;
    for (const auto &n : ns) {
      const auto &a = n.a.value(), &b = n.b.value(), &d = n.d.value();
      if (a == d && (above ? Rational(b - a) > *c : Rational(d - b) < *c))
        return false;
    }
    return true;
  };
  return holds(true) || holds(false);
}

bool mp_commutes(const MaxPlusMatrix2 &n1, const MaxPlusMatrix2 &n2) {
  bool by_product = mp_multiply(n1, n2) == mp_multiply(n2, n1);
  if (n1.is_finite() && n2.is_finite()) {
    const MaxPlusMatrix2 pair[] = {n1, n2};
    if (commuting_family(pair) != by_product)
      throw Error("commutation-mismatch", "product and closed-form conditions disagree");
  }
  return by_product;
}

} // namespace compord
