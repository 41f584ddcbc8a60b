#pragma once

// 2x2 upper triangular matrices over the max-plus semiring and the
// two-machine flow shop they generalize.

#include "compord/linear_function.hpp"
#include "compord/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace compord {

// Element of R u {-inf}: max is addition, + is multiplication.
class MaxPlus {
public:
  MaxPlus() = default; // -inf
  MaxPlus(Rational v) : v_(std::move(v)) {}
  MaxPlus(long v) : v_(Rational(v)) {}
  static MaxPlus neg_inf() { return {}; }

  bool is_finite() const { return v_.has_value(); }
  const Rational &value() const;

  friend MaxPlus operator+(const MaxPlus &x, const MaxPlus &y); // max
  friend MaxPlus operator*(const MaxPlus &x, const MaxPlus &y); // plus
  friend bool operator==(const MaxPlus &x, const MaxPlus &y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const MaxPlus &x, const MaxPlus &y);

private:
  std::optional<Rational> v_;
};

std::string to_string(const MaxPlus &x);

// (a b; -inf d)
struct MaxPlusMatrix2 {
  MaxPlus a{0};
  MaxPlus b{};
  MaxPlus d{0};
  bool is_finite() const { return a.is_finite() && b.is_finite() && d.is_finite(); }
  friend bool operator==(const MaxPlusMatrix2 &, const MaxPlusMatrix2 &) = default;
};

// outer (x) inner
MaxPlusMatrix2 mp_multiply(const MaxPlusMatrix2 &outer, const MaxPlusMatrix2 &inner);

// Upper-right entry of N_sigma(n) (x) ... (x) N_sigma(1).
MaxPlus mp_objective(std::span<const MaxPlusMatrix2> ns, const Permutation &sigma);

struct KappaKey {
  std::vector<Rational> entries;
  friend bool operator==(const KappaKey &, const KappaKey &) = default;
  friend bool operator<(const KappaKey &x, const KappaKey &y) { return x.entries < y.entries; }
};

KappaKey kappa_star(const MaxPlusMatrix2 &n);
KappaKey kappa_full(const MaxPlusMatrix2 &n);
KappaKey kappa_blb(const MaxPlusMatrix2 &n);

// Stable ascending sort of the factors by key; position 0 is applied first.
Permutation sort_by_key(std::span<const MaxPlusMatrix2> ns, KappaKey (*key)(const MaxPlusMatrix2 &));

struct MaxPlusSolution {
  Permutation sigma;
  MaxPlus value;
};

MaxPlusSolution solve_maxplus_min(std::span<const MaxPlusMatrix2> ns);

struct Job {
  Rational p1; // first machine
  Rational p2; // second machine
};

std::vector<MaxPlusMatrix2> flowshop_to_maxplus(std::span<const Job> jobs);
Rational makespan(std::span<const Job> jobs, const Permutation &order);
Permutation johnson_rule(std::span<const Job> jobs);

// N1 (x) N2 == N2 (x) N1, checked against the closed-form conditions.
bool mp_commutes(const MaxPlusMatrix2 &n1, const MaxPlusMatrix2 &n2);

// Closed-form condition for a family of finite matrices to commute pairwise.
bool commuting_family(std::span<const MaxPlusMatrix2> ns);

} // namespace compord
