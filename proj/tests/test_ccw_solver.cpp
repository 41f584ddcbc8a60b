#include "doctest.h"

#include "compord/ccw_solver.hpp"
#include "compord/oracle.hpp"
#include "support.hpp"

using namespace compord;
using namespace testing_support;

namespace {

const std::vector<LinearFunction> kIntro = {{Rational(-1, 2), Rational(3, 2)}, {1, -3}, {3, -1}};
const std::vector<LinearFunction> kExample1 = {
    {Rational(1, 2), 1}, {Rational(1, 3), -1}, {2, -2}, {2, -1}, {3, 0}};
const std::vector<LinearFunction> kExample2 = {{2, 2}, {1, 2}, {0, 1}, {2, -3}};

} // namespace

TEST_CASE("Example 1") {
  CHECK(sort_counterclockwise(kExample1) == identity_permutation(5));
  auto r = solve_min(kExample1, 0);
  CHECK(r.composite == LinearFunction{2, -23});
  CHECK(r.sigma == identity_permutation(5));
  for (long c : {-3, 0, 7})
    CHECK(solve_min(kExample1, c).composite == LinearFunction{2, -23});
  CHECK(classify_instance(kExample1).tag == CaseTag::General);
  CHECK(is_counterclockwise(kExample1, identity_permutation(5)));
  CHECK_FALSE(is_counterclockwise(kExample1, {4, 3, 2, 1, 0}));
  CHECK(is_optimal_certificate(kExample1, identity_permutation(5)));

  // Frozen from exhaustive evaluation of every shift.
  auto profile = shift_profile(kExample1, identity_permutation(5), 0);
  std::vector<Rational> expected = {Rational(-23), Rational(-25, 2), Rational(-19, 6),
                                    Rational(-13, 3), Rational(-23, 3)};
  CHECK(profile == expected);
  CHECK(is_cyclically_unimodal(profile, true));
  CHECK(count_optimal(kExample1) == 1);
}

TEST_CASE("shift profile is the value of each rotation") {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 100; ++t) {
    auto fs = random_monotone(rng, 1 + t % 6);
    Permutation sigma = identity_permutation(fs.size());
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto profile = shift_profile(fs, sigma, 2);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      Permutation shifted(sigma.begin() + k, sigma.end());
      shifted.insert(shifted.end(), sigma.begin(), sigma.begin() + k);
      CHECK(profile[k] == evaluate(compose_seq(fs, shifted), 2));
    }
  }
}

TEST_CASE("intro instance") {
  std::vector<LinearFunction> mono = {kIntro[1], kIntro[2]};
  CHECK(solve_min(mono, 0).value == brute_min_composition(mono, 0).best_value);
  CHECK_THROWS_AS(solve_min(kIntro, 0), Error);
  CHECK_THROWS_AS(sort_counterclockwise(kIntro), Error);
}

TEST_CASE("Example 2 with a constant") {
  auto r = solve_min(kExample2, 0);
  CHECK(r.value == -1);
  CHECK(r.composite == LinearFunction::constant(-1));
  CHECK(r.case_tag == CaseTag::ConstantPresent);
  auto cls = classify_instance(kExample2);
  CHECK(cls.tag == CaseTag::ConstantPresent);
  CHECK(*cls.beta_min == 1);
  CHECK(is_optimal_certificate(kExample2, {0, 1, 2, 3}));
  CHECK(is_optimal_certificate(kExample2, {1, 0, 2, 3}));
  CHECK(is_counterclockwise(kExample2, {0, 1, 2, 3}));
  CHECK_FALSE(is_counterclockwise(kExample2, {1, 0, 2, 3}));
  auto rep = brute_min_composition(kExample2, 0);
  CHECK(rep.best_value == -1);
  CHECK(rep.optimal.size() == 2);
}

TEST_CASE("colinear and potentially identical") {
  std::vector<LinearFunction> col = {{1, 1}, {1, 2}, {1, 3}};
  CHECK(classify_instance(col).tag == CaseTag::Colinear);
  CHECK(count_optimal(col) == 6);
  CHECK(enumerate_optimal(col, 100).size() == 6);
  CHECK(enumerate_optimal(col, 4).size() == 4);

  std::vector<LinearFunction> pi = {{2, 0}, {Rational(1, 2), 0}};
  // (0,-1) and (0,1/2) share a line, so the pair is colinear as well.
  CHECK(classify_instance(pi).tag == CaseTag::Colinear);
  CHECK(count_optimal(pi) == 2);

  // Angles 0, 3pi/4, 3pi/2 in this order compose to x.
  std::vector<LinearFunction> pi2 = {{2, 0}, {1, 1}, {Rational(1, 2), Rational(-1, 2)}};
  CHECK_FALSE(is_colinear(pi2));
  CHECK(compose_seq(pi2, {1, 2, 0}) == LinearFunction::identity());
  CHECK(classify_instance(pi2).tag == CaseTag::PotentiallyIdentical);
  auto rep = brute_min_composition(pi2, 0);
  CHECK(count_optimal(pi2) == BigInt(rep.optimal.size()));
  CHECK(count_optimal(pi2) == 3);

  std::vector<LinearFunction> ids = {{1, 0}, {1, 0}};
  CHECK(is_counterclockwise(ids, {1, 0}));
}

TEST_CASE("potentially identical: every shift composes to the identity") {
  // Three functions whose counterclockwise composite is x.
  std::vector<LinearFunction> fs = {{2, 1}, {Rational(1, 2), 3}, {1, Rational(-7, 2)}};
  Permutation ccw = sort_counterclockwise(fs);
  if (compose_seq(fs, ccw) == LinearFunction::identity()) {
    for (const auto &v : shift_profile(fs, ccw, 5))
      CHECK(v == 5);
  }
  std::mt19937_64 rng(21);
  int seen = 0;
  for (int t = 0; t < 4000 && seen < 30; ++t) {
    auto fs2 = random_monotone(rng, 2 + t % 4);
    Permutation s = sort_counterclockwise(fs2);
    if (compose_seq(fs2, s) != LinearFunction::identity() || is_colinear(fs2))
      continue;
    ++seen;
    CHECK(classify_instance(fs2).tag == CaseTag::PotentiallyIdentical);
    for (const auto &v : shift_profile(fs2, s, 3))
      CHECK(v == 3);
  }
}

TEST_CASE("unimodality of counterclockwise shift profiles") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 400; ++t) {
    auto fs = random_monotone(rng, 1 + t % 7);
    std::erase_if(fs, is_identity);
    Permutation s = sort_counterclockwise(fs);
    auto profile = shift_profile(fs, s, small_int(rng, -2, 2));
    CHECK(is_cyclically_unimodal(profile, true));
  }
  std::vector<Rational> zigzag = {Rational(0), Rational(2), Rational(1), Rational(3)};
  CHECK_FALSE(is_cyclically_unimodal(zigzag, false));
  std::vector<Rational> flat_middle = {Rational(0), Rational(1), Rational(1), Rational(2)};
  CHECK(is_cyclically_unimodal(flat_middle, false));
  CHECK_FALSE(is_cyclically_unimodal(flat_middle, true));
}

TEST_CASE("local optimality equals global optimality") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto fs = t % 2 ? random_monotone(rng, 1 + t % 6) : random_with_constants(rng, 1 + t % 6);
    auto rep = brute_min_composition(fs, 0);
    for (int j = 0; j < 20; ++j) {
      Permutation sigma = identity_permutation(fs.size());
      std::shuffle(sigma.begin(), sigma.end(), rng);
      CHECK(is_locally_optimal(fs, sigma) == (compose_seq(fs, sigma) == *rep.best_composite));
    }
  }
}

TEST_CASE("locally optimal orders with constants end in beta_min") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 150; ++t) {
    auto fs = random_with_constants(rng, 2 + t % 5);
    Rational beta_min = *classify_instance(fs).beta_min;
    Permutation sigma = identity_permutation(fs.size());
    do {
      if (!is_locally_optimal(fs, sigma))
        continue;
      std::size_t q = 0;
      for (std::size_t i = 0; i < sigma.size(); ++i)
        if (fs[sigma[i]].a == 0)
          q = i;
      CHECK(fs[sigma[q]].b == beta_min);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("deterioration rule") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    std::vector<LinearFunction> fs;
    for (int i = 0; i < 1 + t % 7; ++i)
      fs.push_back({Rational(small_int(rng, 5, 20) / 4), small_int(rng, 1, 6)});
    Permutation order = identity_permutation(fs.size());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return (fs[i].a - 1) / fs[i].b > (fs[j].a - 1) / fs[j].b;
    });
    CHECK(evaluate(compose_seq(fs, order), 0) == solve_min(fs, 0).value);
  }
}

TEST_CASE("the returned order is optimal for every c") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) {
    auto fs = random_with_constants(rng, 1 + t % 6);
    auto sigma = solve_min(fs, 0).sigma;
    for (long c : {-5, 1, 9})
      CHECK(evaluate(compose_seq(fs, sigma), c) == brute_min_composition(fs, c).best_value);
  }
}

TEST_CASE("counting is restricted to strictly increasing slopes") {
  CHECK_THROWS_AS(count_optimal(kExample2), Error);
  CHECK_THROWS_AS(enumerate_optimal(kExample2, 5), Error);
  CHECK(count_optimal(std::vector<LinearFunction>{}) == 1);
}

TEST_CASE("counting agrees with brute force including identities and repeated rays") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 300; ++t) {
    auto fs = random_monotone(rng, 1 + t % 7);
    auto rep = brute_min_composition(fs, 0);
    CHECK(count_optimal(fs) == BigInt(rep.optimal.size()));
    for (const auto &sigma : enumerate_optimal(fs, 50))
      CHECK(is_optimal_certificate(fs, sigma));
  }
}
