#include "doctest.h"

#include "compord/matrix2.hpp"
#include "compord/oracle.hpp"
#include "support.hpp"

using namespace compord;
using namespace testing_support;

namespace {

Matrix2 random_regular(std::mt19937_64 &rng) {
  for (;;) {
    Matrix2 p{small_int(rng, -3, 3), small_int(rng, -3, 3), small_int(rng, -3, 3), small_int(rng, -3, 3)};
    if (p.det() != 0)
      return p;
  }
}

Rational entry12(std::span<const Matrix2> ms, const Permutation &sigma) {
  Matrix2 acc;
  for (auto i : sigma)
    acc = ms[i] * acc;
  return acc.e12;
}

} // namespace

TEST_CASE("basic matrix algebra") {
  Matrix2 m{1, 2, 3, 4};
  CHECK(m * inverse(m) == Matrix2{});
  CHECK(transpose(m) == Matrix2{1, 3, 2, 4});
  CHECK(m.det() == -2);
  CHECK_THROWS_AS(inverse(Matrix2{1, 2, 2, 4}), Error);
  CHECK(m * Vec2{1, 1} == Vec2{3, 7});
}

TEST_CASE("triangularization") {
  std::vector<Matrix2> upper = {Matrix2::upper(1, 2, 3), Matrix2::upper(2, 0, 1)};
  CHECK(*try_simultaneous_triangularize(upper) == Matrix2{});
  std::vector<Matrix2> scalars = {Matrix2{2, 0, 0, 2}, Matrix2{}};
  CHECK(try_simultaneous_triangularize(scalars).has_value());

  std::vector<Matrix2> rotation = {Matrix2{0, -1, 1, 0}};
  try {
    try_simultaneous_triangularize(rotation);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == "irrational-triangularization");
  }
  std::vector<Matrix2> no_common = {Matrix2{1, 1, 0, 2}, Matrix2{1, 0, 1, 2}};
  CHECK_FALSE(try_simultaneous_triangularize(no_common).has_value());
  CHECK_THROWS_AS(solve_matrix2({no_common}), Error);

  std::mt19937_64 rng(40);
  for (int t = 0; t < 200; ++t) {
    Matrix2 p = random_regular(rng);
    std::vector<Matrix2> ms;
    for (int i = 0; i < 3; ++i)
      ms.push_back(p * Matrix2::upper(small_int(rng, -3, 3), small_int(rng, -3, 3), small_int(rng, -3, 3)) *
                   inverse(p));
    auto q = try_simultaneous_triangularize(ms);
    REQUIRE(q.has_value());
    CHECK(q->det() != 0);
    for (const auto &m : ms)
      CHECK((inverse(*q) * m * *q).is_upper_triangular());
  }
}

TEST_CASE("conjugation invariance of the objective") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    auto ms = random_triangular(rng, 4, true);
    Matrix2 p = random_regular(rng);
    Vec2 w{small_int(rng, -2, 2), small_int(rng, -2, 2)}, y{small_int(rng, -2, 2), small_int(rng, -2, 2)};
    std::vector<Matrix2> conj;
    for (const auto &m : ms)
      conj.push_back(inverse(p) * m * p);
    Permutation sigma = {2, 0, 3, 1};
    CHECK(evaluate_matrix_order(ms, w, y, sigma) ==
          evaluate_matrix_order(conj, transpose(p) * w, inverse(p) * y, sigma));
  }
}

TEST_CASE("reduction to linear functions") {
  std::vector<Matrix2> ms = {Matrix2::upper(Rational(-1, 2), Rational(3, 2), 1), Matrix2::upper(1, -3, 1),
                             Matrix2::upper(3, -1, 1)};
  Vec2 w{1, 0}, y{0, 1};
  auto r = reduce_to_linear(ms, w, y);
  REQUIRE(r.functions.has_value());
  CHECK((*r.functions)[0] == LinearFunction{Rational(-1, 2), Rational(3, 2)});
  CHECK(r.scale == 1);
  CHECK(r.offset == 0);
  CHECK_FALSE(r.degenerate);
  auto s = solve_matrix2({ms});
  CHECK(s.value == Rational(-11, 2));
  CHECK(s.sigma == Permutation{0, 1, 2});
  auto hi = solve_matrix2({ms, w, y, Sense::Max});
  CHECK(hi.value == 8);

  auto deg = reduce_to_linear(ms, Vec2{1, 0}, Vec2{1, 0});
  CHECK(deg.degenerate);
  CHECK_THROWS_AS(reduce_to_linear(std::vector<Matrix2>{Matrix2{1, 0, 1, 1}}, w, y), Error);
}

TEST_CASE("reduced objective and sign normalization") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    auto ms = random_triangular(rng, 1 + t % 5, true);
    Vec2 w{small_int(rng, -2, 2), small_int(rng, -2, 2)}, y{small_int(rng, -2, 2), small_int(rng, -2, 2)};
    auto r = reduce_to_linear(ms, w, y);
    Permutation sigma = identity_permutation(ms.size());
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Rational value = evaluate_matrix_order(ms, w, y, sigma);
    CHECK(value == r.offset + r.entry_scale * product(r.elements, sigma).b);
    if (r.functions)
      CHECK(value == r.offset + r.scale * evaluate(compose_seq(*r.functions, sigma), 0));
    bool nonneg = std::all_of(ms.begin(), ms.end(), [](const Matrix2 &m) { return m.det() >= 0 && m.e22 > 0; });
    if (nonneg && r.functions)
      for (const auto &f : *r.functions)
        CHECK(f.a >= 0);
  }
}

TEST_CASE("tilde matrices negate the upper-right entry") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    auto ms = random_triangular(rng, 4, true);
    std::vector<Matrix2> tl;
    for (const auto &m : ms)
      tl.push_back(Matrix2::upper(m.e11, -m.e12, m.e22));
    Permutation sigma = {3, 1, 0, 2};
    CHECK(entry12(ms, sigma) == -entry12(tl, sigma));
  }
}

TEST_CASE("solver matches brute force") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 300; ++t) {
    bool neg = t % 2 == 1;
    auto ms = random_triangular(rng, 1 + t % (neg ? 6 : 7), neg);
    MatrixInstance inst{ms};
    inst.w = {small_int(rng, -2, 2), small_int(rng, -2, 2)};
    inst.y = {small_int(rng, -2, 2), small_int(rng, -2, 2)};
    inst.sense = t % 4 < 2 ? Sense::Min : Sense::Max;
    CHECK(solve_matrix2(inst).value == brute_min_matrix(ms, inst.w, inst.y, inst.sense).best_value);
  }
  std::vector<Matrix2> one = {Matrix2{2, 1, 0, 3}};
  auto s = solve_matrix2({one});
  CHECK(s.sigma == Permutation{0});
  CHECK(s.value == 1);
}

TEST_CASE("non-triangular but triangularizable input") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 200; ++t) {
    Matrix2 p = random_regular(rng);
    std::vector<Matrix2> ms;
    for (const auto &m : random_triangular(rng, 1 + t % 5, true))
      ms.push_back(p * m * inverse(p));
    MatrixInstance inst{ms};
    inst.w = {small_int(rng, -2, 2), small_int(rng, -2, 2)};
    inst.y = {small_int(rng, -2, 2), small_int(rng, -2, 2)};
    CHECK(solve_matrix2(inst).value == brute_min_matrix(ms, inst.w, inst.y).best_value);
  }
}
