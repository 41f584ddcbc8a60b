#include "doctest.h"

#include "compord/instance_io.hpp"

#include <filesystem>

using namespace compord;
using nlohmann::json;

namespace {

std::string fixture(const char *name) { return std::string(COMPORD_FIXTURES) + "/" + name; }

int parse_error(const json &j) {
  try {
    instance_from_json(j);
  } catch (const Error &e) {
    return e.code() == "parse-error" ? 1 : 2;
  }
  return 0;
}

} // namespace

TEST_CASE("rationals") {
  CHECK(rational_from_json(json(3)) == 3);
  CHECK(rational_from_json(json(-3)) == -3);
  CHECK(rational_from_json(json("-3/6")) == Rational(-1, 2));
  CHECK(rational_from_json(json("0.25")) == Rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), Error);
  CHECK(rational_from_json(json(0.5), {true}) == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(json::array()), Error);
  CHECK(rational_to_json(Rational(6, 4)) == json("3/2"));
}

TEST_CASE("fixtures load") {
  auto intro = load_instance(fixture("intro.json"));
  CHECK(intro.kind == InstanceKind::Linear);
  CHECK(intro.functions.size() == 3);
  CHECK(intro.functions[0] == LinearFunction{Rational(-1, 2), Rational(3, 2)});
  CHECK(load_instance(fixture("example1.json")).functions.size() == 5);
  CHECK(load_instance(fixture("example2.json")).functions[2] == LinearFunction::constant(1));
  CHECK(load_instance(fixture("example3.json")).functions.size() == 7);
  CHECK(load_instance(fixture("flowshop.json")).jobs.size() == 2);
  CHECK(load_instance(fixture("maxplus.json")).maxplus.size() == 2);
  auto m = load_instance(fixture("matrix2.json"));
  CHECK(as_matrix2(m)[1] == Matrix2{1, -3, 0, 1});
  CHECK_THROWS_AS(load_instance(fixture("missing.json")), Error);
}

TEST_CASE("schema is strict") {
  CHECK(parse_error({{"kind", "linear"}, {"functions", json::array()}, {"extra", 1}}) == 1);
  CHECK(parse_error({{"kind", "linear"}, {"functions", {{{"a", 1}, {"b", 2}, {"c", 3}}}}}) == 1);
  CHECK(parse_error({{"kind", "linear"}, {"functions", {{{"a", 1}}}}}) == 1);
  CHECK(parse_error({{"kind", "cubic"}}) == 1);
  CHECK(parse_error({{"kind", "linear"}, {"functions", json::array()}, {"sense", "up"}}) == 1);
  CHECK(parse_error({{"kind", "matrixN"}, {"matrices", json::array()}}) == 1);
  CHECK(parse_error({{"kind", "matrix2"}, {"matrices", {{{1, 2}, {3}}}}}) == 1);
  CHECK(parse_error({{"kind", "flowshop"}, {"jobs", {{{"p1", 1}}}}}) == 1);
  CHECK(parse_error({{"kind", "linear"}, {"functions", json::array()}}) == 0);
}

TEST_CASE("instances round-trip") {
  for (const char *name : {"intro.json", "example1.json", "example2.json", "example3.json", "flowshop.json",
                           "maxplus.json", "matrix2.json"}) {
    CAPTURE(name);
    auto inst = load_instance(fixture(name));
    json once = instance_to_json(inst);
    json twice = instance_to_json(instance_from_json(once));
    CHECK(once == twice);
  }
  json mp = {{"kind", "maxplus2"}, {"matrices", {{{"a", "-inf"}, {"b", 1}, {"d", 0}}}}};
  auto inst = instance_from_json(mp);
  CHECK_FALSE(inst.maxplus[0].a.is_finite());
  CHECK(instance_to_json(inst)["matrices"][0]["a"] == "-inf");
}

TEST_CASE("results round-trip with sorted keys") {
  SolveResult r{{2, 0, 1}, Rational(-11, 2), LinearFunction{Rational(-3, 2), Rational(-11, 2)}, "fpt", 1};
  json j = result_to_json(r);
  CHECK(j["permutation"] == json({3, 1, 2}));
  std::string text = j.dump();
  CHECK(text == R"({"case":"fpt","composite":{"a":"-3/2","b":"-11/2"},"k":1,"permutation":[3,1,2],"value":"-11/2"})");
  SolveResult back = result_from_json(json::parse(text));
  CHECK(back.permutation == r.permutation);
  CHECK(back.value == r.value);
  CHECK(*back.composite == *r.composite);
  CHECK(*back.case_name == "fpt");
  CHECK(*back.k == 1);
  CHECK_THROWS_AS(permutation_from_json(json({1, 1})), Error);
  CHECK_THROWS_AS(permutation_from_json(json({0, 1})), Error);
}
