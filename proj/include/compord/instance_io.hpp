#pragma once

// JSON instance files and solver results. Permutations are 1-based in JSON.

#include "compord/fpt_solver.hpp"
#include "compord/matrix2.hpp"
#include "compord/maxplus.hpp"
#include "compord/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace compord {

enum class InstanceKind { Linear, Matrix2, MatrixN, MaxPlus2, FlowShop };

const char *kind_name(InstanceKind kind);

struct Instance {
  InstanceKind kind = InstanceKind::Linear;
  Sense sense = Sense::Min;
  Rational c;                      // linear only
  std::optional<Rational> target;  // linear only
  std::vector<LinearFunction> functions;
  std::vector<MatrixN> matrices;   // matrix2 and matrixN
  std::vector<Rational> w;         // matrix2 and matrixN
  std::vector<Rational> y;
  std::vector<MaxPlusMatrix2> maxplus;
  std::vector<Job> jobs;
};

struct ParseOptions {
  // Accept binary floating-point JSON numbers, converted exactly.
  bool approx = false;
};

// Every failure is an Error with code "parse-error".
Rational rational_from_json(const nlohmann::json &j, const ParseOptions &opts = {});
nlohmann::json rational_to_json(const Rational &r);

Instance instance_from_json(const nlohmann::json &j, const ParseOptions &opts = {});
nlohmann::json instance_to_json(const Instance &inst);
Instance load_instance(const std::string &path, const ParseOptions &opts = {});

std::vector<Matrix2> as_matrix2(const Instance &inst);

struct SolveResult {
  Permutation permutation; // 0-based in memory
  Rational value;
  std::optional<LinearFunction> composite;
  std::optional<std::string> case_name;
  std::optional<std::size_t> k;
};

nlohmann::json result_to_json(const SolveResult &r);
SolveResult result_from_json(const nlohmann::json &j);

nlohmann::json permutation_to_json(const Permutation &sigma);
Permutation permutation_from_json(const nlohmann::json &j);

} // namespace compord
