#include "compord/instance_io.hpp"

#include <fstream>
#include <set>

namespace compord {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &what) { throw Error("parse-error", what); }

void allow_only(const json &j, const std::set<std::string> &fields, const char *where) {
  if (!j.is_object())
    fail(std::string(where) + " must be an object");
  for (const auto &[key, _] : j.items())
    if (!fields.contains(key))
      fail("unknown field '" + key + "' in " + where);
}

const json &require(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(std::string("missing field '") + key + "'");
  return *it;
}

const json &require_array(const json &j, const char *key) {
  const json &a = require(j, key);
  if (!a.is_array())
    fail(std::string("field '") + key + "' must be an array");
  return a;
}

std::vector<Rational> rational_list(const json &j, const ParseOptions &opts) {
  if (!j.is_array())
    fail("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto &x : j)
    out.push_back(rational_from_json(x, opts));
  return out;
}

MatrixN square_matrix(const json &j, const ParseOptions &opts) {
  if (!j.is_array() || j.empty())
    fail("matrix must be a nonempty array of rows");
  MatrixN m;
  for (const auto &row : j)
    m.push_back(rational_list(row, opts));
  for (const auto &row : m)
    if (row.size() != m.size())
      fail("matrix must be square");
  return m;
}

MaxPlus maxplus_from_json(const json &j, const ParseOptions &opts) {
  if (j.is_string() && j.get<std::string>() == "-inf")
    return MaxPlus::neg_inf();
  return MaxPlus(rational_from_json(j, opts));
}

json maxplus_to_json(const MaxPlus &x) { return x.is_finite() ? rational_to_json(x.value()) : json("-inf"); }

json matrix_to_json(const MatrixN &m) {
  json rows = json::array();
  for (const auto &row : m) {
    json r = json::array();
    for (const auto &x : row)
      r.push_back(rational_to_json(x));
    rows.push_back(r);
  }
  return rows;
}

json list_to_json(const std::vector<Rational> &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(rational_to_json(x));
  return out;
}

} // namespace

const char *kind_name(InstanceKind kind) {
  switch (kind) {
  case InstanceKind::Linear: return "linear";
  case InstanceKind::Matrix2: return "matrix2";
  case InstanceKind::MatrixN: return "matrixN";
  case InstanceKind::MaxPlus2: return "maxplus2";
  case InstanceKind::FlowShop: return "flowshop";
  }
  return "?";
}

Rational rational_from_json(const json &j, const ParseOptions &opts) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>()))
                                  : Rational(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_float()) {
    if (!opts.approx)
      fail("floating-point number " + j.dump() + " needs --approx; write it as a string");
    return Rational(j.get<double>());
  }
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  fail("expected a rational, got " + j.dump());
}

json rational_to_json(const Rational &r) { return to_string(r); }

Instance instance_from_json(const json &j, const ParseOptions &opts) {
  if (!j.is_object())
    fail("instance must be an object");
  Instance inst;
  std::string kind = require(j, "kind").is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "linear")
    inst.kind = InstanceKind::Linear;
  else if (kind == "matrix2")
    inst.kind = InstanceKind::Matrix2;
  else if (kind == "matrixN")
    inst.kind = InstanceKind::MatrixN;
  else if (kind == "maxplus2")
    inst.kind = InstanceKind::MaxPlus2;
  else if (kind == "flowshop")
    inst.kind = InstanceKind::FlowShop;
  else
    fail("unknown kind " + j["kind"].dump());

  if (auto it = j.find("sense"); it != j.end()) {
    if (*it == "min")
      inst.sense = Sense::Min;
    else if (*it == "max")
      inst.sense = Sense::Max;
    else
      fail("sense must be \"min\" or \"max\"");
  }

  switch (inst.kind) {
  case InstanceKind::Linear:
    allow_only(j, {"kind", "sense", "c", "target", "functions"}, "linear instance");
    for (const auto &f : require_array(j, "functions")) {
      allow_only(f, {"a", "b"}, "function");
      inst.functions.push_back(
          {rational_from_json(require(f, "a"), opts), rational_from_json(require(f, "b"), opts)});
    }
    if (j.contains("c"))
      inst.c = rational_from_json(j["c"], opts);
    if (j.contains("target"))
      inst.target = rational_from_json(j["target"], opts);
    break;
  case InstanceKind::Matrix2:
  case InstanceKind::MatrixN: {
    allow_only(j, {"kind", "sense", "matrices", "w", "y"}, "matrix instance");
    for (const auto &m : require_array(j, "matrices"))
      inst.matrices.push_back(square_matrix(m, opts));
    bool two = inst.kind == InstanceKind::Matrix2;
    if (j.contains("w"))
      inst.w = rational_list(j["w"], opts);
    else if (two)
      inst.w = {Rational(1), Rational(0)};
    else
      fail("matrixN instance needs 'w'");
    if (j.contains("y"))
      inst.y = rational_list(j["y"], opts);
    else if (two)
      inst.y = {Rational(0), Rational(1)};
    else
      fail("matrixN instance needs 'y'");
    std::size_t m = inst.w.size();
    if (two && m != 2)
      fail("matrix2 vectors must have two entries");
    if (inst.y.size() != m)
      fail("w and y differ in length");
    for (const auto &a : inst.matrices)
      if (a.size() != m)
        fail("matrix size does not match w");
    break;
  }
  case InstanceKind::MaxPlus2:
    allow_only(j, {"kind", "sense", "matrices"}, "maxplus2 instance");
    for (const auto &n : require_array(j, "matrices")) {
      allow_only(n, {"a", "b", "d"}, "max-plus matrix");
      inst.maxplus.push_back({maxplus_from_json(require(n, "a"), opts),
                              maxplus_from_json(require(n, "b"), opts),
                              maxplus_from_json(require(n, "d"), opts)});
    }
    break;
  case InstanceKind::FlowShop:
    allow_only(j, {"kind", "sense", "jobs"}, "flowshop instance");
    for (const auto &job : require_array(j, "jobs")) {
      allow_only(job, {"p1", "p2"}, "job");
      inst.jobs.push_back(
          {rational_from_json(require(job, "p1"), opts), rational_from_json(require(job, "p2"), opts)});
    }
    break;
  }
  return inst;
}

json instance_to_json(const Instance &inst) {
  json j;
  j["kind"] = kind_name(inst.kind);
  j["sense"] = inst.sense == Sense::Min ? "min" : "max";
  switch (inst.kind) {
  case InstanceKind::Linear:
    j["functions"] = json::array();
    for (const auto &f : inst.functions)
      j["functions"].push_back({{"a", rational_to_json(f.a)}, {"b", rational_to_json(f.b)}});
    j["c"] = rational_to_json(inst.c);
    if (inst.target)
      j["target"] = rational_to_json(*inst.target);
    break;
  case InstanceKind::Matrix2:
  case InstanceKind::MatrixN:
    j["matrices"] = json::array();
    for (const auto &m : inst.matrices)
      j["matrices"].push_back(matrix_to_json(m));
    j["w"] = list_to_json(inst.w);
    j["y"] = list_to_json(inst.y);
    break;
  case InstanceKind::MaxPlus2:
    j["matrices"] = json::array();
    for (const auto &n : inst.maxplus)
      j["matrices"].push_back({{"a", maxplus_to_json(n.a)}, {"b", maxplus_to_json(n.b)},
                               {"d", maxplus_to_json(n.d)}});
    break;
  case InstanceKind::FlowShop:
    j["jobs"] = json::array();
    for (const auto &job : inst.jobs)
      j["jobs"].push_back({{"p1", rational_to_json(job.p1)}, {"p2", rational_to_json(job.p2)}});
    break;
  }
  return j;
}

Instance load_instance(const std::string &path, const ParseOptions &opts) {
  std::ifstream in(path);
  if (!in)
    fail("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    fail(path + ": " + e.what());
  }
  return instance_from_json(j, opts);
}

std::vector<Matrix2> as_matrix2(const Instance &inst) {
  std::vector<Matrix2> out;
  for (const auto &m : inst.matrices) {
    if (m.size() != 2)
      throw Error("parse-error", "expected 2x2 matrices");
    out.push_back({m[0][0], m[0][1], m[1][0], m[1][1]});
  }
  return out;
}

json permutation_to_json(const Permutation &sigma) {
  json out = json::array();
  for (auto i : sigma)
    out.push_back(i + 1);
  return out;
}

Permutation permutation_from_json(const json &j) {
  if (!j.is_array())
    fail("permutation must be an array");
  Permutation sigma;
  for (const auto &x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 1)
      fail("permutation entries are 1-based positive integers");
    sigma.push_back(x.get<std::size_t>() - 1);
  }
  if (!is_permutation_of(sigma, sigma.size()))
    fail("not a permutation");
  return sigma;
}

json result_to_json(const SolveResult &r) {
  json j;
  j["permutation"] = permutation_to_json(r.permutation);
  j["value"] = rational_to_json(r.value);
  if (r.composite)
    j["composite"] = {{"a", rational_to_json(r.composite->a)}, {"b", rational_to_json(r.composite->b)}};
  if (r.case_name)
    j["case"] = *r.case_name;
  if (r.k)
    j["k"] = *r.k;
  return j;
}

SolveResult result_from_json(const json &j) {
  allow_only(j, {"permutation", "value", "composite", "case", "k"}, "result");
  SolveResult r;
  r.permutation = permutation_from_json(require(j, "permutation"));
  r.value = rational_from_json(require(j, "value"));
  if (j.contains("composite")) {
    allow_only(j["composite"], {"a", "b"}, "composite");
    r.composite = LinearFunction{rational_from_json(require(j["composite"], "a")),
                                 rational_from_json(require(j["composite"], "b"))};
  }
  if (j.contains("case")) {
    if (!j["case"].is_string())
      fail("case must be a string");
    r.case_name = j["case"].get<std::string>();
  }
  if (j.contains("k")) {
    if (!j["k"].is_number_unsigned())
      fail("k must be a nonnegative integer");
    r.k = j["k"].get<std::size_t>();
  }
  return r;
}

} // namespace compord
