#include "compord/bench.hpp"
#include "compord/ccw_solver.hpp"
#include "compord/fpt_solver.hpp"
#include "compord/instance_io.hpp"
#include "compord/matrix2.hpp"
#include "compord/maxplus.hpp"
#include "compord/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <random>
#include <thread>

using namespace compord;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kUnsupported = 3, kCap = 4 };

struct Flags {
  std::string path;
  std::string sense;
  std::string c;
  std::string target;
  bool oracle = false;
  std::size_t cap = 0;
  bool approx = false;
};

int exit_code_for(const Error &e) {
  if (e.code() == "parse-error" || e.code() == "length-mismatch")
    return kParse;
  if (e.code() == "cap-exceeded")
    return kCap;
  return kUnsupported;
}

Instance load(const Flags &f) {
  if (f.approx)
    std::cerr << "*** approximate mode: floating-point inputs are rounded to rationals; "
                 "results are not certified ***\n";
  Instance inst = load_instance(f.path, {f.approx});
  if (f.sense == "min")
    inst.sense = Sense::Min;
  else if (f.sense == "max")
    inst.sense = Sense::Max;
  else if (!f.sense.empty())
    throw Error("parse-error", "--sense must be min or max");
  if (!f.c.empty())
    inst.c = parse_rational(f.c);
  if (!f.target.empty())
    inst.target = parse_rational(f.target);
  if (inst.kind != InstanceKind::Linear && inst.target)
    throw Error("unsupported", "--target applies to linear instances only");
  return inst;
}

std::size_t cap_for(const Flags &f, InstanceKind kind) {
  if (f.cap)
    return f.cap;
  return kind == InstanceKind::Linear ? kLinearCap : kMatrixCap;
}

std::size_t count_decreasing(std::span<const LinearFunction> fs) {
  return static_cast<std::size_t>(std::count_if(fs.begin(), fs.end(), [](auto &g) { return g.a < 0; }));
}

SolveResult from_oracle(const OracleReport &rep) {
  SolveResult r;
  r.permutation = rep.optimal.front();
  r.value = rep.best_value;
  r.composite = rep.best_composite;
  return r;
}

SolveResult run(const Instance &inst, bool oracle, std::size_t cap) {
  switch (inst.kind) {
  case InstanceKind::Linear: {
    const auto &fs = inst.functions;
    SolveResult r;
    if (inst.target) {
      r = from_oracle(brute_target(fs, inst.c, *inst.target, cap));
    } else if (oracle) {
      r = from_oracle(brute_min_composition(fs, inst.c, inst.sense, cap));
    } else {
      OrderingResult o = solve(fs, inst.c, inst.sense);
      r.permutation = o.sigma;
      r.value = o.value;
      r.composite = o.composite;
      r.case_name = case_name(o.case_tag);
    }
    r.k = count_decreasing(fs);
    return r;
  }
  case InstanceKind::Matrix2: {
    auto ms = as_matrix2(inst);
    Vec2 w{inst.w[0], inst.w[1]}, y{inst.y[0], inst.y[1]};
    if (oracle)
      return from_oracle(brute_min_matrix(ms, w, y, inst.sense, cap));
    MatrixSolution s = solve_matrix2({ms, w, y, inst.sense});
    SolveResult r;
    r.permutation = s.sigma;
    r.value = s.value;
    r.k = s.decreasing;
    return r;
  }
  case InstanceKind::MatrixN:
    if (!oracle)
      throw Error("unsupported", "matrixN instances are solved only with --oracle");
    return from_oracle(brute_min_matrix(inst.matrices, inst.w, inst.y, inst.sense, cap));
  case InstanceKind::MaxPlus2: {
    if (inst.sense == Sense::Max)
      throw Error("unsupported", "max-plus instances support sense min only");
    if (oracle)
      return from_oracle(brute_min_maxplus(inst.maxplus, cap));
    MaxPlusSolution s = solve_maxplus_min(inst.maxplus);
    return {s.sigma, s.value.value(), std::nullopt, std::nullopt, std::nullopt};
  }
  case InstanceKind::FlowShop: {
    if (inst.sense == Sense::Max)
      throw Error("unsupported", "flow-shop instances support sense min only");
    if (oracle)
      return from_oracle(brute_min_maxplus(flowshop_to_maxplus(inst.jobs), cap));
    Permutation order = johnson_rule(inst.jobs);
    return {order, makespan(inst.jobs, order), std::nullopt, std::nullopt, std::nullopt};
  }
  }
  throw Error("unsupported", "unknown instance kind");
}

Rational objective(const Instance &inst, const Permutation &sigma) {
  switch (inst.kind) {
  case InstanceKind::Linear:
    if (inst.target)
      return abs(evaluate(compose_seq(inst.functions, sigma), inst.c) - *inst.target);
    return evaluate(compose_seq(inst.functions, sigma), inst.c);
  case InstanceKind::Matrix2:
  case InstanceKind::MatrixN: {
    std::vector<Rational> v = inst.y;
    for (auto i : sigma) {
      std::vector<Rational> next(v.size());
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
          next[r] += inst.matrices[i][r][c] * v[c];
      v = std::move(next);
    }
    Rational out = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      out += inst.w[j] * v[j];
    return out;
  }
  case InstanceKind::MaxPlus2:
    return mp_objective(inst.maxplus, sigma).value();
  case InstanceKind::FlowShop:
    return makespan(inst.jobs, sigma);
  }
  throw Error("unsupported", "unknown instance kind");
}

std::size_t instance_size(const Instance &inst) {
  switch (inst.kind) {
  case InstanceKind::Linear: return inst.functions.size();
  case InstanceKind::Matrix2:
  case InstanceKind::MatrixN: return inst.matrices.size();
  case InstanceKind::MaxPlus2: return inst.maxplus.size();
  case InstanceKind::FlowShop: return inst.jobs.size();
  }
  return 0;
}

bool certificate_applies(const Instance &inst, bool approx) {
  return !approx && inst.kind == InstanceKind::Linear && !inst.target && inst.sense == Sense::Min &&
         std::all_of(inst.functions.begin(), inst.functions.end(), is_nondecreasing);
}

void print(const json &j) { std::cout << j.dump(2) << "\n"; }

int cmd_solve(const Flags &f) {
  Instance inst = load(f);
  print(result_to_json(run(inst, f.oracle, cap_for(f, inst.kind))));
  return kOk;
}

Permutation parse_sigma(const std::string &text) {
  Permutation sigma;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos)
      next = text.size();
    long v = 0;
    try {
      v = std::stol(text.substr(pos, next - pos));
    } catch (const std::exception &) {
      throw Error("parse-error", "bad --sigma entry");
    }
    if (v < 1)
      throw Error("parse-error", "--sigma entries are 1-based");
    sigma.push_back(static_cast<std::size_t>(v - 1));
    pos = next + 1;
  }
  return sigma;
}

int cmd_verify_file(const Flags &f, const std::string &sigma_text) {
  Instance inst = load(f);
  std::size_t n = instance_size(inst);
  OracleReport rep;
  if (inst.kind == InstanceKind::Linear) {
    rep = inst.target ? brute_target(inst.functions, inst.c, *inst.target, cap_for(f, inst.kind))
                      : brute_min_composition(inst.functions, inst.c, inst.sense, cap_for(f, inst.kind));
  } else {
    Instance copy = inst;
    SolveResult o = run(copy, true, cap_for(f, inst.kind));
    rep.best_value = o.value;
    rep.optimal = {o.permutation};
  }

  Permutation sigma;
  if (!sigma_text.empty()) {
    sigma = parse_sigma(sigma_text);
    if (!is_permutation_of(sigma, n))
      throw Error("parse-error", "--sigma is not a permutation of the instance");
  } else {
    sigma = run(inst, false, cap_for(f, inst.kind)).permutation;
  }

  json report;
  Rational value = objective(inst, sigma);
  bool value_ok = value == rep.best_value;
  report["permutation"] = permutation_to_json(sigma);
  report["value"] = rational_to_json(value);
  report["oracle_value"] = rational_to_json(rep.best_value);
  report["value_matches"] = value_ok;
  bool ok = value_ok;
  if (certificate_applies(inst, f.approx)) {
    bool cert = is_optimal_certificate(inst.functions, sigma);
    report["certificate"] = cert;
    ok = ok && cert == value_ok;
  }
  report["ok"] = ok;
  print(report);
  return ok ? kOk : kMismatch;
}

struct RandomVerify {
  std::size_t n = 5;
  std::size_t k = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

std::vector<LinearFunction> random_instance(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(0, 4), den(1, 3), icpt(-3, 3);
  std::vector<LinearFunction> fs;
  for (std::size_t i = 0; i < n; ++i) {
    Rational a(num(rng), den(rng)), b(icpt(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (i < k)
      a = a == 0 ? Rational(-1) : Rational(-a);
    fs.push_back({a, b});
  }
  std::shuffle(fs.begin(), fs.end(), rng);
  return fs;
}

int cmd_verify_random(const RandomVerify &rv, std::size_t cap) {
  if (rv.k > rv.n)
    throw Error("parse-error", "--k exceeds --random");
  if (rv.n > cap)
    throw Error("cap-exceeded", "instance size exceeds oracle cap");
  std::atomic<std::size_t> next{0}, mismatches{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < rv.trials;) {
      auto fs = random_instance(rv.n, rv.k, rv.seed + t);
      auto rep = brute_min_composition(fs, 0, Sense::Min, cap);
      auto got = solve(fs, 0, Sense::Min);
      bool ok = got.value == rep.best_value;
      if (rv.k == 0)
        ok = ok && is_optimal_certificate(fs, got.sigma);
      if (!ok)
        ++mismatches;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, rv.jobs); ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  print({{"n", rv.n}, {"k", rv.k}, {"trials", rv.trials}, {"seed", rv.seed},
         {"mismatches", mismatches.load()}});
  return mismatches == 0 ? kOk : kMismatch;
}

std::vector<LinearFunction> linear_only(const Instance &inst) {
  if (inst.kind != InstanceKind::Linear)
    throw Error("unsupported", "counting needs a linear instance");
  return inst.functions;
}

int cmd_count(const Flags &f) {
  auto fs = linear_only(load(f));
  print({{"count", count_optimal(fs).get_str()}});
  return kOk;
}

int cmd_enumerate(const Flags &f, std::size_t limit) {
  auto fs = linear_only(load(f));
  BigInt total = count_optimal(fs);
  json perms = json::array();
  for (const auto &sigma : enumerate_optimal(fs, limit))
    perms.push_back(permutation_to_json(sigma));
  print({{"count", total.get_str()}, {"permutations", perms}, {"truncated", BigInt(perms.size()) < total}});
  return kOk;
}

int cmd_bench(const std::vector<std::size_t> &ns, const std::vector<std::size_t> &ks,
              std::size_t trials, std::uint64_t seed) {
  json rows = json::array();
  for (auto n : ns)
    for (auto k : ks) {
      if (k == 0 || k > n)
        continue;
      BenchRow row = bench_lu(n, k, trials, seed);
      rows.push_back({{"n", row.n}, {"k", row.k}, {"trials", row.trials}, {"median_ms", row.median_ms}});
      std::cerr << "n=" << row.n << " k=" << row.k << " median " << row.median_ms << " ms\n";
    }
  print({{"rows", rows}});
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Optimal composition orderings of linear functions and 2x2 matrices"};
  app.require_subcommand(1);
  Flags flags;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("path", flags.path, "Instance file (JSON)")->required();
    sub->add_option("--sense", flags.sense, "min or max, overrides the file");
    sub->add_option("--c", flags.c, "Evaluation point for linear instances");
    sub->add_option("--cap", flags.cap, "Oracle size cap");
    sub->add_flag("--approx", flags.approx, "Accept floating-point inputs (uncertified)");
  };

  auto *solve_cmd = app.add_subcommand("solve", "Solve an instance");
  add_common(solve_cmd);
  solve_cmd->add_option("--target", flags.target, "Minimize |f(c) - target| by brute force");
  solve_cmd->add_flag("--oracle", flags.oracle, "Use brute force instead of the solver");

  auto *verify_cmd = app.add_subcommand("verify", "Check solver output against brute force");
  std::string sigma_text;
  RandomVerify rv;
  std::size_t random_n = 0;
  verify_cmd->add_option("path", flags.path, "Instance file (JSON)");
  verify_cmd->add_option("--sense", flags.sense, "min or max");
  verify_cmd->add_option("--c", flags.c, "Evaluation point");
  verify_cmd->add_option("--target", flags.target, "Target value");
  verify_cmd->add_option("--cap", flags.cap, "Oracle size cap");
  verify_cmd->add_flag("--approx", flags.approx, "Accept floating-point inputs (uncertified)");
  verify_cmd->add_option("--sigma", sigma_text, "1-based order to check, e.g. 2,1,3");
  verify_cmd->add_option("--random", random_n, "Size of random linear instances");
  verify_cmd->add_option("--k", rv.k, "Decreasing functions per random instance");
  verify_cmd->add_option("--trials", rv.trials, "Random instances");
  verify_cmd->add_option("--seed", rv.seed, "Random seed");
  verify_cmd->add_option("--jobs", rv.jobs, "Worker threads");

  auto *count_cmd = app.add_subcommand("count", "Number of optimal orders");
  add_common(count_cmd);
  auto *enum_cmd = app.add_subcommand("enumerate", "List optimal orders");
  add_common(enum_cmd);
  std::size_t limit = 1000;
  enum_cmd->add_option("--limit", limit, "Maximum orders to list");

  auto *bench_cmd = app.add_subcommand("bench", "Time the ordered-split dynamic program");
  std::vector<std::size_t> bench_n{40}, bench_k{1, 2, 3, 4};
  std::size_t bench_trials = 9;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--n", bench_n, "Instance sizes");
  bench_cmd->add_option("--k", bench_k, "Decreasing counts");
  bench_cmd->add_option("--trials", bench_trials, "Instances per cell");
  bench_cmd->add_option("--seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*solve_cmd)
      return cmd_solve(flags);
    if (*verify_cmd) {
      if (random_n) {
        rv.n = random_n;
        return cmd_verify_random(rv, flags.cap ? flags.cap : kLinearCap);
      }
      if (flags.path.empty())
        throw Error("parse-error", "verify needs an instance path or --random");
      return cmd_verify_file(flags, sigma_text);
    }
    if (*count_cmd)
      return cmd_count(flags);
    if (*enum_cmd)
      return cmd_enumerate(flags, limit);
    if (*bench_cmd)
      return cmd_bench(bench_n, bench_k, bench_trials, bench_seed);
  } catch (const Error &e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kOk;
}
