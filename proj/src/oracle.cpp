#include "compord/oracle.hpp"

#include <algorithm>
#include <functional>

namespace compord {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error("cap-exceeded", "instance of size " + std::to_string(n) +
                                    " exceeds oracle cap " + std::to_string(cap));
}

// Smaller score is better.
OracleReport scan(std::size_t n, const std::function<Rational(const Permutation &)> &score) {
  OracleReport r;
  Permutation sigma = identity_permutation(n);
  bool first = true;
  do {
    Rational v = score(sigma);
    ++r.evaluated_count;
    if (first || v < r.best_value) {
      r.best_value = v;
      r.optimal.clear();
      first = false;
    }
    if (v == r.best_value)
      r.optimal.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return r;
}

} // namespace

OracleReport brute_min_composition(std::span<const LinearFunction> fs, const Rational &c,
                                   Sense sense, std::size_t cap) {
  check_cap(fs.size(), cap);
  const int s = sense == Sense::Min ? 1 : -1;
  OracleReport r = scan(fs.size(), [&](const Permutation &sigma) {
    return Rational(s * evaluate(compose_seq(fs, sigma), c));
  });
  r.best_value *= s;
  r.best_composite = compose_seq(fs, r.optimal.front());
  return r;
}

OracleReport brute_min_matrix(std::span<const MatrixN> ms, std::span<const Rational> w,
                              std::span<const Rational> y, Sense sense, std::size_t cap) {
  check_cap(ms.size(), cap);
  const std::size_t m = w.size();
  if (y.size() != m)
    throw Error("dimension-mismatch", "w and y differ in length");
  for (const auto &a : ms) {
    if (a.size() != m)
      throw Error("dimension-mismatch", "matrix size does not match w");
    for (const auto &row : a)
      if (row.size() != m)
        throw Error("dimension-mismatch", "matrix is not square");
  }
  const int s = sense == Sense::Min ? 1 : -1;
  OracleReport r = scan(ms.size(), [&](const Permutation &sigma) {
    std::vector<Rational> v(y.begin(), y.end()), next(m);
    for (auto i : sigma) {
      for (std::size_t row = 0; row < m; ++row) {
        next[row] = 0;
        for (std::size_t col = 0; col < m; ++col)
          next[row] += ms[i][row][col] * v[col];
      }
      v.swap(next);
    }
    Rational out = 0;
    for (std::size_t j = 0; j < m; ++j)
      out += w[j] * v[j];
    return Rational(s * out);
  });
  r.best_value *= s;
  return r;
}

OracleReport brute_min_matrix(std::span<const Matrix2> ms, const Vec2 &w, const Vec2 &y,
                              Sense sense, std::size_t cap) {
  std::vector<MatrixN> dense;
  for (const auto &a : ms)
    dense.push_back({{a.e11, a.e12}, {a.e21, a.e22}});
  const Rational wv[] = {w.x, w.y}, yv[] = {y.x, y.y};
  return brute_min_matrix(dense, wv, yv, sense, cap);
}

OracleReport brute_min_maxplus(std::span<const MaxPlusMatrix2> ns, std::size_t cap) {
  check_cap(ns.size(), cap);
  return scan(ns.size(), [&](const Permutation &sigma) { return mp_objective(ns, sigma).value(); });
}

OracleReport brute_target(std::span<const LinearFunction> fs, const Rational &c, const Rational &t,
                          std::size_t cap) {
  check_cap(fs.size(), cap);
  OracleReport r = scan(fs.size(), [&](const Permutation &sigma) {
    return Rational(abs(evaluate(compose_seq(fs, sigma), c) - t));
  });
  r.best_composite = compose_seq(fs, r.optimal.front());
  return r;
}

} // namespace compord
