#include "compord/matrix2.hpp"

#include <algorithm>

namespace compord {

Matrix2 operator*(const Matrix2 &x, const Matrix2 &y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

Vec2 operator*(const Matrix2 &m, const Vec2 &v) {
  return {m.e11 * v.x + m.e12 * v.y, m.e21 * v.x + m.e22 * v.y};
}

Matrix2 inverse(const Matrix2 &m) {
  Rational det = m.det();
  if (det == 0)
    throw Error("singular-matrix", "matrix is not invertible");
  return {m.e22 / det, -m.e12 / det, -m.e21 / det, m.e11 / det};
}

Matrix2 transpose(const Matrix2 &m) { return {m.e11, m.e21, m.e12, m.e22}; }

namespace {

std::optional<Rational> rational_sqrt(const Rational &x) {
  if (x < 0)
    return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  return Rational(num, den);
}

Vec2 kernel_vector(const Matrix2 &k) {
  if (k.e11 != 0 || k.e12 != 0)
    return {-k.e12, k.e11};
  return {-k.e22, k.e21};
}

} // namespace

std::optional<Matrix2> try_simultaneous_triangularize(std::span<const Matrix2> ms) {
  if (std::all_of(ms.begin(), ms.end(), [](const Matrix2 &m) { return m.is_upper_triangular(); }))
    return Matrix2{};
  auto pivot = std::find_if(ms.begin(), ms.end(), [](const Matrix2 &m) { return !m.is_scalar(); });
  if (pivot == ms.end())
    return Matrix2{};

  const Matrix2 &m = *pivot;
  Rational trace = m.e11 + m.e22;
  auto root = rational_sqrt(trace * trace - 4 * m.det());
  if (!root)
    throw Error("irrational-triangularization", "eigenvalues are not rational");

  for (const Rational &lambda : {Rational((trace + *root) / 2), Rational((trace - *root) / 2)}) {
    Matrix2 shifted{m.e11 - lambda, m.e12, m.e21, m.e22 - lambda};
    Vec2 v = kernel_vector(shifted);
    bool common = std::all_of(ms.begin(), ms.end(),
                              [&](const Matrix2 &x) { return cross(x * v, v) == 0; });
    if (!common)
      continue;
    Vec2 u = v.x != 0 ? Vec2{0, 1} : Vec2{1, 0};
    return Matrix2{v.x, u.x, v.y, u.y};
  }
  return std::nullopt;
}

LinearReduction reduce_to_linear(std::span<const Matrix2> ms, const Vec2 &w, const Vec2 &y) {
  LinearReduction r;
  Rational prod_a = 1, prod_d = 1;
  bool all_positive_d = true;
  for (const auto &m : ms) {
    if (!m.is_upper_triangular())
      throw Error("not-triangular", "reduction needs upper triangular matrices");
    prod_a *= m.e11;
    prod_d *= m.e22;
    TriElement t{m.e11, m.e12, m.e22};
    if (t.d < 0 || (t.d == 0 && t.a < 0)) {
      t = {-t.a, -t.b, -t.d};
      r.parity ^= 1;
    }
    all_positive_d = all_positive_d && t.d > 0;
    r.elements.push_back(std::move(t));
  }
  r.offset = w.x * y.x * prod_a + w.y * y.y * prod_d;
  r.entry_scale = w.x * y.y * (r.parity ? -1 : 1);
  r.degenerate = r.entry_scale == 0;
  r.flip = r.entry_scale < 0;
  if (all_positive_d) {
    std::vector<LinearFunction> fs;
    Rational prod_norm_d = 1;
    for (const auto &t : r.elements) {
      fs.push_back({t.a / t.d, t.b / t.d});
      prod_norm_d *= t.d;
    }
    r.functions = std::move(fs);
    r.scale = r.entry_scale * prod_norm_d;
  }
  return r;
}

Rational evaluate_matrix_order(std::span<const Matrix2> ms, const Vec2 &w, const Vec2 &y,
                               const Permutation &sigma) {
  if (!is_permutation_of(sigma, ms.size()))
    throw Error("length-mismatch", "permutation does not match the matrix list");
  Vec2 v = y;
  for (auto i : sigma)
    v = ms[i] * v;
  return dot(w, v);
}

MatrixSolution solve_matrix2(const MatrixInstance &instance) {
  const auto &ms = instance.matrices;
  Vec2 w = instance.w;
  if (instance.sense == Sense::Max)
    w = {-w.x, -w.y};

  auto basis = try_simultaneous_triangularize(ms);
  if (!basis)
    throw Error("not-triangularizable", "matrices share no eigenvector");
  Matrix2 p_inv = inverse(*basis);
  std::vector<Matrix2> conj;
  for (const auto &m : ms)
    conj.push_back(p_inv * m * *basis);
  Vec2 w2 = transpose(*basis) * w;
  Vec2 y2 = p_inv * instance.y;

  LinearReduction red = reduce_to_linear(conj, w2, y2);
  MatrixSolution sol;
  sol.basis = *basis;
  sol.degenerate = red.degenerate;
  sol.decreasing = static_cast<std::size_t>(
      std::count_if(red.elements.begin(), red.elements.end(), is_decreasing));
  if (red.degenerate) {
    sol.sigma = identity_permutation(ms.size());
  } else {
    auto elems = red.elements;
    if (red.flip)
      for (auto &t : elems)
        t.b = -t.b;
    sol.sigma = minimize(elems).order;
  }
  sol.value = evaluate_matrix_order(ms, instance.w, instance.y, sol.sigma);
  return sol;
}

} // namespace compord
