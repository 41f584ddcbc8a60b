#pragma once

// Multiplication orderings of 2x2 rational matrices that share an
// eigenvector. After a change of basis every factor is upper triangular and
// the objective is an affine function of one entry of the product, which is
// the linear-function ordering problem in homogeneous form.

#include "compord/direction.hpp"
#include "compord/fpt_solver.hpp"
#include "compord/linear_function.hpp"
#include "compord/triangular.hpp"

#include <optional>
#include <span>
#include <vector>

namespace compord {

struct Matrix2 {
  Rational e11{1};
  Rational e12{0};
  Rational e21{0};
  Rational e22{1};

  static Matrix2 upper(Rational a, Rational b, Rational d) {
    return {std::move(a), std::move(b), Rational(0), std::move(d)};
  }
  bool is_upper_triangular() const { return e21 == 0; }
  bool is_scalar() const { return e12 == 0 && e21 == 0 && e11 == e22; }
  Rational det() const { return e11 * e22 - e12 * e21; }
  friend bool operator==(const Matrix2 &, const Matrix2 &) = default;
};

Matrix2 operator*(const Matrix2 &x, const Matrix2 &y);
Vec2 operator*(const Matrix2 &m, const Vec2 &v);
Matrix2 inverse(const Matrix2 &m);
Matrix2 transpose(const Matrix2 &m);

struct MatrixInstance {
  std::vector<Matrix2> matrices;
  Vec2 w{Rational(1), Rational(0)};
  Vec2 y{Rational(0), Rational(1)};
  Sense sense = Sense::Min;
};

// A regular P with every P^-1 M P upper triangular, or nullopt when no common
// eigenvector exists. Throws "irrational-triangularization" when the first
// non-scalar matrix has no rational eigenvalue.
std::optional<Matrix2> try_simultaneous_triangularize(std::span<const Matrix2> ms);

struct LinearReduction {
  // Sign-normalized factors; the objective's order-dependent part is the
  // upper-right entry of their product.
  std::vector<TriElement> elements;
  // (a/d) x + b/d for each factor, present when every d is nonzero.
  std::optional<std::vector<LinearFunction>> functions;
  Rational offset;       // w1 y1 prod(a) + w2 y2 prod(d)
  Rational entry_scale;  // objective = offset + entry_scale * entry12
  Rational scale;        // objective = offset + scale * f(0), when functions exist
  int parity = 0;        // number of negated factors, mod 2
  bool degenerate = false; // w1 y2 == 0: every order has the same value
  bool flip = false;       // minimizing the objective maximizes the entry
};

LinearReduction reduce_to_linear(std::span<const Matrix2> ms, const Vec2 &w, const Vec2 &y);

Rational evaluate_matrix_order(std::span<const Matrix2> ms, const Vec2 &w, const Vec2 &y,
                               const Permutation &sigma);

struct MatrixSolution {
  Permutation sigma;
  Rational value;
  Matrix2 basis;            // P used for triangularization
  std::size_t decreasing = 0; // factors with negative determinant
  bool degenerate = false;
};

MatrixSolution solve_matrix2(const MatrixInstance &instance);

} // namespace compord
