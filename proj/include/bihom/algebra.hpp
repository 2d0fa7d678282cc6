#ifndef BIHOM_ALGEBRA_HPP
#define BIHOM_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "bihom/grading.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// Result of an exhaustive check: pass, or the first violating basis tuple
/// together with its exact residual vector.
struct Witness {
  std::string axiom;
  std::vector<int> tuple;
  Vec residual;
};

struct CheckReport {
  bool passed = true;
  std::optional<Witness> witness;

  static CheckReport pass() { return {}; }
  static CheckReport fail(Witness w) { return {false, std::move(w)}; }
  std::string describe() const;
};

struct Grading {
  GradingGroup group;
  std::vector<GradingGroup::Element> degrees;  // one per basis index
  Bicharacter epsilon;
};

/// Finite-dimensional algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k, with two twisting maps and an optional
/// grading + bicharacter.  Structure constants are indexed
/// [left][right][output].
struct Algebra {
  int dim = 0;
  std::vector<Scalar> c;  // flat, i*dim*dim + j*dim + k
  Matrix alpha, beta;
  std::optional<Grading> grading;

  static Algebra zero(int n);

  const Scalar& c_at(int i, int j, int k) const { return c[(size_t(i) * dim + j) * dim + k]; }
  Scalar& c_at(int i, int j, int k) { return c[(size_t(i) * dim + j) * dim + k]; }

  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(int i, int j) const;
  bool graded() const { return grading.has_value(); }
  GradingGroup::Element degree(int i) const;
};

/// Bilinear extension of the structure tensor.
Vec bracket_eval(const Algebra& L, const Vec& x, const Vec& y);

/// Shape consistency, grading evenness of c, degree-0 alpha/beta, and the
/// bicharacter identities (by enumeration).  Reports the first violation.
CheckReport validate(const Algebra& L);

/// eps(deg e_i, deg e_j); throws std::domain_error on ungraded algebras.
Scalar epsilon_of(const Algebra& L, int i, int j);

/// eps value used by the checkers: 1 for ungraded algebras.
Scalar epsilon_or_one(const Algebra& L, int i, int j);

/// Representation of L on a module V: action tensors for [e_i, v_a]_V and
/// [v_a, e_i]_V plus the module twisting maps.
struct Representation {
  Algebra algebra;
  int dim = 0;                  // m = dim V
  std::vector<Scalar> l;        // [i][a][b]: coeff of v_b in [e_i, v_a]_V
  std::vector<Scalar> r;        // [i][a][b]: coeff of v_b in [v_a, e_i]_V
  Matrix alphaV, betaV;
  std::optional<std::vector<GradingGroup::Element>> degrees;

  static Representation zero(const Algebra& L, int m);
  static Representation trivial(const Algebra& L);  // 1-dim, zero actions

  Matrix l_mat(int i) const;  // matrix of v -> [e_i, v]_V
  Matrix r_mat(int i) const;  // matrix of v -> [v, e_i]_V
  /// l(x) for a vector x, by linearity.
  Matrix l_of(const Vec& x) const;
  Matrix r_of(const Vec& x) const;
};

CheckReport validate(const Representation& V);

/// k-multilinear map L^k -> V as a flat tensor.  Flattening is slot-major
/// (tuple index first, output coordinate last):
///   flat((i_1,...,i_k), b) = ((i_1 * n + i_2) * n + ...) * m + b.
struct Cochain {
  int k = 0;
  int n = 0;  // dim L
  int m = 0;  // dim V
  std::vector<Scalar> values;

  static Cochain zero(int k, int n, int m);
  size_t flat_index(const std::vector<int>& tuple, int b) const;
  /// Value on a basis tuple, as a vector in V.
  Vec value_at(const std::vector<int>& tuple) const;
  /// Multilinear evaluation on arbitrary vectors.
  Vec eval(const std::vector<Vec>& args) const;
};

/// f(alpha x_1, ..., alpha x_k) = alphaV f(x_1, ..., x_k) on all basis tuples.
CheckReport check_cochain_compatibility(const Algebra& L, const Representation& V,
                                        const Cochain& f);

}  // namespace bihom

#endif
