#ifndef BIHOM_MATRIX_HPP
#define BIHOM_MATRIX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense matrix over the exact scalar field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return e_; }

  Vec row(int r) const;
  Vec col(int c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  /// Exact inverse; throws std::domain_error when singular.
  Matrix inverse() const;
  /// M^p for any integer p; negative powers require invertibility.
  Matrix power(int p) const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Unique reduced row-echelon form and rank; exact arithmetic, no tolerance.
std::pair<Matrix, int> rref(const Matrix& m);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Row-major flattening of a square matrix into length n*n.
Vec vec_row_major(const Matrix& m);
Matrix unvec_row_major(const Vec& v, int n);

/// The n^2 x n^2 system M with M * vec(X) = 0  iff  X a = a X
/// (vec is row-major).
Matrix lift_commutant_system(const Matrix& a);

/// Subspace of an ambient coordinate space, kept as an RREF basis so equal
/// subspaces compare as identical matrices.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace from_vectors(int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  Matrix basis_;  // rows in RREF, no zero rows
};

Subspace null_space(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_equal(const Subspace& a, const Subspace& b);

/// One exact solution of m x = b; empty optional when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace bihom

#endif
