#include "bihom/matrix.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace bihom {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(int(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (int(rows[r].size()) != cols) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(int(r), c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = c * e_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  // Gauss-Jordan on [A | I]
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  auto [red, rank] = rref(aug);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (red.at(i, j) != (i == j ? Scalar(1) : Scalar(0)))
        throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

Matrix Matrix::power(int p) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  Matrix base = p >= 0 ? *this : inverse();
  int e = p >= 0 ? p : -p;
  Matrix r = identity(rows_);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << at(i, j).str();
    }
    out << "]";
    if (i + 1 < rows_) out << "\n";
  }
  return out.str();
}

std::pair<Matrix, int> rref(const Matrix& m) {
  Matrix a = m;
  int rank = 0;
  int rows = a.rows(), cols = a.cols();
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
    Scalar inv = a.at(rank, col).inverse();
    for (int c = col; c < cols; ++c) a.at(rank, c) = inv * a.at(rank, c);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (int c = col; c < cols; ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return {a, rank};
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return m;
}

Vec vec_row_major(const Matrix& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Matrix unvec_row_major(const Vec& v, int n) {
  if (int(v.size()) != n * n) throw std::invalid_argument("unvec length mismatch");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[size_t(i) * n + j];
  return m;
}

Matrix lift_commutant_system(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("commutant lift needs a square matrix");
  int n = a.rows();
  Matrix m(n * n, n * n);
  // equation (r,c): sum_k X[r][k] a[k][c] - a[r][k] X[k][c] = 0
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int eq = r * n + c;
      for (int k = 0; k < n; ++k) {
        m.at(eq, r * n + k) += a.at(k, c);
        m.at(eq, k * n + c) -= a.at(r, k);
      }
    }
  return m;
}

Subspace Subspace::from_vectors(int ambient_dim, const std::vector<Vec>& vectors) {
  Matrix stacked = Matrix::from_rows(vectors, ambient_dim);
  auto [red, rank] = rref(stacked);
  Subspace s(ambient_dim);
  Matrix basis(rank, ambient_dim);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < ambient_dim; ++j) basis.at(i, j) = red.at(i, j);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  // reduce v against the RREF basis; membership iff the remainder vanishes
  Vec rem = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < ambient_; ++c)
      if (!basis_.at(r, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    if (rem[lead].is_zero()) continue;
    Scalar f = rem[lead];
    for (int c = 0; c < ambient_; ++c) rem[c] -= f * basis_.at(r, c);
  }
  return vec_is_zero(rem);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace null_space(const Matrix& m) {
  auto [red, rank] = rref(m);
  int cols = m.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < cols; ++c)
      if (!red.at(r, c).is_zero()) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = Scalar(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -red.at(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Subspace(cols);
  return Subspace::from_vectors(cols, basis);
}

namespace {
// Annihilator {w : B w = 0} of the row span, as a subspace.
Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return null_space(s.basis());
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  if (rows.empty()) return Subspace(a.ambient_dim());
  return Subspace::from_vectors(a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  // A cap B = (A° + B°)°, with ° the annihilator under the standard form
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

bool subspace_equal(const Subspace& a, const Subspace& b) { return a == b; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [red, rank] = rref(aug);
  Vec x(m.cols());
  for (int r = 0; r < rank; ++r) {
    int lead = -1;
    for (int c = 0; c <= m.cols(); ++c)
      if (!red.at(r, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead == m.cols()) return std::nullopt;  // inconsistent row
    if (lead >= 0) x[lead] = red.at(r, m.cols());
  }
  return x;
}

}  // namespace bihom
