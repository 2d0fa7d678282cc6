#include "bihom/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace bihom {

std::string CheckReport::describe() const {
  if (passed) return "pass";
  std::ostringstream out;
  out << "fail: " << witness->axiom << " at (";
  for (size_t i = 0; i < witness->tuple.size(); ++i) {
    if (i) out << ",";
    out << witness->tuple[i];
  }
  out << ") residual [";
  for (size_t i = 0; i < witness->residual.size(); ++i) {
    if (i) out << ",";
    out << witness->residual[i].str();
  }
  out << "]";
  return out.str();
}

Algebra Algebra::zero(int n) {
  Algebra a;
  a.dim = n;
  a.c.assign(size_t(n) * n * n, Scalar(0));
  a.alpha = Matrix::identity(n);
  a.beta = Matrix::identity(n);
  return a;
}

Vec Algebra::bracket_basis(int i, int j) const {
  Vec v(dim);
  for (int k = 0; k < dim; ++k) v[k] = c_at(i, j, k);
  return v;
}

GradingGroup::Element Algebra::degree(int i) const {
  if (!grading) throw std::domain_error("algebra is not graded");
  return grading->degrees[i];
}

Vec bracket_eval(const Algebra& L, const Vec& x, const Vec& y) {
  if (int(x.size()) != L.dim || int(y.size()) != L.dim)
    throw std::invalid_argument("bracket operand length mismatch");
  Vec r(L.dim);
  for (int i = 0; i < L.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < L.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int k = 0; k < L.dim; ++k) {
        const Scalar& cc = L.c_at(i, j, k);
        if (!cc.is_zero()) r[k] += f * cc;
      }
    }
  }
  return r;
}

CheckReport validate(const Algebra& L) {
  int n = L.dim;
  if (n <= 0) return CheckReport::fail({"shape: dim must be positive", {}, {}});
  if (int(L.c.size()) != n * n * n)
    return CheckReport::fail({"shape: structure tensor size", {}, {}});
  if (L.alpha.rows() != n || L.alpha.cols() != n || L.beta.rows() != n || L.beta.cols() != n)
    return CheckReport::fail({"shape: twisting map size", {}, {}});
  if (!L.grading) return CheckReport::pass();

  const Grading& g = *L.grading;
  if (int(g.degrees.size()) != n)
    return CheckReport::fail({"grading: degree list size", {}, {}});
  if (!(g.epsilon.group() == g.group))
    return CheckReport::fail({"grading: bicharacter group mismatch", {}, {}});
  std::string bad = g.epsilon.first_violation();
  if (!bad.empty()) return CheckReport::fail({"bicharacter: " + bad, {}, {}});

  // bracket must be even: c[i][j][k] = 0 unless deg k = deg i + deg j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto target = g.group.add(g.degrees[i], g.degrees[j]);
      for (int k = 0; k < n; ++k)
        if (!L.c_at(i, j, k).is_zero() && g.degrees[k] != target)
          return CheckReport::fail(
              {"grading: bracket not even", {i, j, k}, {L.c_at(i, j, k)}});
    }
  // alpha, beta must be degree 0
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      if (!L.alpha.at(row, col).is_zero() && g.degrees[row] != g.degrees[col])
        return CheckReport::fail({"grading: alpha not even", {row, col}, {L.alpha.at(row, col)}});
      if (!L.beta.at(row, col).is_zero() && g.degrees[row] != g.degrees[col])
        return CheckReport::fail({"grading: beta not even", {row, col}, {L.beta.at(row, col)}});
    }
  return CheckReport::pass();
}

Scalar epsilon_of(const Algebra& L, int i, int j) {
  if (!L.grading) throw std::domain_error("epsilon_of on ungraded algebra");
  return L.grading->epsilon.value(L.grading->degrees[i], L.grading->degrees[j]);
}

Scalar epsilon_or_one(const Algebra& L, int i, int j) {
  if (!L.grading) return Scalar(1);
  return epsilon_of(L, i, j);
}

Representation Representation::zero(const Algebra& L, int m) {
  Representation v;
  v.algebra = L;
  v.dim = m;
  v.l.assign(size_t(L.dim) * m * m, Scalar(0));
  v.r.assign(size_t(L.dim) * m * m, Scalar(0));
  v.alphaV = Matrix::identity(m);
  v.betaV = Matrix::identity(m);
  return v;
}

Representation Representation::trivial(const Algebra& L) { return zero(L, 1); }

Matrix Representation::l_mat(int i) const {
  Matrix m(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) m.at(b, a) = l[(size_t(i) * dim + a) * dim + b];
  return m;
}

Matrix Representation::r_mat(int i) const {
  Matrix m(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) m.at(b, a) = r[(size_t(i) * dim + a) * dim + b];
  return m;
}

Matrix Representation::l_of(const Vec& x) const {
  Matrix m = Matrix::zero(dim, dim);
  for (int i = 0; i < algebra.dim; ++i)
    if (!x[i].is_zero()) m = m + l_mat(i) * x[i];
  return m;
}

Matrix Representation::r_of(const Vec& x) const {
  Matrix m = Matrix::zero(dim, dim);
  for (int i = 0; i < algebra.dim; ++i)
    if (!x[i].is_zero()) m = m + r_mat(i) * x[i];
  return m;
}

CheckReport validate(const Representation& V) {
  CheckReport base = validate(V.algebra);
  if (!base.passed) return base;
  int n = V.algebra.dim, m = V.dim;
  if (m <= 0) return CheckReport::fail({"shape: module dim must be positive", {}, {}});
  if (int(V.l.size()) != n * m * m || int(V.r.size()) != n * m * m)
    return CheckReport::fail({"shape: action tensor size", {}, {}});
  if (V.alphaV.rows() != m || V.alphaV.cols() != m || V.betaV.rows() != m || V.betaV.cols() != m)
    return CheckReport::fail({"shape: module map size", {}, {}});
  if (V.degrees && int(V.degrees->size()) != m)
    return CheckReport::fail({"grading: module degree list size", {}, {}});
  return CheckReport::pass();
}

Cochain Cochain::zero(int k, int n, int m) {
  Cochain f;
  f.k = k;
  f.n = n;
  f.m = m;
  size_t sz = size_t(m);
  for (int i = 0; i < k; ++i) sz *= size_t(n);
  f.values.assign(sz, Scalar(0));
  return f;
}

size_t Cochain::flat_index(const std::vector<int>& tuple, int b) const {
  size_t idx = 0;
  for (int t : tuple) idx = idx * n + size_t(t);
  return idx * m + size_t(b);
}

Vec Cochain::value_at(const std::vector<int>& tuple) const {
  Vec v(m);
  for (int b = 0; b < m; ++b) v[b] = values[flat_index(tuple, b)];
  return v;
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
  if (int(args.size()) != k) throw std::invalid_argument("cochain arity mismatch");
  Vec out(m);
  std::vector<int> tuple(k, 0);
  while (true) {
    Scalar coef(1);
    bool zero = false;
    for (int s = 0; s < k; ++s) {
      if (args[s][tuple[s]].is_zero()) {
        zero = true;
        break;
      }
      coef *= args[s][tuple[s]];
    }
    if (!zero)
      for (int b = 0; b < m; ++b) {
        const Scalar& v = values[flat_index(tuple, b)];
        if (!v.is_zero()) out[b] += coef * v;
      }
    int s = k - 1;
    while (s >= 0 && ++tuple[s] == n) tuple[s--] = 0;
    if (s < 0) break;
  }
  return out;
}

CheckReport check_cochain_compatibility(const Algebra& L, const Representation& V,
                                        const Cochain& f) {
  int n = L.dim, m = V.dim;
  if (f.n != n || f.m != m)
    return CheckReport::fail({"cochain: shape mismatch", {}, {}});
  if (f.k == 0) {
    Vec v = f.value_at({});
    Vec res = V.alphaV.apply(v) - v;
    if (!vec_is_zero(res)) return CheckReport::fail({"cochain: alphaV(v) != v", {}, res});
    return CheckReport::pass();
  }
  std::vector<int> tuple(f.k, 0);
  std::vector<Vec> alpha_cols(n);
  for (int i = 0; i < n; ++i) alpha_cols[i] = L.alpha.col(i);
  while (true) {
    std::vector<Vec> args(f.k);
    for (int s = 0; s < f.k; ++s) args[s] = alpha_cols[tuple[s]];
    Vec res = f.eval(args) - V.alphaV.apply(f.value_at(tuple));
    if (!vec_is_zero(res))
      return CheckReport::fail({"cochain: f(alpha...) != alphaV f", tuple, res});
    int s = f.k - 1;
    while (s >= 0 && ++tuple[s] == n) tuple[s--] = 0;
    if (s < 0) break;
  }
  return CheckReport::pass();
}

}  // namespace bihom
