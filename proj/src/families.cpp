#include "bihom/families.hpp"

#include <stdexcept>

namespace bihom {

namespace {
Matrix diag2(long a, long b) {
  Matrix m(2, 2);
  m.at(0, 0) = Scalar(a);
  m.at(1, 1) = Scalar(b);
  return m;
}
}  // namespace

Algebra table_case1(const Scalar& x, const Scalar& y) {
  Algebra L = table_case1_untwisted(x, y);
  L.alpha = diag2(-1, 1);
  return L;
}

Algebra table_case1_untwisted(const Scalar& x, const Scalar& y) {
  Algebra L = Algebra::zero(2);
  L.c_at(0, 0, 1) = x;
  L.c_at(0, 1, 1) = y;
  return L;
}

Algebra table_case2(const Scalar& c, const Scalar& d) {
  Algebra L = Algebra::zero(2);
  L.c_at(1, 0, 0) = c;
  L.c_at(1, 1, 0) = d;
  L.alpha = diag2(-1, 1);
  return L;
}

Algebra table_case3_untwisted(const Scalar& a, const Scalar& x) {
  if (x.is_zero()) throw std::invalid_argument("table case 3 needs x != 0");
  Algebra L = Algebra::zero(2);
  Scalar q = a / x;  // [e1,e2] = [e2,e1] = -(a/x)[e1,e1], [e2,e2] = (a/x)^2 [e1,e1]
  L.c_at(0, 0, 0) = a;
  L.c_at(0, 0, 1) = x;
  L.c_at(0, 1, 0) = -(q * a);
  L.c_at(0, 1, 1) = -(q * x);
  L.c_at(1, 0, 0) = -(q * a);
  L.c_at(1, 0, 1) = -(q * x);
  L.c_at(1, 1, 0) = q * q * a;
  L.c_at(1, 1, 1) = q * q * x;
  return L;
}

Algebra table_case3(const Scalar& a, const Scalar& x) {
  Algebra L = table_case3_untwisted(a, x);
  L.alpha = diag2(-1, 1);
  return L;
}

Algebra table_case4(const Scalar& b, const Scalar& y) {
  Algebra L = Algebra::zero(2);
  L.c_at(0, 1, 0) = b;
  L.c_at(0, 1, 1) = y;
  L.c_at(1, 0, 0) = -b;
  L.c_at(1, 0, 1) = -y;
  L.alpha = diag2(-1, 1);
  return L;
}

Algebra super3d(const Scalar& a, const Scalar& x, const Scalar& d, const Scalar& mu) {
  if (x.is_zero()) throw std::invalid_argument("super3d needs x != 0");
  Algebra L = Algebra::zero(3);
  Scalar q = a / x;
  auto set_w = [&](int i, int j, const Scalar& coef) {
    L.c_at(i, j, 0) = coef * a;
    L.c_at(i, j, 1) = coef * x;
  };
  set_w(0, 0, Scalar(1));
  set_w(0, 1, -q);
  set_w(1, 0, -q);
  set_w(1, 1, q * q);
  set_w(2, 2, d / x);
  Matrix al(3, 3);
  al.at(0, 0) = Scalar(-1);
  al.at(1, 1) = Scalar(1);
  al.at(2, 2) = mu;
  L.alpha = al;
  Grading g;
  g.group = GradingGroup({2});
  g.degrees = {{0}, {0}, {1}};
  g.epsilon = Bicharacter::super_sign();
  L.grading = g;
  return L;
}

Algebra tensor_gg(const Matrix& alpha3) {
  if (alpha3.rows() != 3 || alpha3.cols() != 3)
    throw std::invalid_argument("tensor_gg expects a 3 x 3 map");
  Algebra L = Algebra::zero(9);
  auto t = [](int i, int j) { return tensor_index(3, i, j); };
  L.c_at(t(0, 2), t(0, 2), t(0, 0)) = Scalar(1);
  L.c_at(t(1, 2), t(0, 2), t(1, 0)) = Scalar(1);
  L.c_at(t(1, 2), t(1, 2), t(1, 1)) = Scalar(1);
  L.alpha = kronecker(alpha3, alpha3);
  return L;
}

Algebra tensor_gg() { return tensor_gg(Matrix::identity(3)); }

Algebra lie2d() {
  Algebra L = Algebra::zero(2);
  L.c_at(0, 1, 1) = Scalar(1);
  L.c_at(1, 0, 1) = Scalar(-1);
  return L;
}

Algebra abelian(int n) { return Algebra::zero(n); }

}  // namespace bihom
