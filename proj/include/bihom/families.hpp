#ifndef BIHOM_FAMILIES_HPP
#define BIHOM_FAMILIES_HPP

#include "bihom/algebra.hpp"

namespace bihom {

/// The concrete 2-dimensional families of the left hom-Leibniz table, all with
/// alpha = diag(-1, 1) and beta = id.
Algebra table_case1(const Scalar& x, const Scalar& y);  // [e1,e1]=x e2, [e1,e2]=y e2
Algebra table_case2(const Scalar& c, const Scalar& d);  // [e2,e1]=c e1, [e2,e2]=d e1
Algebra table_case3(const Scalar& a, const Scalar& x);  // rank-one symmetric; needs x != 0
Algebra table_case4(const Scalar& b, const Scalar& y);  // [e1,e2]=-[e2,e1]=b e1+y e2

/// Same bracket tables with alpha = beta = id (the untwisted algebras).
Algebra table_case1_untwisted(const Scalar& x, const Scalar& y);
Algebra table_case3_untwisted(const Scalar& a, const Scalar& x);

/// 3-dimensional Z2-graded family (e1, e2 even, e3 odd) with the super sign
/// bicharacter and alpha = diag(-1, 1, mu); needs x != 0.
Algebra super3d(const Scalar& a, const Scalar& x, const Scalar& d, const Scalar& mu);

/// The 9-dimensional bracket on G (x) G with the three nonzero products
/// [x1(x)x3, x1(x)x3] = x1(x)x1 etc.; structure map `alpha3` (x) `alpha3`.
Algebra tensor_gg(const Matrix& alpha3);
Algebra tensor_gg();  // alpha3 = id

/// 2-dim nonabelian Lie algebra [e1,e2] = e2 = -[e2,e1], maps id.
Algebra lie2d();

Algebra abelian(int n);

/// Index of basis vector x_i (x) x_j in the tensor-square ordering.
inline int tensor_index(int n, int i, int j) { return i * n + j; }

}  // namespace bihom

#endif
