#include "bihom/representations.hpp"

#include <functional>

namespace bihom {

namespace {

// Basis-indexed operator laws; each law yields a residual matrix on V.
struct RepCtx {
  const Representation& V;
  const Algebra& L;
  int n, m;
  std::vector<Matrix> lm, rm;        // l(e_i), r(e_i)
  std::vector<Vec> al, be;           // alpha e_i, beta e_i

  explicit RepCtx(const Representation& V_) : V(V_), L(V_.algebra), n(L.dim), m(V_.dim) {
    for (int i = 0; i < n; ++i) {
      lm.push_back(V.l_mat(i));
      rm.push_back(V.r_mat(i));
      al.push_back(L.alpha.col(i));
      be.push_back(L.beta.col(i));
    }
  }

  Matrix l_of(const Vec& x) const { return V.l_of(x); }
  Matrix r_of(const Vec& x) const { return V.r_of(x); }
  Vec B(int i, int j) const { return L.bracket_basis(i, j); }
};

CheckReport pair_matrix_law(const RepCtx& c, const char* name,
                            const std::function<Matrix(int, int)>& residual) {
  for (int x = 0; x < c.n; ++x)
    for (int y = 0; y < c.n; ++y) {
      Matrix res = residual(x, y);
      if (!res.is_zero())
        return CheckReport::fail({name, {x, y}, vec_row_major(res)});
    }
  return CheckReport::pass();
}

CheckReport single_matrix_law(const RepCtx& c, const char* name,
                              const std::function<Matrix(int)>& residual) {
  for (int x = 0; x < c.n; ++x) {
    Matrix res = residual(x);
    if (!res.is_zero()) return CheckReport::fail({name, {x}, vec_row_major(res)});
  }
  return CheckReport::pass();
}

CheckReport check_compat_preamble(const RepCtx& c, CompatReading reading) {
  const Matrix& aV = c.V.alphaV;
  const Matrix& bV = c.V.betaV;
  CheckReport r = single_matrix_law(c, "alphaV l(x) != l(alpha x) alphaV", [&](int x) {
    return aV * c.lm[x] - c.l_of(c.al[x]) * aV;
  });
  if (!r.passed) return r;
  r = single_matrix_law(c, "alphaV r(x) != r(alpha x) alphaV", [&](int x) {
    return aV * c.rm[x] - c.r_of(c.al[x]) * aV;
  });
  if (!r.passed) return r;
  auto inner = [&](int x) {
    return reading == CompatReading::beta_inside ? c.be[x] : c.al[x];
  };
  r = single_matrix_law(c, "betaV l(x) equivariance", [&](int x) {
    return bV * c.lm[x] - c.l_of(inner(x)) * bV;
  });
  if (!r.passed) return r;
  return single_matrix_law(c, "betaV r(x) equivariance", [&](int x) {
    return bV * c.rm[x] - c.r_of(inner(x)) * bV;
  });
}

CheckReport first_fail(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.passed) return r;
  return CheckReport::pass();
}

}  // namespace

CheckReport check_left_representation_B1(const Representation& V, CompatReading reading) {
  RepCtx c(V);
  const Matrix& aV = V.alphaV;
  const Matrix& bV = V.betaV;
  CheckReport pre = check_compat_preamble(c, reading);
  if (!pre.passed) return pre;
  // l([x, beta y]) aV = l(alpha x) l(beta y) bV - l(alpha y) l(beta x) bV
  CheckReport r1 = pair_matrix_law(c, "left rep law 1", [&](int x, int y) {
    Vec ex(c.n);
    ex[x] = Scalar(1);
    Vec xy = bracket_eval(c.L, ex, c.be[y]);
    return c.l_of(xy) * aV - c.l_of(c.al[x]) * c.l_of(c.be[y]) * bV +
           c.l_of(c.al[y]) * c.l_of(c.be[x]) * bV;
  });
  if (!r1.passed) return r1;
  // r(beta([x,y])) aV = l(alpha x) r(beta y) bV - r(alpha y) l(x) bV
  CheckReport r2 = pair_matrix_law(c, "left rep law 2", [&](int x, int y) {
    Vec bxy = c.L.beta.apply(c.B(x, y));
    return c.r_of(bxy) * aV - c.l_of(c.al[x]) * c.r_of(c.be[y]) * bV +
           c.r_of(c.al[y]) * c.lm[x] * bV;
  });
  if (!r2.passed) return r2;
  // r(beta([x,y])) aV = r(alpha y) r(beta x) + l(alpha x) r(beta y) bV
  return pair_matrix_law(c, "left rep law 3", [&](int x, int y) {
    Vec bxy = c.L.beta.apply(c.B(x, y));
    return c.r_of(bxy) * aV - c.r_of(c.al[y]) * c.r_of(c.be[x]) -
           c.l_of(c.al[x]) * c.r_of(c.be[y]) * bV;
  });
}

CheckReport check_right_representation_B1(const Representation& V, CompatReading reading) {
  RepCtx c(V);
  const Matrix& aV = V.alphaV;
  const Matrix& bV = V.betaV;
  CheckReport pre = check_compat_preamble(c, reading);
  if (!pre.passed) return pre;
  // l([x,y]) aV = l(alpha x) l(y) bV + r(alpha y) l(x)
  CheckReport r1 = pair_matrix_law(c, "right rep law 1", [&](int x, int y) {
    return c.l_of(c.B(x, y)) * aV - c.l_of(c.al[x]) * c.lm[y] * bV -
           c.r_of(c.al[y]) * c.lm[x];
  });
  if (!r1.passed) return r1;
  // l([x,y]) aV = r(alpha y) l(x) - l(alpha x) r(beta y)
  CheckReport r2 = pair_matrix_law(c, "right rep law 2", [&](int x, int y) {
    return c.l_of(c.B(x, y)) * aV - c.r_of(c.al[y]) * c.lm[x] +
           c.l_of(c.al[x]) * c.r_of(c.be[y]);
  });
  if (!r2.passed) return r2;
  // r([x, beta y]) aV = r(alpha y) r(x) - r(alpha x) r(y)
  return pair_matrix_law(c, "right rep law 3", [&](int x, int y) {
    Vec ex(c.n);
    ex[x] = Scalar(1);
    Vec xby = bracket_eval(c.L, ex, c.be[y]);
    return c.r_of(xby) * aV - c.r_of(c.al[y]) * c.rm[x] + c.r_of(c.al[x]) * c.rm[y];
  });
}

CheckReport check_symmetric_representation_B1(const Representation& V) {
  RepCtx c(V);
  const Matrix& aV = V.alphaV;
  const Matrix& bV = V.betaV;
  std::vector<CheckReport> rs;
  // equivariance block
  rs.push_back(single_matrix_law(c, "aV [x,v] equivariance", [&](int x) {
    return aV * c.lm[x] - c.l_of(c.al[x]) * aV;
  }));
  rs.push_back(single_matrix_law(c, "aV [v,x] equivariance", [&](int x) {
    return aV * c.rm[x] - c.r_of(c.al[x]) * aV;
  }));
  rs.push_back(single_matrix_law(c, "bV [x,v] equivariance", [&](int x) {
    return bV * c.lm[x] - c.l_of(c.be[x]) * bV;
  }));
  rs.push_back(single_matrix_law(c, "bV [v,x] equivariance", [&](int x) {
    return bV * c.rm[x] - c.r_of(c.be[x]) * bV;
  }));
  // [[v,x],alpha y] = [[v,y],alpha x] + [aV v, [x, beta y]]
  rs.push_back(pair_matrix_law(c, "mixed law 1", [&](int x, int y) {
    Vec ex(c.n);
    ex[x] = Scalar(1);
    Vec xby = bracket_eval(c.L, ex, c.be[y]);
    return c.r_of(c.al[y]) * c.rm[x] - c.r_of(c.al[x]) * c.rm[y] - c.r_of(xby) * aV;
  }));
  // [[x,y], aV v] = [[x,v], alpha y] + [alpha x, [y, bV v]]
  rs.push_back(pair_matrix_law(c, "mixed law 2", [&](int x, int y) {
    return c.l_of(c.B(x, y)) * aV - c.r_of(c.al[y]) * c.lm[x] -
           c.l_of(c.al[x]) * c.lm[y] * bV;
  }));
  // [[x,v], alpha y] = [[x,y], aV v] + [alpha x, [v, beta y]]
  rs.push_back(pair_matrix_law(c, "mixed law 3", [&](int x, int y) {
    return c.r_of(c.al[y]) * c.lm[x] - c.l_of(c.B(x, y)) * aV -
           c.l_of(c.al[x]) * c.r_of(c.be[y]);
  }));
  // [alpha x, [beta y, bV v]] = -[[y, bV v], alpha beta x]
  rs.push_back(pair_matrix_law(c, "sign law 1", [&](int x, int y) {
    Vec abx = c.L.alpha.apply(c.be[x]);
    return c.l_of(c.al[x]) * c.l_of(c.be[y]) * bV + c.r_of(abx) * c.lm[y] * bV;
  }));
  // [alpha x, [bV v, beta y]] = -[[v,y], alpha beta x]
  rs.push_back(pair_matrix_law(c, "sign law 2", [&](int x, int y) {
    Vec abx = c.L.alpha.apply(c.be[x]);
    return c.l_of(c.al[x]) * c.r_of(c.be[y]) * bV + c.r_of(abx) * c.rm[y];
  }));
  // [alpha x, [beta y, bV v]] = -[[y,v], alpha beta x]
  rs.push_back(pair_matrix_law(c, "sign law 3", [&](int x, int y) {
    Vec abx = c.L.alpha.apply(c.be[x]);
    return c.l_of(c.al[x]) * c.l_of(c.be[y]) * bV + c.r_of(abx) * c.lm[y];
  }));
  return first_fail(rs);
}

Representation adjoint_representation(const Algebra& L, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("twist powers must be non-negative");
  Matrix tw = L.alpha.power(n) * L.beta.power(m);
  Representation V = Representation::zero(L, L.dim);
  for (int i = 0; i < L.dim; ++i) {
    Vec twi = tw.col(i);
    for (int a = 0; a < L.dim; ++a) {
      Vec ea(L.dim);
      ea[a] = Scalar(1);
      Vec lv = bracket_eval(L, twi, ea);
      Vec rv = bracket_eval(L, ea, twi);
      for (int b = 0; b < L.dim; ++b) {
        V.l[(size_t(i) * L.dim + a) * L.dim + b] = lv[b];
        V.r[(size_t(i) * L.dim + a) * L.dim + b] = rv[b];
      }
    }
  }
  V.alphaV = L.alpha;
  V.betaV = L.beta;
  if (L.grading) V.degrees = L.grading->degrees;
  return V;
}

CheckReport check_rep_consequences(const Representation& V) {
  RepCtx c(V);
  std::vector<CheckReport> rs;
  if (check_left_representation_B1(V).passed) {
    // [[v, beta x], alpha y] = -[[x, bV v], alpha y]
    rs.push_back(pair_matrix_law(c, "left rep consequence", [&](int x, int y) {
      return c.r_of(c.al[y]) * c.r_of(c.be[x]) + c.r_of(c.al[y]) * c.lm[x] * V.betaV;
    }));
  }
  if (check_right_representation_B1(V).passed) {
    // [alpha x, [y, bV v]] = -[alpha x, [v, beta y]]
    rs.push_back(pair_matrix_law(c, "right rep consequence", [&](int x, int y) {
      return c.l_of(c.al[x]) * c.lm[y] * V.betaV + c.l_of(c.al[x]) * c.r_of(c.be[y]);
    }));
  }
  return first_fail(rs);
}

bool is_trivial_representation(const Representation& V) {
  RepCtx c(V);
  for (int x = 0; x < c.n; ++x) {
    if (!(c.lm[x] * V.betaV).is_zero()) return false;
    if (!c.r_of(c.be[x]).is_zero()) return false;
  }
  return true;
}

CheckReport check_hom_super_module(const Representation& V) {
  RepCtx c(V);
  const Algebra& L = V.algebra;
  for (int x = 0; x < c.n; ++x)
    for (int y = 0; y < c.n; ++y) {
      Scalar eps = epsilon_or_one(L, x, y);
      Matrix res = c.l_of(c.B(x, y)) * V.alphaV - c.l_of(c.al[x]) * c.lm[y] +
                   c.l_of(c.al[y]) * c.lm[x] * eps;
      if (!res.is_zero())
        return CheckReport::fail({"hom-super module law", {x, y}, vec_row_major(res)});
    }
  return CheckReport::pass();
}

}  // namespace bihom
