#include "bihom/cohomology.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "bihom/constructions.hpp"
#include "bihom/representations.hpp"
#include "bihom/solvers.hpp"

namespace bihom {

namespace {

void for_each_tuple(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(k, 0);
  while (true) {
    fn(tuple);
    int s = k - 1;
    while (s >= 0 && ++tuple[s] == n) tuple[s--] = 0;
    if (s < 0) break;
  }
}

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

const char* delta_reading_name(DeltaReading r) {
  switch (r) {
    case DeltaReading::printed: return "printed";
    case DeltaReading::alpha_on_survivors: return "alpha_on_survivors";
    case DeltaReading::power_shift: return "power_shift";
  }
  return "?";
}

CochainSpaceBasis cochain_space(const Algebra& L, const Representation& V, int k) {
  if (k < 0) throw std::invalid_argument("cochain arity must be non-negative");
  int n = L.dim, m = V.dim;
  size_t ambient = size_t(m);
  for (int i = 0; i < k; ++i) ambient *= size_t(n);

  std::vector<Vec> rows;
  if (k == 0) {
    // alphaV v = v
    for (int b = 0; b < m; ++b) {
      Vec row(ambient);
      for (int b2 = 0; b2 < m; ++b2) row[b2] += V.alphaV.at(b, b2);
      row[b] -= Scalar(1);
      if (!vec_is_zero(row)) rows.push_back(std::move(row));
    }
  } else {
    // f(alpha e_{i_1}, ..., alpha e_{i_k}) - alphaV f(e_{i_1}, ..., e_{i_k}) = 0
    Cochain probe = Cochain::zero(k, n, m);
    for_each_tuple(k, n, [&](const std::vector<int>& T) {
      for (int b = 0; b < m; ++b) {
        Vec row(ambient);
        // expand the product of alpha columns over all source tuples
        std::vector<int> S(k, 0);
        while (true) {
          Scalar coef(1);
          bool zero = false;
          for (int s = 0; s < k; ++s) {
            const Scalar& a = L.alpha.at(S[s], T[s]);
            if (a.is_zero()) {
              zero = true;
              break;
            }
            coef *= a;
          }
          if (!zero) row[probe.flat_index(S, b)] += coef;
          int s = k - 1;
          while (s >= 0 && ++S[s] == n) S[s--] = 0;
          if (s < 0) break;
        }
        for (int b2 = 0; b2 < m; ++b2)
          if (!V.alphaV.at(b, b2).is_zero())
            row[probe.flat_index(T, b2)] -= V.alphaV.at(b, b2);
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    });
  }

  Subspace sol = rows.empty() ? Subspace::full(int(ambient))
                              : null_space(Matrix::from_rows(rows, int(ambient)));
  CochainSpaceBasis out;
  out.k = k;
  out.ambient_dim = int(ambient);
  out.basis_rows = sol.basis();
  for (int i = 0; i < sol.dim(); ++i) {
    Cochain f = Cochain::zero(k, n, m);
    f.values = sol.basis_vector(i);
    out.basis.push_back(std::move(f));
  }
  return out;
}

Cochain coboundary(const Algebra& L, const Representation& V, const Cochain& f, int n, int m,
                   DeltaReading reading) {
  CheckReport compat = check_cochain_compatibility(L, V, f);
  if (!compat.passed)
    throw std::invalid_argument("coboundary input violates alpha-compatibility: " +
                                compat.describe());
  const int k = f.k;
  const int nd = L.dim, md = V.dim;
  int power_n = n + k - 1, power_m = m + k - 1;
  if (reading == DeltaReading::power_shift) {
    power_n = n + k;
    power_m = m + k;
  }
  Matrix action_twist;
  try {
    action_twist = L.alpha.power(power_n) * L.beta.power(power_m);
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "coboundary twist power alpha^" + std::to_string(power_n) + " beta^" +
        std::to_string(power_m) + " is negative and a structure map is singular");
  }

  std::vector<Vec> alpha_col(nd), beta_col(nd), plain(nd);
  for (int i = 0; i < nd; ++i) {
    alpha_col[i] = L.alpha.col(i);
    beta_col[i] = L.beta.col(i);
    plain[i] = unit(nd, i);
  }

  Cochain out = Cochain::zero(k + 1, nd, md);
  for_each_tuple(k + 1, nd, [&](const std::vector<int>& X) {
    Vec acc(md);
    // group 1: sum_{0<t<=k} (-1)^{t+1} f([x_0,x_t], survivors)
    for (int t = 1; t <= k; ++t) {
      std::vector<Vec> args;
      args.push_back(L.bracket_basis(X[0], X[t]));
      for (int i = 1; i <= k; ++i) {
        if (i == t) continue;
        if (reading == DeltaReading::alpha_on_survivors)
          args.push_back(alpha_col[X[i]]);
        else
          args.push_back(i == k ? alpha_col[X[i]] : plain[X[i]]);
      }
      Vec term = f.eval(args);
      if (t % 2 == 1)
        acc = acc + term;
      else
        acc = acc - term;
    }
    // group 2: sum_{0<s<t<=k} (-1)^{t+1}
    //   f(alpha x_0, ..., alpha x_{s-1}, [x_s, beta x_t], alpha survivors)
    for (int s = 1; s < k; ++s)
      for (int t = s + 1; t <= k; ++t) {
        std::vector<Vec> args;
        args.push_back(alpha_col[X[0]]);
        for (int i = 1; i <= k; ++i) {
          if (i == t) continue;
          if (i == s)
            args.push_back(bracket_eval(L, plain[X[s]], beta_col[X[t]]));
          else
            args.push_back(alpha_col[X[i]]);
        }
        Vec term = f.eval(args);
        if (t % 2 == 1)
          acc = acc + term;
        else
          acc = acc - term;
      }
    // group 3: -[tw(x_0), f(x_1, beta x_2, ..., beta x_k)]_V
    {
      std::vector<Vec> args;
      for (int i = 1; i <= k; ++i) args.push_back(i == 1 ? plain[X[i]] : beta_col[X[i]]);
      Vec fv = f.eval(args);
      acc = acc - V.l_of(action_twist.col(X[0])).apply(fv);
    }
    // group 4: sum_{s=1..k} (-1)^s [f(x_0,...,^x_s,...,x_k), tw(x_s)]_V
    for (int s = 1; s <= k; ++s) {
      std::vector<Vec> args;
      for (int i = 0; i <= k; ++i)
        if (i != s) args.push_back(plain[X[i]]);
      Vec fv = f.eval(args);
      Vec term = V.r_of(action_twist.col(X[s])).apply(fv);
      if (s % 2 == 1)
        acc = acc - term;
      else
        acc = acc + term;
    }
    for (int b = 0; b < md; ++b) out.values[out.flat_index(X, b)] = acc[b];
  });
  return out;
}

Matrix coboundary_matrix(const Algebra& L, const Representation& V, int k, int n, int m,
                         DeltaReading reading) {
  CochainSpaceBasis src = cochain_space(L, V, k);
  CochainSpaceBasis dst = cochain_space(L, V, k + 1);
  Matrix M(int(dst.basis.size()), int(src.basis.size()));
  for (size_t j = 0; j < src.basis.size(); ++j) {
    Cochain img = coboundary(L, V, src.basis[j], n, m, reading);
    auto coords = solve(dst.basis_rows.transpose(), img.values);
    if (!coords)
      throw std::logic_error("coboundary image leaves the compatible cochain space");
    for (int i = 0; i < M.rows(); ++i) M.at(i, int(j)) = (*coords)[i];
  }
  return M;
}

CheckReport verify_complex(const Algebra& L, const Representation& V, int k, int n, int m,
                           DeltaReading reading) {
  if (k < 1) throw std::invalid_argument("verify_complex needs k >= 1");
  Matrix upper, lower;
  try {
    upper = coboundary_matrix(L, V, k, n, m, reading);
    lower = coboundary_matrix(L, V, k - 1, n, m, reading);
  } catch (const std::logic_error& e) {
    // delta does not even map the compatible space into itself
    return CheckReport::fail({e.what(), {}, {}});
  }
  Matrix prod = upper * lower;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j)
      if (!prod.at(i, j).is_zero())
        return CheckReport::fail({"delta^k delta^{k-1} != 0", {i, j}, {prod.at(i, j)}});
  return CheckReport::pass();
}

CohomologyDims cohomology_dims(const Algebra& L, const Representation& V, int k, int n, int m,
                               DeltaReading reading) {
  if (k < 0) throw std::invalid_argument("cohomology degree must be non-negative");
  if (k >= 1) {
    CheckReport complex_ok = verify_complex(L, V, k, n, m, reading);
    if (!complex_ok.passed)
      throw std::runtime_error("complex property fails; refusing to quotient: " +
                               complex_ok.describe());
  }
  CohomologyDims dims;
  CochainSpaceBasis ck = cochain_space(L, V, k);
  dims.c = int(ck.basis.size());
  Matrix upper = coboundary_matrix(L, V, k, n, m, reading);
  dims.z = dims.c - rref(upper).second;
  dims.b = k >= 1 ? rref(coboundary_matrix(L, V, k - 1, n, m, reading)).second : 0;
  dims.h = dims.z - dims.b;
  return dims;
}

CheckReport one_cocycles_vs_derivations(const Algebra& L, int n, int m, DeltaReading reading) {
  if (n < 0 || m < 0) throw std::invalid_argument("twist powers must be non-negative");
  Representation adj = adjoint_representation(L, 0, 0);
  CochainSpaceBasis c1 = cochain_space(L, adj, 1);
  Matrix d1 = coboundary_matrix(L, adj, 1, n, m, reading);
  Subspace kernel = null_space(d1);
  // map kernel coordinates back to endomorphism vectors
  std::vector<Vec> z1_vectors;
  for (int i = 0; i < kernel.dim(); ++i) {
    Vec coord = kernel.basis_vector(i);
    Vec flat(size_t(L.dim) * L.dim, Scalar(0));
    for (size_t j = 0; j < c1.basis.size(); ++j)
      if (!coord[j].is_zero())
        for (size_t t = 0; t < flat.size(); ++t)
          flat[t] += coord[j] * c1.basis[j].values[t];
    z1_vectors.push_back(std::move(flat));
  }
  Subspace z1 = z1_vectors.empty() ? Subspace(L.dim * L.dim)
                                   : Subspace::from_vectors(L.dim * L.dim, z1_vectors);
  Subspace der =
      generalized_derivation_space(L, {Scalar(1), Scalar(1), Scalar(1), n, m});
  if (z1 == der) return CheckReport::pass();
  std::ostringstream what;
  what << "Z^1 (dim " << z1.dim() << ", constraints: f([x,y]) = [f x, tw y] + [tw x, f y], "
       << "f alpha = alpha f) differs from Der (dim " << der.dim()
       << ", additionally f beta = beta f)";
  return CheckReport::fail({what.str(), {}, {}});
}

Cochain cochain_sub(const Cochain& f, const Cochain& g) {
  if (f.k != g.k || f.n != g.n || f.m != g.m)
    throw std::invalid_argument("cochain shape mismatch");
  Cochain out = f;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = f.values[i] - g.values[i];
  return out;
}

bool is_cocycle(const Algebra& L, const Representation& V, const Cochain& f, int n, int m,
                DeltaReading reading) {
  Cochain img = coboundary(L, V, f, n, m, reading);
  return vec_is_zero(img.values);
}

Algebra extension_from_cocycle(const Algebra& L, const Representation& V, const Cochain& f,
                               int n, int m, DeltaReading reading) {
  if (!is_cocycle(L, V, f, n, m, reading))
    throw std::invalid_argument("extension_from_cocycle: f is not a 2-cocycle");
  return extension_direct_sum(L, V, f);
}

bool is_coboundary(const Algebra& L, const Representation& V, const Cochain& f, int n, int m,
                   DeltaReading reading) {
  if (f.k < 1) throw std::invalid_argument("coboundary question needs arity >= 1");
  CheckReport compat = check_cochain_compatibility(L, V, f);
  if (!compat.passed)
    throw std::invalid_argument("is_coboundary: f outside the compatible cochain space");
  CochainSpaceBasis ck = cochain_space(L, V, f.k);
  auto coords = solve(ck.basis_rows.transpose(), f.values);
  if (!coords) throw std::logic_error("compatible cochain has no basis coordinates");
  Matrix d = coboundary_matrix(L, V, f.k - 1, n, m, reading);
  return solve(d, *coords).has_value();
}

bool cocycles_equivalent(const Algebra& L, const Representation& V, const Cochain& f,
                         const Cochain& g, int n, int m, DeltaReading reading) {
  return is_coboundary(L, V, cochain_sub(f, g), n, m, reading);
}

CheckReport verify_coboundary_extension_equivalence(const Algebra& L, const Representation& V,
                                                    const Cochain& g, int n, int m,
                                                    DeltaReading reading) {
  if (g.k != 1) throw std::invalid_argument("equivalence check needs a 1-cochain");
  Cochain f = coboundary(L, V, g, n, m, reading);
  Algebra split = extension_direct_sum(L, V, Cochain::zero(2, L.dim, V.dim));
  Algebra twisted = extension_direct_sum(L, V, f);
  int nd = L.dim, md = V.dim, total = nd + md;
  Matrix phi = Matrix::identity(total);
  for (int i = 0; i < nd; ++i) {
    Vec gi = g.value_at({i});
    for (int b = 0; b < md; ++b) phi.at(nd + b, i) = gi[b];
  }
  if (phi * split.alpha != twisted.alpha * phi)
    return CheckReport::fail({"equivalence map does not intertwine alpha", {}, {}});
  if (phi * split.beta != twisted.beta * phi)
    return CheckReport::fail({"equivalence map does not intertwine beta", {}, {}});
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      Vec lhs = phi.apply(split.bracket_basis(i, j));
      Vec rhs = bracket_eval(twisted, phi.col(i), phi.col(j));
      if (!vec_is_zero(lhs - rhs))
        return CheckReport::fail({"equivalence map is not a bracket morphism", {i, j},
                                  lhs - rhs});
    }
  return CheckReport::pass();
}

}  // namespace bihom
