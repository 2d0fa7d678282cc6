#include "bihom/constructions.hpp"

#include <functional>
#include <stdexcept>

#include "bihom/axioms.hpp"
#include "bihom/families.hpp"
#include "bihom/representations.hpp"

namespace bihom {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void reverify(const CheckReport& r, const char* what) {
  if (!r.passed) throw std::logic_error(std::string(what) + ": " + r.describe());
}

Algebra with_identity_maps(const Algebra& L) {
  Algebra plain = L;
  plain.alpha = Matrix::identity(L.dim);
  plain.beta = Matrix::identity(L.dim);
  return plain;
}

// left / right behaviour of the untwisted bracket
std::pair<bool, bool> leibniz_sides(const Algebra& L) {
  return {check_left_bihom_leibniz(L).passed, check_right_bihom_leibniz(L).passed};
}

Algebra rebracket(const Algebra& L, const std::function<Vec(int, int)>& bracket,
                  Matrix alpha, Matrix beta, bool keep_grading = true) {
  Algebra out = L;
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Vec v = bracket(i, j);
      for (int k = 0; k < L.dim; ++k) out.c_at(i, j, k) = v[k];
    }
  out.alpha = std::move(alpha);
  out.beta = std::move(beta);
  if (!keep_grading) out.grading.reset();
  return out;
}

}  // namespace

bool is_bracket_endomorphism(const Algebra& L, const Matrix& a) {
  if (a.rows() != L.dim || a.cols() != L.dim) return false;
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j)
      if (!vec_is_zero(a.apply(L.bracket_basis(i, j)) -
                       bracket_eval(L, a.col(i), a.col(j))))
        return false;
  return true;
}

bool maps_commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

bool in_centroid(const Algebra& L, const Matrix& a) {
  if (a.rows() != L.dim || a.cols() != L.dim) return false;
  if (!maps_commute(a, L.alpha) || !maps_commute(a, L.beta)) return false;
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Vec lhs = a.apply(L.bracket_basis(i, j));
      Vec ei(L.dim), ej(L.dim);
      ei[i] = Scalar(1);
      ej[j] = Scalar(1);
      if (!vec_is_zero(lhs - bracket_eval(L, a.col(i), ej))) return false;
      if (!vec_is_zero(lhs - bracket_eval(L, ei, a.col(j)))) return false;
    }
  return true;
}

bool is_even_map(const Algebra& L, const Matrix& a) {
  if (!L.grading) return true;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a.at(r, c).is_zero() && L.grading->degrees[r] != L.grading->degrees[c])
        return false;
  return true;
}

Algebra yau_twist_hom(const Algebra& L, const Matrix& a) {
  require(is_bracket_endomorphism(L, a), "yau_twist_hom: a is not a bracket endomorphism");
  require(is_even_map(L, a), "yau_twist_hom: a is not even");
  Algebra plain = with_identity_maps(L);
  auto [left, right] = leibniz_sides(plain);
  require(left || right, "yau_twist_hom: input is not a Leibniz algebra");
  Algebra out = rebracket(
      L, [&](int i, int j) { return bracket_eval(L, a.col(i), a.col(j)); }, a,
      Matrix::identity(L.dim));
  if (left) reverify(check_left_hom_leibniz(out), "yau_twist_hom: left check failed");
  if (right) reverify(check_right_hom_leibniz(out), "yau_twist_hom: right check failed");
  return out;
}

Algebra lie_tensor_to_leibniz(const Algebra& G) {
  return hom_lie_tensor_construction(G, Matrix::identity(G.dim));
}

Algebra hom_lie_tensor_construction(const Algebra& G, const Matrix& a) {
  Algebra plain = with_identity_maps(G);
  require(check_hom_lie(plain).passed, "tensor construction: G is not a Lie algebra");
  require(is_bracket_endomorphism(G, a), "tensor construction: a is not an endomorphism");
  int n = G.dim;
  Algebra out = Algebra::zero(n * n);
  // [x_i (x) x_j, x_k (x) x_l] = [a x_i, t] (x) a x_j + a x_i (x) [a x_j, t]
  // with t = [a x_k, a x_l]
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Vec t = bracket_eval(G, a.col(k), a.col(l));
      int v = tensor_index(n, k, l);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Vec first = bracket_eval(G, a.col(i), t);
          Vec second = bracket_eval(G, a.col(j), t);
          int u = tensor_index(n, i, j);
          Vec ai = a.col(i), aj = a.col(j);
          for (int s = 0; s < n; ++s)
            for (int w = 0; w < n; ++w) {
              Scalar contrib = first[s] * aj[w] + ai[s] * second[w];
              if (!contrib.is_zero()) out.c_at(u, v, tensor_index(n, s, w)) += contrib;
            }
        }
    }
  out.alpha = kronecker(a, a);
  reverify(check_right_hom_leibniz(out), "tensor construction: right check failed");
  return out;
}

Algebra bihom_yau_twist(const Algebra& L, const Matrix& a, const Matrix& b) {
  require(L.alpha.is_identity() && L.beta.is_identity(),
          "bihom_yau_twist: input must carry identity maps");
  require(check_symmetric_bihom_leibniz(L).passed,
          "bihom_yau_twist: input is not symmetric Leibniz");
  require(is_bracket_endomorphism(L, a) && is_bracket_endomorphism(L, b),
          "bihom_yau_twist: maps must be bracket endomorphisms");
  require(maps_commute(a, b), "bihom_yau_twist: maps must commute");
  require(is_even_map(L, a) && is_even_map(L, b), "bihom_yau_twist: maps must be even");
  Algebra out = rebracket(
      L, [&](int i, int j) { return bracket_eval(L, a.col(i), b.col(j)); }, a, b);
  reverify(check_symmetric_bihom_leibniz(out), "bihom_yau_twist: symmetric check failed");
  return out;
}

Algebra bihom_to_hom_leibniz(const Algebra& L) {
  auto [left, right] = leibniz_sides(L);
  require(left || right, "bihom_to_hom_leibniz: input is not BiHom-Leibniz");
  Algebra out = rebracket(
      L, [&](int i, int j) { return bracket_eval(L, L.beta.col(i), L.alpha.col(j)); },
      L.alpha * L.beta, Matrix::identity(L.dim));
  return out;
}

std::pair<Algebra, Algebra> colour_assoc_to_bihom(const Algebra& A, const Matrix& a,
                                                  const Matrix& b, bool insert_epsilon) {
  require(A.graded(), "colour_assoc_to_bihom: input must be graded");
  Algebra plain = with_identity_maps(A);
  reverify(check_bihom_associative_colour(plain),
           "colour_assoc_to_bihom: input is not associative");
  require(is_bracket_endomorphism(A, a) && is_bracket_endomorphism(A, b),
          "colour_assoc_to_bihom: maps must be product endomorphisms");
  require(maps_commute(a, b), "colour_assoc_to_bihom: maps must commute");
  require(is_even_map(A, a) && is_even_map(A, b), "colour_assoc_to_bihom: maps must be even");

  Algebra assoc = rebracket(
      A, [&](int i, int j) { return bracket_eval(A, a.col(i), b.col(j)); }, a, b);
  Algebra lie = rebracket(
      A,
      [&](int i, int j) {
        Vec pos = bracket_eval(A, a.col(i), b.col(j));
        Vec neg = bracket_eval(A, b.col(j), a.col(i));
        Scalar factor = insert_epsilon ? epsilon_of(A, i, j) : Scalar(1);
        return pos - factor * neg;
      },
      a, b);
  reverify(check_bihom_associative_colour(assoc),
           "colour_assoc_to_bihom: twisted product not BiHom-associative");
  reverify(check(lie, AxiomSet::bihom_lie_colour),
           "colour_assoc_to_bihom: commutator not BiHom-Lie colour");
  return {assoc, lie};
}

Algebra colour_centroid_idempotent_twist(const Algebra& L, const Matrix& a, const Matrix& b) {
  require(L.graded(), "centroid twist: input must be graded");
  require(L.alpha.is_identity() && L.beta.is_identity(),
          "centroid twist: input must carry identity maps");
  auto [left, right] = leibniz_sides(L);
  require(left || right, "centroid twist: input is not a Leibniz colour algebra");
  require(in_centroid(L, a) && in_centroid(L, b), "centroid twist: maps must be centroidal");
  require(is_even_map(L, a) && is_even_map(L, b), "centroid twist: maps must be even");
  require(a * a == a && b * b == b, "centroid twist: maps must be idempotent");
  require(maps_commute(a, b), "centroid twist: maps must commute");
  Algebra out = rebracket(
      L, [&](int i, int j) { return bracket_eval(L, b.col(i), a.col(j)); }, a, b);
  if (left && right)
    reverify(check(out, AxiomSet::symmetric_bihom_leibniz_colour),
             "centroid twist: symmetric colour check failed");
  else if (left)
    reverify(check(out, AxiomSet::left_bihom_leibniz_colour),
             "centroid twist: left colour check failed");
  else
    reverify(check(out, AxiomSet::right_bihom_leibniz_colour),
             "centroid twist: right colour check failed");
  return out;
}

std::pair<Algebra, Algebra> colour_centroid_double_twist(const Algebra& L, const Matrix& t,
                                                         const Matrix& t1) {
  require(L.graded(), "double twist: input must be graded");
  auto [left, right] = leibniz_sides(L);
  require(left || right, "double twist: input is not BiHom-Leibniz colour");
  require(in_centroid(L, t) && in_centroid(L, t1), "double twist: maps must be centroidal");
  require(is_even_map(L, t) && is_even_map(L, t1), "double twist: maps must be even");
  require(t * t == t && t1 * t1 == t1, "double twist: maps must be idempotent");
  require(maps_commute(t, t1), "double twist: maps must commute");

  Algebra first = L;
  first.alpha = t * L.alpha;
  first.beta = t * L.beta;
  Algebra second = rebracket(
      L,
      [&](int i, int j) {
        Vec ej(L.dim);
        ej[j] = Scalar(1);
        return bracket_eval(L, t1.col(i), ej);
      },
      t * L.alpha, t * L.beta);
  auto verify_side = [&](const Algebra& out, const char* what) {
    if (left && right)
      reverify(check(out, AxiomSet::symmetric_bihom_leibniz_colour), what);
    else if (left)
      reverify(check(out, AxiomSet::left_bihom_leibniz_colour), what);
    else
      reverify(check(out, AxiomSet::right_bihom_leibniz_colour), what);
  };
  verify_side(first, "double twist: first output failed");
  verify_side(second, "double twist: second output failed");
  return {first, second};
}

Algebra module_to_left_hom_leibniz_super(const Representation& V, const Matrix& phi) {
  const Algebra& G = V.algebra;
  require(phi.rows() == G.dim && phi.cols() == V.dim,
          "module twist: phi must map V into the algebra");
  require(check_hom_super_module(V).passed, "module twist: V is not a module");
  // phi even: degree of the G-row must match the degree of the V-column
  if (G.grading && V.degrees) {
    for (int r = 0; r < phi.rows(); ++r)
      for (int c = 0; c < phi.cols(); ++c)
        require(phi.at(r, c).is_zero() || G.grading->degrees[r] == (*V.degrees)[c],
                "module twist: phi is not even");
  }
  // phi([x,v]_V) = [x, phi(v)]
  for (int i = 0; i < G.dim; ++i) {
    Vec ei(G.dim);
    ei[i] = Scalar(1);
    for (int a = 0; a < V.dim; ++a) {
      Vec lv = V.l_mat(i).col(a);
      Vec lhs = phi.apply(lv);
      Vec rhs = bracket_eval(G, ei, phi.col(a));
      require(vec_is_zero(lhs - rhs), "module twist: phi([x,v]) != [x,phi(v)]");
    }
  }
  require(phi * V.alphaV == G.alpha * phi, "module twist: phi beta_V != alpha phi");

  Algebra out = Algebra::zero(V.dim);
  for (int i = 0; i < V.dim; ++i) {
    Matrix act = V.l_of(phi.col(i));  // v -> [phi(v_i), v]_V
    for (int j = 0; j < V.dim; ++j)
      for (int b = 0; b < V.dim; ++b) out.c_at(i, j, b) = act.at(b, j);
  }
  out.alpha = V.alphaV;
  out.beta = Matrix::identity(V.dim);
  if (G.grading && V.degrees) {
    Grading g;
    g.group = G.grading->group;
    g.epsilon = G.grading->epsilon;
    g.degrees = *V.degrees;
    out.grading = g;
  }
  reverify(check_left_hom_leibniz(out), "module twist: left hom-Leibniz check failed");
  return out;
}

Algebra extension_direct_sum(const Algebra& L, const Representation& V, const Cochain& f) {
  require(V.algebra.dim == L.dim && V.algebra.c == L.c && V.algebra.alpha == L.alpha &&
              V.algebra.beta == L.beta,
          "extension: representation is not over this algebra");
  require(f.k == 2 && f.n == L.dim && f.m == V.dim, "extension: cochain shape mismatch");
  require(check_symmetric_bihom_leibniz_B1(L).passed,
          "extension: base algebra is not symmetric B1");
  require(check_symmetric_representation_B1(V).passed,
          "extension: coefficients are not a symmetric representation");
  require(check_cochain_compatibility(L, V, f).passed,
          "extension: cochain violates the alpha-compatibility constraint");

  int n = L.dim, m = V.dim;
  Algebra out = Algebra::zero(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.c_at(i, j, k) = L.c_at(i, j, k);
      Vec fv = f.value_at({i, j});
      for (int b = 0; b < m; ++b) out.c_at(i, j, n + b) = fv[b];
    }
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        out.c_at(i, n + a, n + b) = V.l[(size_t(i) * m + a) * m + b];
        out.c_at(n + a, i, n + b) = V.r[(size_t(i) * m + a) * m + b];
      }
  Matrix alpha(n + m, n + m), beta(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      alpha.at(i, j) = L.alpha.at(i, j);
      beta.at(i, j) = L.beta.at(i, j);
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      alpha.at(n + a, n + b) = V.alphaV.at(a, b);
      beta.at(n + a, n + b) = V.betaV.at(a, b);
    }
  out.alpha = alpha;
  out.beta = beta;
  if (L.grading && V.degrees) {
    Grading g;
    g.group = L.grading->group;
    g.epsilon = L.grading->epsilon;
    g.degrees = L.grading->degrees;
    for (const auto& d : *V.degrees) g.degrees.push_back(d);
    out.grading = g;
  } else {
    out.grading.reset();
  }
  return out;
}

}  // namespace bihom
