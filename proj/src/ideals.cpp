#include "bihom/ideals.hpp"

#include <stdexcept>

#include "bihom/axioms.hpp"

namespace bihom {

namespace {

bool stable_under(const Matrix& map, const Subspace& H) {
  for (int i = 0; i < H.dim(); ++i)
    if (!H.contains(map.apply(H.basis_vector(i)))) return false;
  return true;
}

// [A, B] <= C over basis vectors of A and B.
bool bracket_into(const Algebra& L, const Subspace& A, const Subspace& B, const Subspace& C) {
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j)
      if (!C.contains(bracket_eval(L, A.basis_vector(i), B.basis_vector(j)))) return false;
  return true;
}

}  // namespace

const char* ideal_kind_name(IdealKind k) {
  switch (k) {
    case IdealKind::subalgebra: return "subalgebra";
    case IdealKind::left_ideal: return "left_ideal";
    case IdealKind::right_ideal: return "right_ideal";
    case IdealKind::two_sided: return "two_sided";
  }
  return "?";
}

std::set<IdealKind> classify_subspace(const Algebra& L, const Subspace& H) {
  if (H.ambient_dim() != L.dim) throw std::invalid_argument("subspace ambient mismatch");
  std::set<IdealKind> kinds;
  if (!stable_under(L.alpha, H) || !stable_under(L.beta, H)) return kinds;
  Subspace full = Subspace::full(L.dim);
  bool sub = bracket_into(L, H, H, H);
  bool left = bracket_into(L, full, H, H);
  bool right = bracket_into(L, H, full, H);
  if (sub) kinds.insert(IdealKind::subalgebra);
  if (left) kinds.insert(IdealKind::left_ideal);
  if (right) kinds.insert(IdealKind::right_ideal);
  if (left && right) kinds.insert(IdealKind::two_sided);
  return kinds;
}

Subspace commutator_subspace(const Algebra& L, const Subspace& H, const Subspace& K) {
  if (H.ambient_dim() != L.dim || K.ambient_dim() != L.dim)
    throw std::invalid_argument("subspace ambient mismatch");
  std::vector<Vec> gens;
  for (int i = 0; i < H.dim(); ++i)
    for (int j = 0; j < K.dim(); ++j) {
      gens.push_back(bracket_eval(L, H.basis_vector(i), K.basis_vector(j)));
      gens.push_back(bracket_eval(L, K.basis_vector(j), H.basis_vector(i)));
    }
  if (gens.empty()) return Subspace(L.dim);
  return Subspace::from_vectors(L.dim, gens);
}

Subspace center(const Algebra& L) {
  int n = L.dim;
  // rows: for each (j, p), sum_i x_i c[i][j][p] = 0 and sum_i x_i c[j][i][p] = 0
  Matrix sys(2 * n * n, n);
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < n; ++i) {
        sys.at(j * n + p, i) = L.c_at(i, j, p);
        sys.at(n * n + j * n + p, i) = L.c_at(j, i, p);
      }
  return null_space(sys);
}

Subspace squared(const Algebra& L) {
  Subspace full = Subspace::full(L.dim);
  return commutator_subspace(L, full, full);
}

Subspace ideal_IL(const Algebra& L) {
  std::vector<Vec> gens;
  for (int i = 0; i < L.dim; ++i) gens.push_back(L.bracket_basis(i, i));
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      gens.push_back(L.bracket_basis(i, j) + L.bracket_basis(j, i));
  return Subspace::from_vectors(L.dim, gens);
}

Subspace ideal_IL_bruteforce(const Algebra& L) {
  // deterministic grid of vectors with small integer entries; the span of
  // [v,v] stabilizes long before the grid is exhausted
  Subspace span(L.dim);
  int misses = 0;
  long seed = 1;
  while (misses < 4 * L.dim * L.dim) {
    Vec v(L.dim);
    long s = seed++;
    for (int i = 0; i < L.dim; ++i) {
      v[i] = Scalar((s % 7) - 3);
      s /= 7;
    }
    Vec sq = bracket_eval(L, v, v);
    if (span.contains(sq)) {
      ++misses;
      continue;
    }
    std::vector<Vec> rows;
    for (int i = 0; i < span.dim(); ++i) rows.push_back(span.basis_vector(i));
    rows.push_back(sq);
    span = Subspace::from_vectors(L.dim, rows);
    misses = 0;
  }
  return span;
}

Algebra quotient_algebra(const Algebra& L, const Subspace& H) {
  auto kinds = classify_subspace(L, H);
  if (!kinds.count(IdealKind::two_sided))
    throw std::invalid_argument("quotient requires a two-sided, map-stable ideal");
  int n = L.dim, s = H.dim();
  // pivot columns of the RREF basis
  std::vector<bool> is_pivot(n, false);
  for (int rrow = 0; rrow < s; ++rrow)
    for (int c = 0; c < n; ++c)
      if (!H.basis().at(rrow, c).is_zero()) {
        is_pivot[c] = true;
        break;
      }
  std::vector<int> complement;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) complement.push_back(c);
  int q = int(complement.size());
  // change of basis: columns = H basis rows then complement unit vectors
  Matrix P(n, n);
  for (int col = 0; col < s; ++col)
    for (int row = 0; row < n; ++row) P.at(row, col) = H.basis().at(col, row);
  for (int col = 0; col < q; ++col) P.at(complement[col], s + col) = Scalar(1);
  Matrix Pinv = P.inverse();
  auto project = [&](const Vec& v) {
    Vec coords = Pinv.apply(v);
    Vec out(q);
    for (int i = 0; i < q; ++i) out[i] = coords[s + i];
    return out;
  };

  Algebra Q = Algebra::zero(q);
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v) {
      Vec img = project(L.bracket_basis(complement[u], complement[v]));
      for (int w = 0; w < q; ++w) Q.c_at(u, v, w) = img[w];
    }
  Matrix qa(q, q), qb(q, q);
  for (int v = 0; v < q; ++v) {
    Vec ai = project(L.alpha.col(complement[v]));
    Vec bi = project(L.beta.col(complement[v]));
    for (int w = 0; w < q; ++w) {
      qa.at(w, v) = ai[w];
      qb.at(w, v) = bi[w];
    }
  }
  Q.alpha = qa;
  Q.beta = qb;
  if (L.grading) {
    // grading descends when every H basis row is homogeneous
    bool homogeneous = true;
    for (int rrow = 0; rrow < s && homogeneous; ++rrow) {
      std::optional<GradingGroup::Element> deg;
      for (int c = 0; c < n; ++c) {
        if (H.basis().at(rrow, c).is_zero()) continue;
        if (!deg)
          deg = L.grading->degrees[c];
        else if (*deg != L.grading->degrees[c])
          homogeneous = false;
      }
    }
    if (homogeneous) {
      Grading g;
      g.group = L.grading->group;
      g.epsilon = L.grading->epsilon;
      for (int v = 0; v < q; ++v) g.degrees.push_back(L.grading->degrees[complement[v]]);
      Q.grading = g;
    }
  }
  return Q;
}

bool map_is_surjective(const Matrix& m) { return rref(m).second == m.rows(); }

CheckReport verify_ideal_lemma(const Algebra& L, const Subspace& H, const Subspace& K) {
  auto hk = classify_subspace(L, H);
  auto kk = classify_subspace(L, K);
  if (!hk.count(IdealKind::two_sided) || !kk.count(IdealKind::two_sided))
    throw std::invalid_argument("ideal lemma needs two-sided ideals");

  auto fail = [](const char* what) { return CheckReport::fail({what, {}, {}}); };

  // (a) H cap K and H + K are two-sided ideals
  if (!classify_subspace(L, subspace_intersect(H, K)).count(IdealKind::two_sided))
    return fail("(a) H cap K not two-sided");
  if (!classify_subspace(L, subspace_sum(H, K)).count(IdealKind::two_sided))
    return fail("(a) H + K not two-sided");

  // (b) [H,K] <= H cap K
  Subspace comm = commutator_subspace(L, H, K);
  Subspace meet = subspace_intersect(H, K);
  for (int i = 0; i < comm.dim(); ++i)
    if (!meet.contains(comm.basis_vector(i))) return fail("(b) [H,K] not inside H cap K");

  // (c) [H,K] is a two-sided ideal of H and of K
  if (!stable_under(L.alpha, comm) || !stable_under(L.beta, comm))
    return fail("(c) [H,K] not map-stable");
  Subspace full = Subspace::full(L.dim);
  auto two_sided_in = [&](const Subspace& ambient) {
    return bracket_into(L, ambient, comm, comm) && bracket_into(L, comm, ambient, comm);
  };
  if (!two_sided_in(H)) return fail("(c) [H,K] not two-sided in H");
  if (!two_sided_in(K)) return fail("(c) [H,K] not two-sided in K");

  // (d) alpha(L), beta(L) are subalgebras
  std::vector<Vec> acols, bcols;
  for (int i = 0; i < L.dim; ++i) {
    acols.push_back(L.alpha.col(i));
    bcols.push_back(L.beta.col(i));
  }
  if (!classify_subspace(L, Subspace::from_vectors(L.dim, acols)).count(IdealKind::subalgebra))
    return fail("(d) alpha(L) not a subalgebra");
  if (!classify_subspace(L, Subspace::from_vectors(L.dim, bcols)).count(IdealKind::subalgebra))
    return fail("(d) beta(L) not a subalgebra");

  // (e)/(f) only under the stated surjectivity hypotheses
  bool a_surj = map_is_surjective(L.alpha);
  bool b_surj = map_is_surjective(L.beta);
  bool left_alg = check_left_bihom_leibniz(L).passed;
  bool right_alg = check_right_bihom_leibniz(L).passed;
  if ((left_alg && b_surj) || (right_alg && a_surj)) {
    if (!bracket_into(L, full, comm, comm) && !bracket_into(L, comm, full, comm))
      return fail("(e) [H,K] not an ideal of L");
  }
  if (a_surj && b_surj && (left_alg || right_alg)) {
    if (!(bracket_into(L, full, comm, comm) && bracket_into(L, comm, full, comm)))
      return fail("(f) [H,K] not two-sided in L");
  }
  return CheckReport::pass();
}

}  // namespace bihom
