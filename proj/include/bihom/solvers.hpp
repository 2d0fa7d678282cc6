#ifndef BIHOM_SOLVERS_HPP
#define BIHOM_SOLVERS_HPP

#include <array>
#include <optional>

#include "bihom/algebra.hpp"
#include "bihom/parallel.hpp"

namespace bihom {

/// Parameters of a (lambda,mu,gamma)-alpha^k beta^l derivation.
struct DerivationSpec {
  Scalar lambda{1}, mu{1}, gamma{1};
  int k = 0, l = 0;
};

/// Omega = {f : f alpha = alpha f, f beta = beta f}, as a subspace of End(L)
/// in row-major vec coordinates (dimension n^2).
Subspace omega_space(const Algebra& L);

/// {d in Omega : lambda d([x,y]) = mu [d(x), a^k b^l(y)]
///                              + gamma eps(|d|,|x|) [a^k b^l(x), d(y)]},
/// solved per degree-homogeneous block of End(L); eps == 1 when ungraded.
Subspace generalized_derivation_space(const Algebra& L, const DerivationSpec& spec,
                                      ExecMode mode = default_exec_mode());

/// (1,1,0)-space cap (1,0,1)-space.
Subspace centroid_space(const Algebra& L, int k, int l, ExecMode mode = default_exec_mode());
/// (0,1,-1)-space.
Subspace quasi_centroid_space(const Algebra& L, int k, int l,
                              ExecMode mode = default_exec_mode());
/// {d in Omega : d([x,y]) = 0, [d(x), a^k b^l(y)] = 0, [a^k b^l(x), d(y)] = 0}.
Subspace central_derivation_space(const Algebra& L, int k, int l,
                                  ExecMode mode = default_exec_mode());
/// Whether the printed intersection (0,1,-1) cap (1,1,-1) coincides with the
/// three-vanishing-conditions space on this algebra.
bool central_printed_intersection_matches(const Algebra& L, int k, int l,
                                          ExecMode mode = default_exec_mode());

/// Same defining equation as generalized_derivation_space but quantified only
/// over pairs (basis vector, RREF basis vector of L^2).
Subspace ider_space(const Algebra& L, const DerivationSpec& spec,
                    ExecMode mode = default_exec_mode());

/// The seven-case classification of IDer spaces over a grid of
/// (lambda, mu, gamma) triples.  Requires a symmetric BiHom-Leibniz algebra
/// with surjective maps; otherwise vacuously passes.  The degenerate triple
/// (0,0,0) is skipped.
CheckReport verify_ider_classification(const Algebra& L, int k, int l,
                                       const std::vector<std::array<Scalar, 3>>& grid,
                                       ExecMode mode = default_exec_mode());

/// ad_{k,l}(a): x -> [a, a^k b^l(x)] and Ad_{k,l}(a): x -> [a^k b^l(x), a].
std::pair<Matrix, Matrix> inner_maps(const Algebra& L, const Vec& a, int k, int l);

/// Items (i)-(iv) of the centroid lemma, asserted over all pairs of basis
/// elements of Der_{a^k} and C_{a^l}.
CheckReport verify_super_centroid_lemma(const Algebra& L, int k, int l,
                                        ExecMode mode = default_exec_mode());

/// Degree of a homogeneous endomorphism in the End(L) grading; nullopt for
/// the zero map or an ungraded algebra.
std::optional<GradingGroup::Element> end_degree(const Algebra& L, const Matrix& f);

}  // namespace bihom

#endif
