#ifndef BIHOM_IDEALS_HPP
#define BIHOM_IDEALS_HPP

#include <set>

#include "bihom/algebra.hpp"

namespace bihom {

enum class IdealKind { subalgebra, left_ideal, right_ideal, two_sided };

const char* ideal_kind_name(IdealKind k);

/// Every kind H satisfies.  All kinds require alpha(H), beta(H) <= H;
/// left_ideal means [L,H] <= H, right_ideal means [H,L] <= H.
std::set<IdealKind> classify_subspace(const Algebra& L, const Subspace& H);

/// Span of the brackets [h,k] and [k,h] over basis vectors of H and K.
Subspace commutator_subspace(const Algebra& L, const Subspace& H, const Subspace& K);

/// {x : [x,y] = 0 = [y,x] for all y}, by a null-space computation.
Subspace center(const Algebra& L);

/// [L, L].
Subspace squared(const Algebra& L);

/// Span of {[v,v] : v in L}.  Computed by polarization: over a field of
/// characteristic 0 this equals span{[e_i,e_i], [e_i,e_j] + [e_j,e_i]}.
Subspace ideal_IL(const Algebra& L);

/// I_L by brute force: span stabilization of [v,v] over a deterministic grid
/// of rational vectors.  Test oracle for the polarization route.
Subspace ideal_IL_bruteforce(const Algebra& L);

/// Quotient by a two-sided, alpha/beta-stable ideal.  The complement basis is
/// the set of standard vectors at the non-pivot coordinates of H's RREF basis.
Algebra quotient_algebra(const Algebra& L, const Subspace& H);

/// Items (a)-(f) of the two-sided-ideal lemma; (e)/(f) are gated on their
/// surjectivity hypotheses and skipped as vacuous otherwise.
CheckReport verify_ideal_lemma(const Algebra& L, const Subspace& H, const Subspace& K);

bool map_is_surjective(const Matrix& m);

}  // namespace bihom

#endif
