#ifndef BIHOM_CONSTRUCTIONS_HPP
#define BIHOM_CONSTRUCTIONS_HPP

#include <utility>

#include "bihom/algebra.hpp"

namespace bihom {

/// Builders producing new algebras from old ones: twists, tensor squares,
/// commutators, module-induced brackets and direct-sum extensions.  Every
/// builder checks its own preconditions and re-verifies the advertised axiom
/// set of its output, throwing std::invalid_argument respectively
/// std::logic_error on failure.

bool is_bracket_endomorphism(const Algebra& L, const Matrix& a);
bool maps_commute(const Matrix& a, const Matrix& b);
/// a([x,y]) = [a(x), y] = [x, a(y)] plus commutation with the structure maps.
bool in_centroid(const Algebra& L, const Matrix& a);
/// Degree-0 with respect to the grading (vacuously true when ungraded).
bool is_even_map(const Algebra& L, const Matrix& a);

/// [x,y]_a = [a(x), a(y)] with structure map a (and beta = id).
Algebra yau_twist_hom(const Algebra& L, const Matrix& a);

/// The Leibniz bracket [x(x)y, u(x)v] = [x,[u,v]](x)y + x(x)[y,[u,v]] on
/// G (x) G of a Lie algebra G.
Algebra lie_tensor_to_leibniz(const Algebra& G);

/// Twisted tensor-square bracket with structure map a (x) a; right
/// hom-Leibniz.
Algebra hom_lie_tensor_construction(const Algebra& G, const Matrix& a);

/// {x,y} = [a(x), b(y)] on a symmetric Leibniz algebra; the BiHom Yau twist
/// L_{(a,b)}.
Algebra bihom_yau_twist(const Algebra& L, const Matrix& a, const Matrix& b);

/// {x,y} = [beta(x), alpha(y)] with structure map alpha beta; hom-Leibniz.
Algebra bihom_to_hom_leibniz(const Algebra& L);

/// From an associative colour algebra: the twisted product mu(a x, b y) and
/// the commutator bracket mu(a x, b y) - mu(b y, a x).  `insert_epsilon`
/// switches the commutator to mu(a x, b y) - eps(x,y) mu(b y, a x); the
/// default follows the displayed (epsilon-free) formula.
std::pair<Algebra, Algebra> colour_assoc_to_bihom(const Algebra& A, const Matrix& a,
                                                  const Matrix& b,
                                                  bool insert_epsilon = false);

/// {x,y} = [b(x), a(y)] for commuting even centroid idempotents a, b of a
/// Leibniz colour algebra; structure maps become (a, b).
Algebra colour_centroid_idempotent_twist(const Algebra& L, const Matrix& a, const Matrix& b);

/// For commuting even centroid idempotents t, t1 of a BiHom-Leibniz colour
/// algebra: (same bracket, t alpha, t beta) and ([t1(x), y], t alpha, t beta).
std::pair<Algebra, Algebra> colour_centroid_double_twist(const Algebra& L, const Matrix& t,
                                                         const Matrix& t1);

/// Left hom-Leibniz (super)algebra [u,v]' = [phi(u), v]_V on the module of a
/// hom-Lie (super)algebra, for an even module map phi with
/// phi([x,v]_V) = [x, phi(v)] and phi beta_V = alpha phi.  The module's
/// twisting map is stored in alphaV.
Algebra module_to_left_hom_leibniz_super(const Representation& V, const Matrix& phi);

/// Direct-sum extension L (+) V with bracket
/// [(x,u),(y,v)] = ([x,y], [x,v]_V + [u,y]_V + f(x,y)) and maps
/// alpha (+) alphaV, beta (+) betaV.  The 2-cochain f is not required to be a
/// cocycle here; the B1 axioms of the result hold iff delta^2 f = 0.
Algebra extension_direct_sum(const Algebra& L, const Representation& V, const Cochain& f);

}  // namespace bihom

#endif
