#ifndef BIHOM_REPRESENTATIONS_HPP
#define BIHOM_REPRESENTATIONS_HPP

#include "bihom/algebra.hpp"

namespace bihom {

/// Reading of the beta_V compatibility lines in the representation
/// definition.  The printed text has beta_V l(x) = l(alpha(x)) beta_V, which
/// contradicts the symmetric-representation axiom list and rules out the
/// adjoint representations; beta_inside uses l(beta(x)) instead, matching the
/// axiom list, and is the default.
enum class CompatReading { beta_inside, printed_alpha_inside };

/// The three left-representation laws together with the compatibility
/// preamble; exhaustive over basis tuples.
CheckReport check_left_representation_B1(const Representation& V,
                                         CompatReading reading = CompatReading::beta_inside);
CheckReport check_right_representation_B1(const Representation& V,
                                          CompatReading reading = CompatReading::beta_inside);
/// The full symmetric-representation axiom list (equivariance, the three
/// mixed laws, the three sign-flip laws).
CheckReport check_symmetric_representation_B1(const Representation& V);

/// Adjoint representation with the twist on the acting element:
/// [x, v]_V = [a^n b^m(x), v] and [v, x]_V = [v, a^n b^m(x)].
Representation adjoint_representation(const Algebra& L, int n, int m);

/// Consequence identities of the one-sided representation definitions,
/// asserted only when the corresponding hypothesis check passes.
CheckReport check_rep_consequences(const Representation& V);

/// [x, beta_V(v)]_V = [v, beta(x)]_V = 0.
bool is_trivial_representation(const Representation& V);

/// Module law of a hom-Lie (super)algebra:
/// [[x,y], aV(v)] = [alpha(x),[y,v]] - eps(x,y) [alpha(y),[x,v]], where the
/// module's twisting map is stored in alphaV and only the left action is
/// used.
CheckReport check_hom_super_module(const Representation& V);

}  // namespace bihom

#endif
