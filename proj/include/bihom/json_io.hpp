#ifndef BIHOM_JSON_IO_HPP
#define BIHOM_JSON_IO_HPP

#include <string>

#include "bihom/algebra.hpp"

namespace bihom {

/// Canonical JSON interchange format.
///
/// Algebra files:
///   dim      : int
///   c        : list of [i, j, k, "num/den"] quadruples, 0-based, zeros omitted,
///              sorted by (i, j, k)
///   alpha    : row-major list of dim^2 fraction strings
///   beta     : row-major list of dim^2 fraction strings
///   grading  : optional { moduli: [int], degrees: [[int]],
///              epsilon: [[a-tuple, b-tuple, "num/den"], ...] }
///
/// Representation files additionally carry dim (module), l, r (lists of
/// [i, a, b, "num/den"]: coefficient of v_b in [e_i, v_a]_V resp. [v_a, e_i]_V),
/// alphaV, betaV, and optional module degrees; the base algebra is embedded
/// under "algebra".
///
/// All scalars are exact fraction strings; no floating point anywhere.
/// save(load(file)) is byte-identical for canonical files.

std::string algebra_to_json(const Algebra& L);
Algebra algebra_from_json(const std::string& text, int cyclo_order = 0);

std::string representation_to_json(const Representation& V);
Representation representation_from_json(const std::string& text, int cyclo_order = 0);

Algebra load_algebra_file(const std::string& path, int cyclo_order = 0);
void save_algebra_file(const std::string& path, const Algebra& L);
Representation load_representation_file(const std::string& path, int cyclo_order = 0);
void save_representation_file(const std::string& path, const Representation& V);

}  // namespace bihom

#endif
