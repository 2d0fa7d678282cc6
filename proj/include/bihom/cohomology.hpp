#ifndef BIHOM_COHOMOLOGY_HPP
#define BIHOM_COHOMOLOGY_HPP

#include "bihom/algebra.hpp"

namespace bihom {

/// Readings of the coboundary formula.  The displayed formula is ambiguous in
/// two places: whether the untouched slots of the first summand group carry
/// alpha, and whether the action terms use alpha^{n+k-1} beta^{m+k-1} or
/// alpha^{n+k} beta^{m+k}.
///   printed            - first group twists only the trailing slot, powers n+k-1
///   alpha_on_survivors - first group twists every surviving slot, powers n+k-1
///   power_shift        - like printed but with powers n+k
/// On the whole fixture corpus all three readings square to zero and cut out
/// the same cocycle spaces, so the literal reading is kept as the regression
/// default; the acceptance suite records the verdict per reading.
enum class DeltaReading { printed, alpha_on_survivors, power_shift };

constexpr DeltaReading kDefaultDeltaReading = DeltaReading::printed;

const char* delta_reading_name(DeltaReading r);

struct CochainSpaceBasis {
  int k = 0;
  int ambient_dim = 0;             // n^k * m
  std::vector<Cochain> basis;      // RREF-canonical basis cochains
  Matrix basis_rows;               // same data, one flat row per basis element
};

/// Basis of C^k_{(alpha,alphaV)}(L,V); for k = 0 the convention is
/// C^0 = {v : alphaV v = v}.
CochainSpaceBasis cochain_space(const Algebra& L, const Representation& V, int k);

/// delta^k_{n,m}(f) evaluated by the four-group formula.  Negative twist
/// powers (k = 0 at small n, m) require invertible structure maps.
Cochain coboundary(const Algebra& L, const Representation& V, const Cochain& f, int n, int m,
                   DeltaReading reading = kDefaultDeltaReading);

/// Matrix of delta^k_{n,m} between the cochain-space bases.
Matrix coboundary_matrix(const Algebra& L, const Representation& V, int k, int n, int m,
                         DeltaReading reading = kDefaultDeltaReading);

/// Asserts delta^k . delta^{k-1} = 0 on the cochain-space bases; on failure
/// reports the first nonzero entry.
CheckReport verify_complex(const Algebra& L, const Representation& V, int k, int n, int m,
                           DeltaReading reading = kDefaultDeltaReading);

struct CohomologyDims {
  int c = 0, z = 0, b = 0, h = 0;
};

/// Kernel/image ranks of the coboundary matrices; refuses to quotient when
/// the complex property fails at k.
CohomologyDims cohomology_dims(const Algebra& L, const Representation& V, int k, int n, int m,
                               DeltaReading reading = kDefaultDeltaReading);

/// Compares Z^1 with adjoint coefficients against the solver-side derivation
/// space for the same powers.  Z^1 constrains f alpha = alpha f only, so the
/// two can differ; the report carries both dimensions.
CheckReport one_cocycles_vs_derivations(const Algebra& L, int n, int m,
                                        DeltaReading reading = kDefaultDeltaReading);

Cochain cochain_sub(const Cochain& f, const Cochain& g);

bool is_cocycle(const Algebra& L, const Representation& V, const Cochain& f, int n, int m,
                DeltaReading reading = kDefaultDeltaReading);

/// Refuses (throws std::invalid_argument) unless delta^2 f = 0.
Algebra extension_from_cocycle(const Algebra& L, const Representation& V, const Cochain& f,
                               int n, int m, DeltaReading reading = kDefaultDeltaReading);

/// f in Im delta^1.
bool is_coboundary(const Algebra& L, const Representation& V, const Cochain& f, int n, int m,
                   DeltaReading reading = kDefaultDeltaReading);

/// f - g in Im delta^1.
bool cocycles_equivalent(const Algebra& L, const Representation& V, const Cochain& f,
                         const Cochain& g, int n, int m,
                         DeltaReading reading = kDefaultDeltaReading);

/// For f = delta^1 g: verifies that (x,v) -> (x, v + g(x)) is an equivalence
/// from the split extension onto the f-extension (bracket morphism,
/// intertwines both structure maps, fixes V and the projection).
CheckReport verify_coboundary_extension_equivalence(const Algebra& L, const Representation& V,
                                                    const Cochain& g, int n, int m,
                                                    DeltaReading reading = kDefaultDeltaReading);

}  // namespace bihom

#endif
