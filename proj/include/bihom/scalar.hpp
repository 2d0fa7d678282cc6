#ifndef BIHOM_SCALAR_HPP
#define BIHOM_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bihom {

/// Exact element of the base field.  By default a rational number; when
/// `order() > 0` an element of the cyclotomic field Q(zeta_m), stored as a
/// coefficient vector of length deg Phi_m and always reduced modulo the m-th
/// cyclotomic polynomial.  Constant cyclotomic elements are demoted back to
/// rationals, so equality and is_zero() are canonical across modes.
class Scalar {
 public:
  Scalar() : rat_(0) {}
  Scalar(long n) : rat_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : rat_(q) { rat_.canonicalize(); }

  /// zeta_m^power as an exact element of Q(zeta_m).
  static Scalar root_of_unity(int m, long power);
  /// Element of Q(zeta_m) with the given coefficient vector (any length).
  static Scalar cyclotomic(int m, std::vector<mpq_class> coeffs);

  bool is_zero() const;
  bool is_rational() const { return order_ == 0; }
  int order() const { return order_; }
  const mpq_class& rational() const;  // throws unless is_rational()
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;  // throws on zero

  /// Canonical text form: "n", "n/d", or a polynomial in z for cyclotomic
  /// values ("z^2-1/2*z+3").
  std::string str() const;

  /// Parses the canonical text form.  `cyclo_order` enables the z-syntax;
  /// with the default 0 only plain fractions are accepted.
  static Scalar parse(const std::string& text, int cyclo_order = 0);

 private:
  void normalize();

  mpq_class rat_;
  int order_ = 0;
  std::vector<mpq_class> coeffs_;  // size deg Phi_m when order_ > 0
};

/// deg Phi_m (Euler phi of m).
int cyclotomic_degree(int m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

}  // namespace bihom

#endif
