#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bihom/scalar.hpp"

using namespace bihom;

TEST_CASE("rational arithmetic is exact and canonical") {
  Scalar a(1, 3), b(2, 5);
  CHECK((a + b).str() == "11/15");
  CHECK((a * b).str() == "2/15");
  CHECK((a - a).is_zero());
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(-1, 2).str() == "-1/2");
  CHECK(Scalar(3, -6) == Scalar(-1, 2));  // canonical sign on the denominator
  CHECK(Scalar(7).inverse().str() == "1/7");
  CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("parse round-trips the canonical form") {
  for (const char* text : {"0", "5", "-7", "11/15", "-3/2"}) {
    CHECK(Scalar::parse(text).str() == text);
  }
  CHECK_THROWS(Scalar::parse("1.5"));
  CHECK_THROWS(Scalar::parse(""));
  CHECK_THROWS(Scalar::parse("z", 0));  // z-syntax needs cyclotomic mode
}

TEST_CASE("cyclotomic polynomials") {
  // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_degree(12) == 4);
}

TEST_CASE("roots of unity multiply exactly") {
  Scalar z = Scalar::root_of_unity(3, 1);
  Scalar z2 = z * z;
  CHECK(z2 == Scalar::root_of_unity(3, 2));
  // zeta_3^3 = 1, demoted to the rational 1
  CHECK(z * z2 == Scalar(1));
  CHECK((z * z2).is_rational());
  // 1 + z + z^2 = 0
  CHECK((Scalar(1) + z + z2).is_zero());
  // inverse of zeta is zeta^2
  CHECK(z.inverse() == z2);
  // mixing rationals with cyclotomics promotes
  CHECK((z + Scalar(1, 2)) - z == Scalar(1, 2));
  CHECK_THROWS(Scalar::root_of_unity(3, 1) + Scalar::root_of_unity(4, 1));
}

TEST_CASE("zeta_2 collapses to -1") {
  CHECK(Scalar::root_of_unity(2, 1) == Scalar(-1));
  CHECK(Scalar::root_of_unity(2, 1).is_rational());
}

TEST_CASE("cyclotomic parse and print") {
  Scalar z = Scalar::root_of_unity(5, 1);
  Scalar v = z * z + Scalar(1, 2) * z - Scalar(3);
  CHECK(v.str() == "z^2+1/2*z-3");
  CHECK(Scalar::parse(v.str(), 5) == v);
  CHECK(Scalar::parse("z^5", 5) == Scalar(1));
  // zeta_4^2 = -1
  CHECK(Scalar::parse("z^2", 4) == Scalar(-1));
}

TEST_CASE("cyclotomic field inverse") {
  // (1 + zeta_4)(1 - zeta_4)/2 = (1 - zeta_4^2)/2 = 1
  Scalar z = Scalar::root_of_unity(4, 1);
  Scalar a = Scalar(1) + z;
  CHECK(a * a.inverse() == Scalar(1));
  Scalar b = Scalar(2) * z + Scalar(3);
  CHECK((b / b) == Scalar(1));
}
