#include <doctest.h>

#include "amorph/cyclotomic.hpp"

using amorph::CyclotomicInt;

TEST_CASE("cyclotomic polynomials") {
  using V = std::vector<int64_t>;
  CHECK(CyclotomicInt::cyclotomic_polynomial(1) == V{-1, 1});
  CHECK(CyclotomicInt::cyclotomic_polynomial(2) == V{1, 1});
  CHECK(CyclotomicInt::cyclotomic_polynomial(3) == V{1, 1, 1});
  CHECK(CyclotomicInt::cyclotomic_polynomial(4) == V{1, 0, 1});
  CHECK(CyclotomicInt::cyclotomic_polynomial(6) == V{1, -1, 1});
  CHECK(CyclotomicInt::cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("zeta powers and integer detection") {
  const auto i = CyclotomicInt::zeta_pow(4, 1);
  CHECK((i * i) == CyclotomicInt::integer(4, -1));
  CHECK((i * i * i * i) == CyclotomicInt::integer(4, 1));
  CHECK(!i.is_integer());
  CHECK(CyclotomicInt::zeta_pow(4, 2).is_integer());
  CHECK(CyclotomicInt::zeta_pow(4, 2).integer_value() == -1);
  CHECK(CyclotomicInt::zeta_pow(2, 1).integer_value() == -1);

  // 1 + zeta_3 + zeta_3^2 = 0
  auto z = CyclotomicInt::integer(3, 1);
  z += CyclotomicInt::zeta_pow(3, 1);
  z += CyclotomicInt::zeta_pow(3, 2);
  CHECK(z.is_zero());
}

TEST_CASE("ring arithmetic at level 12") {
  const auto z = CyclotomicInt::zeta_pow(12, 1);
  CyclotomicInt acc = CyclotomicInt::integer(12, 1);
  for (int k = 0; k < 12; ++k) acc = acc * z;
  CHECK(acc == CyclotomicInt::integer(12, 1));
  // zeta_12^e * zeta_12^f = zeta_12^{e+f}
  for (uint64_t e = 0; e < 12; ++e)
    for (uint64_t f = 0; f < 12; ++f)
      CHECK(CyclotomicInt::zeta_pow(12, e) * CyclotomicInt::zeta_pow(12, f) ==
            CyclotomicInt::zeta_pow(12, e + f));
}

TEST_CASE("conjugation and norms") {
  const auto z = CyclotomicInt::zeta_pow(4, 1);
  CHECK(z.conjugate() == CyclotomicInt::zeta_pow(4, 3));
  // |a + b*i|^2 = a^2 + b^2
  auto w = CyclotomicInt::integer(4, 3) + z * 2;
  CHECK((w * w.conjugate()) == CyclotomicInt::integer(4, 13));
  // galois twist is multiplicative on powers
  for (uint64_t e = 0; e < 5; ++e)
    CHECK(CyclotomicInt::zeta_pow(5, e).galois(3) == CyclotomicInt::zeta_pow(5, 3 * e));
}

TEST_CASE("add_zeta_pow matches explicit addition") {
  CyclotomicInt acc(3);
  acc.add_zeta_pow(1);
  acc.add_zeta_pow(2);
  acc.add_zeta_pow(2);
  auto ref = CyclotomicInt::zeta_pow(3, 1) + CyclotomicInt::zeta_pow(3, 2) +
             CyclotomicInt::zeta_pow(3, 2);
  CHECK(acc == ref);
}

TEST_CASE("string rendering") {
  CHECK(CyclotomicInt::integer(4, -13).to_string() == "-13");
  CHECK(CyclotomicInt::zeta_pow(4, 1).to_string() == "(z)");
}
