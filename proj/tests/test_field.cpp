#include <doctest.h>

#include <stdexcept>

#include "amorph/field.hpp"

using namespace amorph;

TEST_CASE("F4 arithmetic: alpha * alpha = alpha^2, alpha^3 = 1") {
  const Field f4 = Field::extension(2, 2);
  CHECK(f4.order() == 4);
  const FieldElement alpha = f4.generator();
  CHECK(alpha.rank == 2);  // x in the polynomial basis
  const FieldElement alpha2 = f4.mul(alpha, alpha);
  CHECK(alpha2 == f4.add(alpha, f4.one()));  // alpha^2 = alpha + 1
  CHECK(f4.mul(alpha2, alpha) == f4.one());  // alpha^3 = 1
  for (uint64_t r = 0; r < 4; ++r) CHECK(f4.mul(f4.element(r), f4.one()) == f4.element(r));
}

TEST_CASE("inverses and pow") {
  const Field f9 = Field::extension(3, 2);
  for (uint64_t r = 1; r < f9.order(); ++r) {
    const FieldElement x = f9.element(r);
    CHECK(f9.mul(x, f9.inv(x)) == f9.one());
  }
  CHECK(f9.pow(f9.zero(), 0) == f9.one());
  CHECK(f9.pow(f9.zero(), 5) == f9.zero());
  CHECK_THROWS_AS(f9.inv(f9.zero()), std::domain_error);
  // generator has full order 8
  const FieldElement g = f9.generator();
  for (uint64_t e = 1; e < 8; ++e) CHECK(f9.pow(g, e) != f9.one());
  CHECK(f9.pow(g, 8) == f9.one());
}

TEST_CASE("builtin moduli validate; bad modulus rejected") {
  for (auto [p, s] : {std::pair{2u, 3u}, {2u, 4u}, {2u, 6u}, {2u, 8u},
                      {3u, 3u}, {3u, 4u}, {5u, 2u}}) {
    const Field f = Field::extension(p, s);
    CHECK(f.characteristic() == p);
    CHECK(f.degree() == s);
  }
  // x^2 + 1 is reducible over F_2
  CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::with_modulus(4, {1, 1, 1}), std::invalid_argument);
  // a non-builtin degree still constructs deterministically
  const Field f49 = Field::extension(7, 2);
  CHECK(f49.order() == 49);
  CHECK(f49.mul(f49.generator(), f49.inv(f49.generator())) == f49.one());
}

TEST_CASE("Frobenius is additive and fixes exactly the prime subfield") {
  for (auto [p, s] : {std::pair{2u, 4u}, {3u, 4u}, {5u, 2u}, {3u, 3u}}) {
    const Field f = Field::extension(p, s);
    for (uint64_t x = 0; x < f.order(); ++x) {
      const FieldElement fx = f.pow(f.element(x), p);
      for (uint64_t y = 0; y < f.order(); ++y) {
        if ((x ^ y) & 1) continue;  // thin out the quadratic loop a little
        CHECK(f.pow(f.add(f.element(x), f.element(y)), p) ==
              f.add(fx, f.pow(f.element(y), p)));
      }
      const bool fixed = fx == f.element(x);
      const bool scalar = x < p;
      CHECK(fixed == scalar);
    }
  }
}

TEST_CASE("absolute trace: F4 -> F2 value of alpha is 1") {
  const Field f4 = Field::extension(2, 2);
  CHECK(f4.absolute_trace(f4.zero()) == 0);
  CHECK(f4.absolute_trace(f4.one()) == 0);  // 1 + 1 = 0
  CHECK(f4.absolute_trace(f4.generator()) == 1);
}

TEST_CASE("subfield trace: onto with equal fibers, transitive through chains") {
  const Field f16 = Field::extension(2, 4);
  const Field f4 = Field::extension(2, 2);
  const SubfieldEmbedding emb(f16, f4);
  CHECK(emb.extension_degree() == 2);
  CHECK(emb.trace(f16.zero()) == f4.zero());

  std::vector<uint64_t> fiber(4, 0);
  for (uint64_t x = 0; x < 16; ++x) ++fiber[emb.trace(f16.element(x)).rank];
  for (uint64_t c : fiber) CHECK(c == 4);  // onto, fibers of size q/q0

  // tr_{16/4} then tr_{4/2} equals tr_{16/2} on all 16 elements
  for (uint64_t x = 0; x < 16; ++x) {
    const FieldElement mid = emb.trace(f16.element(x));
    CHECK(f4.absolute_trace(mid) == f16.absolute_trace(f16.element(x)));
  }

  // trace is additive
  for (uint64_t x = 0; x < 16; ++x)
    for (uint64_t y = 0; y < 16; ++y)
      CHECK(emb.trace(f16.add(f16.element(x), f16.element(y))) ==
            f4.add(emb.trace(f16.element(x)), emb.trace(f16.element(y))));
}

TEST_CASE("embedding is a ring homomorphism") {
  const Field f81 = Field::extension(3, 4);
  const Field f9 = Field::extension(3, 2);
  const SubfieldEmbedding emb(f81, f9);
  for (uint64_t x = 0; x < 9; ++x)
    for (uint64_t y = 0; y < 9; ++y) {
      const FieldElement ex = emb.embed(f9.element(x)), ey = emb.embed(f9.element(y));
      CHECK(emb.embed(f9.add(f9.element(x), f9.element(y))) == f81.add(ex, ey));
      CHECK(emb.embed(f9.mul(f9.element(x), f9.element(y))) == f81.mul(ex, ey));
    }
  // pull_back inverts embed
  for (uint64_t x = 0; x < 9; ++x)
    CHECK(emb.pull_back(emb.embed(f9.element(x))) == f9.element(x));

  // the trace onto F_9 hits every value 81/9 = 9 times
  std::vector<uint64_t> fiber(9, 0);
  for (uint64_t x = 0; x < 81; ++x) ++fiber[emb.trace(f81.element(x)).rank];
  for (uint64_t c : fiber) CHECK(c == 9);
}

TEST_CASE("decompose/compose split F_q over the subfield basis") {
  const Field f16 = Field::extension(2, 4);
  const Field f4 = Field::extension(2, 2);
  const SubfieldEmbedding emb(f16, f4);
  for (uint64_t y = 0; y < 16; ++y) {
    const auto c = emb.decompose(f16.element(y));
    REQUIRE(c.size() == 2);
    CHECK(emb.compose(c) == f16.element(y));
  }
}

TEST_CASE("characters via trace match group characters (Lemma-style identity)") {
  for (auto [p, s] : {std::pair{2u, 2u}, {3u, 2u}}) {
    const Field f = Field::extension(p, s);
    const GroupSpec g = additive_group(f);
    // for every w there is exactly one matching group-character label
    for (uint64_t w = 0; w < f.order(); ++w) {
      uint64_t matches = 0;
      for (uint64_t a = 0; a < g.order(); ++a) {
        bool same = true;
        for (uint64_t x = 0; x < f.order() && same; ++x) {
          const uint32_t tr = f.absolute_trace(f.mul(f.element(w), f.element(x)));
          const auto lhs = CyclotomicInt::zeta_pow(g.exponent(), tr * (g.exponent() / p));
          same = lhs == character_value(g, g.unrank(a), as_group_element(f, f.element(x)));
        }
        matches += same ? 1 : 0;
      }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("trace-zero sets from generator powers (q = 2, 3)") {
  // q = 2: the kernel of tr_{4/2} is {0, 1}
  const Field f4 = Field::extension(2, 2);
  const auto z2 = trace_zero_elements(f4);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0] == f4.zero());
  CHECK(z2[1] == f4.one());

  // q = 3: {0, g^2, g^6} in F_9, and nothing else has trace zero
  const Field f9 = Field::extension(3, 2);
  const auto z3 = trace_zero_elements(f9);
  REQUIRE(z3.size() == 3);
  const Field f3 = Field::prime(3);
  const SubfieldEmbedding emb(f9, f3);
  std::vector<uint8_t> in_set(9, 0);
  for (FieldElement x : z3) {
    CHECK(emb.trace(x) == f3.zero());
    in_set[x.rank] = 1;
  }
  CHECK(z3[1] == f9.exp(2));
  CHECK(z3[2] == f9.exp(6));
  for (uint64_t x = 0; x < 9; ++x)
    CHECK((emb.trace(f9.element(x)) == f3.zero()) == (in_set[x] == 1));
}

TEST_CASE("field vectors as group elements") {
  const Field f4 = Field::extension(2, 2);
  // additive isomorphism, exhaustively over F_4 x F_4
  const GroupSpec g = additive_group(f4);
  for (uint64_t x = 0; x < 4; ++x)
    for (uint64_t y = 0; y < 4; ++y)
      CHECK(as_group_element(f4, f4.add(f4.element(x), f4.element(y))) ==
            g.add(as_group_element(f4, f4.element(x)), as_group_element(f4, f4.element(y))));
  CHECK(as_group_element(f4, f4.zero()) == g.identity());

  // F_4^4 <-> Z_2^8 round-trip, rank-aligned
  const GroupSpec g8 = vector_group(f4, 4);
  CHECK(g8.order() == 256);
  for (uint64_t n = 0; n < 256; ++n) {
    const auto v = vector_from_group(f4, g8.unrank(n));
    REQUIRE(v.size() == 4);
    CHECK(g8.rank(as_group_element(f4, v)) == n);
  }
}
