#include <doctest.h>

#include <random>

#include "amorph/galois_ring.hpp"

using namespace amorph;
using namespace amorph::gr4;

TEST_CASE("ring arithmetic basics") {
  CHECK(mul(xi, xi) == RingElement{3, 3});  // xi^2 = -xi - 1
  CHECK(mul(scalar(2), scalar(2)) == zero);
  for (uint32_t r = 0; r < 16; ++r) {
    const RingElement x = unrank(r);
    CHECK(mul(one, x) == x);
    CHECK(add(x, neg(x)) == zero);
    CHECK(rank(unrank(r)) == r);
  }
  // associativity and distributivity, exhaustive on triples mod thinning
  for (uint32_t a = 0; a < 16; ++a)
    for (uint32_t b = 0; b < 16; ++b) {
      CHECK(mul(unrank(a), unrank(b)) == mul(unrank(b), unrank(a)));
      for (uint32_t c = 0; c < 16; c += 3) {
        CHECK(mul(mul(unrank(a), unrank(b)), unrank(c)) ==
              mul(unrank(a), mul(unrank(b), unrank(c))));
        CHECK(mul(unrank(a), add(unrank(b), unrank(c))) ==
              add(mul(unrank(a), unrank(b)), mul(unrank(a), unrank(c))));
      }
    }
}

TEST_CASE("pi reduction and the Teichmuller system") {
  const Field& f4 = residue_field();
  CHECK(pi(scalar(2)) == f4.zero());
  CHECK(pi(xi) == f4.generator());  // pi(xi) = alpha
  // pi is a ring homomorphism
  for (uint32_t a = 0; a < 16; ++a)
    for (uint32_t b = 0; b < 16; ++b) {
      CHECK(pi(add(unrank(a), unrank(b))) == f4.add(pi(unrank(a)), pi(unrank(b))));
      CHECK(pi(mul(unrank(a), unrank(b))) == f4.mul(pi(unrank(a)), pi(unrank(b))));
    }
  // pi restricted to T is a bijection onto F_4, and T covers the cosets of 2R
  const auto& t = teichmuller();
  CHECK(t[0] == zero);
  CHECK(t[1] == one);
  CHECK(t[2] == xi);
  CHECK(t[3] == mul(xi, xi));
  std::vector<uint8_t> seen(4, 0);
  for (const RingElement& x : t) seen[pi(x).rank] = 1;
  for (uint8_t s : seen) CHECK(s == 1);
  // xi^3 reduces compatibly: pi(xi^3) = alpha^3 = 1
  CHECK(pi(mul(mul(xi, xi), xi)) == f4.one());
}

TEST_CASE("2-adic decomposition is a bijection with reassembly") {
  std::vector<uint8_t> pair_seen(16, 0);
  for (uint32_t r = 0; r < 16; ++r) {
    const RingElement b = unrank(r);
    const auto [b1, b2] = two_adic_decompose(b);
    CHECK(add(b1, mul(scalar(2), b2)) == b);
    uint32_t t1 = 0, t2 = 0;
    for (uint32_t k = 0; k < 4; ++k) {
      if (teichmuller()[k] == b1) t1 = k;
      if (teichmuller()[k] == b2) t2 = k;
    }
    const uint32_t key = t1 * 4 + t2;
    CHECK(pair_seen[key] == 0);
    pair_seen[key] = 1;
  }
  CHECK(two_adic_decompose(zero) == std::pair{zero, zero});
  CHECK(two_adic_decompose(scalar(2)) == std::pair{zero, one});
}

TEST_CASE("Frobenius: involutive ring automorphism") {
  CHECK(frobenius(zero) == zero);
  CHECK(frobenius(one) == one);
  for (uint32_t a = 0; a < 16; ++a) {
    CHECK(frobenius(frobenius(unrank(a))) == unrank(a));
    for (uint32_t b = 0; b < 16; ++b) {
      CHECK(frobenius(add(unrank(a), unrank(b))) ==
            add(frobenius(unrank(a)), frobenius(unrank(b))));
      CHECK(frobenius(mul(unrank(a), unrank(b))) ==
            mul(frobenius(unrank(a)), frobenius(unrank(b))));
    }
  }
}

TEST_CASE("trace to Z_4 and the reduction identity tr(pi(x)) = pi(Tr(x))") {
  const Field& f4 = residue_field();
  CHECK(trace(zero) == 0);
  for (uint32_t r = 0; r < 16; ++r) {
    const RingElement x = unrank(r);
    CHECK(trace(mul(scalar(2), x)) == (2 * trace(x)) % 4);
    // Eq: the field trace of pi(x) equals Tr(x) reduced mod 2
    CHECK(f4.absolute_trace(pi(x)) == trace(x) % 2);
  }
}

TEST_CASE("lift F and its inverse") {
  const Field& f4 = residue_field();
  // all-zero vector -> (0; 0, 0)
  std::vector<FieldElement> zerov(4, f4.zero());
  auto lz = lift(zerov);
  CHECK(lz.ring == zero);
  for (FieldElement x : lz.rest) CHECK(x == f4.zero());

  // (alpha, 1, 0, 0) -> (xi + 2*1; 0, 0)
  std::vector<FieldElement> v = {f4.generator(), f4.one(), f4.zero(), f4.zero()};
  CHECK(lift(v).ring == add(xi, scalar(2)));

  // round-trip over all 256 vectors of F_4^4
  for (uint64_t n = 0; n < 256; ++n) {
    std::vector<FieldElement> x(4);
    uint64_t t = n;
    for (int i = 0; i < 4; ++i) {
      x[i] = f4.element(t % 4);
      t /= 4;
    }
    CHECK(unlift(lift(x)) == x);
  }
}

TEST_CASE("ring characters") {
  // beta = 0: principal
  for (uint32_t r = 0; r < 16; ++r)
    CHECK(ring_character(zero, unrank(r)).integer_value() == 1);
  // beta = 2: order 2, values in {1, -1}
  for (uint32_t r = 0; r < 16; ++r) {
    const auto val = ring_character(scalar(2), unrank(r));
    CHECK(val.is_integer());
    CHECK((val.integer_value() == 1 || val.integer_value() == -1));
  }
  // orthogonality: sum over R vanishes for every beta != 0
  for (uint32_t b = 1; b < 16; ++b) {
    CyclotomicInt acc(4);
    for (uint32_t r = 0; r < 16; ++r) acc += ring_character(unrank(b), unrank(r));
    CHECK(acc.is_zero());
  }
  // order 4 iff beta not in 2R
  for (uint32_t b = 0; b < 16; ++b) {
    const RingElement beta = unrank(b);
    const bool in_2r = beta.a0 % 2 == 0 && beta.a1 % 2 == 0;
    if (beta == zero)
      CHECK(character_order(beta) == 1);
    else
      CHECK(character_order(beta) == (in_2r ? 2u : 4u));
  }
}

TEST_CASE("group bridge: additive and rank-aligned") {
  const GroupSpec rg = ring_group();
  CHECK(to_group(zero) == rg.identity());
  for (uint32_t a = 0; a < 16; ++a)
    for (uint32_t b = 0; b < 16; ++b)
      CHECK(to_group(add(unrank(a), unrank(b))) ==
            rg.add(to_group(unrank(a)), to_group(unrank(b))));
  for (uint32_t a = 0; a < 16; ++a) CHECK(from_group(to_group(unrank(a))) == unrank(a));
}

TEST_CASE("product characters match plain group characters through the bridge") {
  const Field& f4 = residue_field();
  const GroupSpec lg = lifted_group(2);  // Z_4^2 x Z_2^4
  CHECK(lg.order() == 256);
  CHECK(lg.exponent() == 4);

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<uint32_t> r16(0, 15);
  std::uniform_int_distribution<uint32_t> r4(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const RingElement beta = unrank(r16(rng));
    const std::vector<FieldElement> w = {f4.element(r4(rng)), f4.element(r4(rng))};
    const GroupElement label = character_label(beta, w);

    // evaluate both ways on every point of R x F_4^2
    for (int pts = 0; pts < 40; ++pts) {
      LiftedPoint y;
      y.ring = unrank(r16(rng));
      y.rest = {f4.element(r4(rng)), f4.element(r4(rng))};
      CyclotomicInt tensor = ring_character(beta, y.ring);
      for (size_t i = 0; i < 2; ++i) {
        const uint32_t tr = f4.absolute_trace(f4.mul(w[i], y.rest[i]));
        tensor = tensor * CyclotomicInt::zeta_pow(4, 2 * tr);  // (-1)^tr at level 4
      }
      CHECK(tensor == character_value(lg, label, to_group(y)));
    }

    // label round-trips
    const auto [beta2, w2] = character_label_inverse(label);
    CHECK(beta2 == beta);
    CHECK(w2 == w);
  }
}
