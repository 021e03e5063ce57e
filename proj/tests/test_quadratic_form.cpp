#include <doctest.h>

#include <stdexcept>

#include <random>

#include "amorph/quadratic_form.hpp"

using namespace amorph;

namespace {

// the pinned elliptic form over F_4: alpha x1^2 + x1 x2 + x2^2 + x3 x4 + ...
QuadraticForm f4_elliptic(uint32_t ell) {
  return QuadraticForm::standard_elliptic(Field::extension(2, 2), ell);
}

}  // namespace

TEST_CASE("pinned elliptic form over F_4 has the expected coefficients") {
  const Field f4 = Field::extension(2, 2);
  const QuadraticForm q = f4_elliptic(2);
  CHECK(q.dimension() == 4);
  CHECK(q.coefficient(0, 0) == f4.generator());  // alpha
  CHECK(q.coefficient(0, 1) == f4.one());
  CHECK(q.coefficient(1, 1) == f4.one());
  CHECK(q.coefficient(2, 3) == f4.one());
  CHECK(q.coefficient(0, 2) == f4.zero());
  CHECK(q.coefficient(1, 2) == f4.zero());
}

TEST_CASE("evaluation") {
  const Field f4 = Field::extension(2, 2);
  const QuadraticForm q = f4_elliptic(2);
  const std::vector<FieldElement> zero4(4, f4.zero());
  CHECK(q.evaluate(zero4) == f4.zero());
  std::vector<FieldElement> e1 = {f4.one(), f4.zero(), f4.zero(), f4.zero()};
  CHECK(q.evaluate(e1) == f4.generator());  // Q(e1) = alpha

  // Q(x1, x1+x2, x3, x4) = Q(x1, x2, x3, x4) on all 256 inputs
  for (uint64_t n = 0; n < 256; ++n) {
    std::vector<FieldElement> v(4), w(4);
    uint64_t t = n;
    for (int i = 0; i < 4; ++i) {
      v[i] = f4.element(t % 4);
      t /= 4;
    }
    w = v;
    w[1] = f4.add(v[0], v[1]);
    CHECK(q.evaluate(w) == q.evaluate(v));
  }
}

TEST_CASE("polarization is symmetric bilinear and vanishes against 0") {
  const Field f4 = Field::extension(2, 2);
  const QuadraticForm q = f4_elliptic(2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<uint32_t> r4(0, 3);
  auto rand_vec = [&] {
    std::vector<FieldElement> v(4);
    for (auto& x : v) x = f4.element(r4(rng));
    return v;
  };
  const std::vector<FieldElement> zero4(4, f4.zero());
  for (int t = 0; t < 30; ++t) {
    const auto u = rand_vec(), v = rand_vec(), w = rand_vec();
    CHECK(q.polarize(u, zero4) == f4.zero());
    CHECK(q.polarize(u, v) == q.polarize(v, u));
    std::vector<FieldElement> uv(4);
    for (int i = 0; i < 4; ++i) uv[i] = f4.add(u[i], v[i]);
    CHECK(q.polarize(uv, w) == f4.add(q.polarize(u, w), q.polarize(v, w)));
    const FieldElement gamma = f4.element(r4(rng));
    std::vector<FieldElement> gu(4);
    for (int i = 0; i < 4; ++i) gu[i] = f4.mul(gamma, u[i]);
    CHECK(q.polarize(gu, w) == f4.mul(gamma, q.polarize(u, w)));
    // Q(gamma v) = gamma^2 Q(v)
    CHECK(q.evaluate(gu) == f4.mul(f4.mul(gamma, gamma), q.evaluate(u)));
  }

  // B(e1, e2) = 1 for the hyperbolic plane x1 x2
  const QuadraticForm h = QuadraticForm::standard_hyperbolic(Field::extension(2, 1), 1);
  const Field f2 = Field::prime(2);
  std::vector<FieldElement> e1 = {f2.one(), f2.zero()}, e2 = {f2.zero(), f2.one()};
  CHECK(h.polarize(e1, e2) == f2.one());
}

TEST_CASE("nonsingularity") {
  CHECK(f4_elliptic(2).is_nonsingular());
  // Q = x1^2 on F_2^2 is singular: e2 is in the radical
  const Field f2 = Field::prime(2);
  QuadraticForm deg(f2, 2, {f2.one(), f2.zero(), f2.zero(), f2.zero()});
  CHECK(!deg.is_nonsingular());
  // the trace-composed form of a nonsingular form stays nonsingular
  CHECK(f4_elliptic(2).trace_compose(f2).is_nonsingular());
}

TEST_CASE("standard forms and zero counts") {
  const Field f2 = Field::prime(2);
  const QuadraticForm h = QuadraticForm::standard_hyperbolic(f2, 1);
  const auto tag = h.classify_type();
  CHECK(tag.epsilon == +1);
  CHECK(tag.nonzero_zero_count == 2);  // (2-1)(1+1), the two axes
  const auto zeros = h.level_set(f2.zero(), true);
  CHECK(zeros.cardinality() == 2);
  CHECK(zeros.contains(1));  // e1
  CHECK(zeros.contains(2));  // e2

  const Field f9 = Field::extension(3, 2);
  const auto e9 = QuadraticForm::standard_elliptic(f9, 2);
  CHECK(e9.is_nonsingular());
  const auto tag9 = e9.classify_type();
  CHECK(tag9.epsilon == -1);
  CHECK(tag9.nonzero_zero_count == 656);  // (81+1)(9-1)

  const Field f4 = Field::extension(2, 2);
  const auto h4 = QuadraticForm::standard_hyperbolic(f4, 2);
  CHECK(h4.classify_type().epsilon == +1);
  CHECK(h4.level_set(f4.zero(), true).cardinality() == 75);  // (16-1)(4+1)
}

TEST_CASE("scalar multiples") {
  const Field f4 = Field::extension(2, 2);
  const QuadraticForm q = f4_elliptic(2);
  const FieldElement alpha = f4.generator();

  CHECK(q.scalar_multiple(f4.one()).coefficient(0, 0) == q.coefficient(0, 0));
  std::vector<FieldElement> e1 = {f4.one(), f4.zero(), f4.zero(), f4.zero()};
  CHECK(q.scalar_multiple(alpha).evaluate(e1) == f4.mul(alpha, alpha));
  CHECK_THROWS_AS(q.scalar_multiple(f4.zero()), std::invalid_argument);

  // zero sets coincide; nonzero level sets permute: {gamma Q = gamma beta} = {Q = beta}
  const auto qa = q.scalar_multiple(alpha);
  CHECK(qa.level_set(f4.zero(), true) == q.level_set(f4.zero(), true));
  for (uint64_t beta = 0; beta < 4; ++beta)
    CHECK(qa.level_set(f4.mul(alpha, f4.element(beta)), false) ==
          q.level_set(f4.element(beta), false));
  CHECK(qa.classify_type().epsilon == -1);
}

TEST_CASE("level sets of the pinned F_4 form at l = 2") {
  const Field f4 = Field::extension(2, 2);
  const QuadraticForm q = f4_elliptic(2);
  CHECK(q.level_set(f4.zero(), false).contains(0));
  CHECK(!q.level_set(f4.zero(), true).contains(0));
  CHECK(q.level_set(f4.zero(), true).cardinality() == 51);
  for (uint64_t beta = 1; beta < 4; ++beta) {
    const auto d = q.level_set(f4.element(beta), false);
    CHECK(d.cardinality() == 68);
    CHECK(d.is_symmetric());
  }
}

TEST_CASE("trace composition to F_2") {
  const Field f4 = Field::extension(2, 2);
  const Field f2 = Field::prime(2);
  const QuadraticForm q = f4_elliptic(2);
  const QuadraticForm q0 = q.trace_compose(f2);
  CHECK(q0.dimension() == 8);
  CHECK(q0.field() == f2);

  const SubfieldEmbedding emb(f4, f2);
  uint64_t kernel_size = 0;
  for (uint64_t n = 0; n < 256; ++n) {
    std::vector<FieldElement> v(4);
    uint64_t t = n;
    for (int i = 0; i < 4; ++i) {
      v[i] = f4.element(t % 4);
      t /= 4;
    }
    // flatten coordinate-major, basis-minor
    std::vector<FieldElement> flat;
    for (const FieldElement& x : v) {
      const auto c = emb.decompose(x);
      flat.insert(flat.end(), c.begin(), c.end());
    }
    CHECK(q0.evaluate(flat) == emb.trace(q.evaluate(v)));
    if (emb.trace(q.evaluate(v)) == f2.zero()) ++kernel_size;
  }
  CHECK(kernel_size == 120);  // 1 + 51 + 68

  // the zero form composes to the zero form
  QuadraticForm zq(f4, 2, std::vector<FieldElement>(4, f4.zero()));
  const auto z0 = zq.trace_compose(f2);
  for (uint32_t i = 0; i < z0.dimension(); ++i)
    for (uint32_t j = i; j < z0.dimension(); ++j) CHECK(z0.coefficient(i, j) == f2.zero());
}

TEST_CASE("trace composition is transitive through F_16 -> F_4 -> F_2") {
  const Field f16 = Field::extension(2, 4);
  const Field f4 = Field::extension(2, 2);
  const Field f2 = Field::prime(2);
  const QuadraticForm q = QuadraticForm::standard_elliptic(f16, 1);  // dim 2 over F_16

  const QuadraticForm mid = q.trace_compose(f4);
  const QuadraticForm two_step = mid.trace_compose(f2);
  const QuadraticForm one_step = q.trace_compose(f2);
  CHECK(two_step.dimension() == 8);
  CHECK(one_step.dimension() == 8);

  const SubfieldEmbedding e16_4(f16, f4), e4_2(f4, f2), e16_2(f16, f2);
  for (uint64_t n = 0; n < 256; ++n) {
    std::vector<FieldElement> v(2);
    v[0] = f16.element(n % 16);
    v[1] = f16.element(n / 16);
    const FieldElement val = q.evaluate(v);
    // the composite trace agrees either way
    CHECK(e4_2.trace(e16_4.trace(val)) == e16_2.trace(val));

    // and both composed forms evaluate to the same trace value
    std::vector<FieldElement> flat_two, flat_one;
    for (const FieldElement& x : v) {
      for (const FieldElement& c4 : e16_4.decompose(x)) {
        const auto bits = e4_2.decompose(c4);
        flat_two.insert(flat_two.end(), bits.begin(), bits.end());
      }
      const auto bits = e16_2.decompose(x);
      flat_one.insert(flat_one.end(), bits.begin(), bits.end());
    }
    CHECK(two_step.evaluate(flat_two) == e16_2.trace(val));
    CHECK(one_step.evaluate(flat_one) == e16_2.trace(val));
  }

  // composed elliptic stays elliptic
  CHECK(one_step.classify_type().epsilon == -1);
  CHECK(mid.classify_type().epsilon == -1);
}
