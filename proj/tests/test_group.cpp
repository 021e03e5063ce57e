#include <doctest.h>

#include <random>

#include "amorph/group.hpp"

using namespace amorph;

namespace {

SubsetIndicator random_subset(const GroupSpec& g, std::mt19937_64& rng) {
  SubsetIndicator s(g);
  std::bernoulli_distribution coin(0.5);
  for (uint64_t i = 0; i < g.order(); ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

// per-label summation, the oracle for the transform
std::vector<CyclotomicInt> per_label_sums(const SubsetIndicator& s) {
  const GroupSpec& g = s.group();
  std::vector<CyclotomicInt> out;
  out.reserve(g.order());
  for (uint64_t a = 0; a < g.order(); ++a) out.push_back(character_sum(s, g.unrank(a)));
  return out;
}

}  // namespace

TEST_CASE("rank and unrank") {
  GroupSpec g({4, 2});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.unrank(0) == GroupElement{{0, 0}});
  const GroupElement e{{1, 1}};
  CHECK(g.rank(e) == 5);  // 1 + 4*1 with the first factor least significant
  CHECK(g.unrank(g.rank(e)) == e);

  GroupSpec big({4, 4, 2, 2, 2, 2});
  CHECK(big.order() == 256);
  for (uint64_t i = 0; i < big.order(); ++i) CHECK(big.rank(big.unrank(i)) == i);
}

TEST_CASE("group element arithmetic") {
  GroupSpec g({4, 3});
  const auto a = g.unrank(7), b = g.unrank(10);
  CHECK(g.rank(g.add(a, b)) == g.add_ranks(7, 10));
  CHECK(g.add(a, g.neg(a)) == g.identity());
  for (uint64_t i = 0; i < g.order(); ++i) {
    CHECK(g.add_ranks(i, g.neg_rank(i)) == 0);
    CHECK(g.sub_ranks(i, i) == 0);
  }
}

TEST_CASE("character values") {
  GroupSpec z2({2});
  CHECK(character_value(z2, z2.unrank(1), z2.unrank(1)).integer_value() == -1);

  GroupSpec z4({4});
  const auto val = character_value(z4, z4.unrank(1), z4.unrank(1));
  CHECK(val == CyclotomicInt::zeta_pow(4, 1));
  CHECK((val * val * val * val).integer_value() == 1);

  // principal character
  GroupSpec g({4, 2, 3});
  for (uint64_t x = 0; x < g.order(); ++x)
    CHECK(character_value(g, g.identity(), g.unrank(x)).integer_value() == 1);

  // multiplicativity chi_a(x+y) = chi_a(x) chi_a(y), mixed exponent 12
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<uint64_t> pick(0, g.order() - 1);
  for (int t = 0; t < 50; ++t) {
    const auto a = g.unrank(pick(rng)), x = g.unrank(pick(rng)), y = g.unrank(pick(rng));
    CHECK(character_value(g, a, g.add(x, y)) ==
          character_value(g, a, x) * character_value(g, a, y));
  }
}

TEST_CASE("character sums: edge cases") {
  GroupSpec g({4, 2});
  SubsetIndicator empty(g);
  for (uint64_t a = 0; a < g.order(); ++a) CHECK(character_sum(empty, g.unrank(a)).is_zero());

  SubsetIndicator full(g);
  for (uint64_t i = 0; i < g.order(); ++i) full.insert(i);
  CHECK(character_sum(full, g.identity()).integer_value() == 8);
  for (uint64_t a = 1; a < g.order(); ++a) CHECK(character_sum(full, g.unrank(a)).is_zero());
}

TEST_CASE("empty subset transforms to the all-zero table") {
  GroupSpec g({4, 2, 2});
  const auto sums = all_character_sums(SubsetIndicator(g));
  for (const auto& z : sums) CHECK(z.is_zero());
}

TEST_CASE("fast transform equals per-label summation") {
  std::mt19937_64 rng(1234);
  for (const auto& factors : {std::vector<uint32_t>{4, 4, 2, 2, 2, 2},
                              std::vector<uint32_t>{2, 2, 2, 2, 2, 2},
                              std::vector<uint32_t>{3, 3, 3}}) {
    GroupSpec g(factors);
    for (int trial = 0; trial < 3; ++trial) {
      const auto s = random_subset(g, rng);
      const auto fast = all_character_sums(s);
      const auto slow = per_label_sums(s);
      REQUIRE(fast.size() == slow.size());
      for (uint64_t a = 0; a < g.order(); ++a) CHECK(fast[a] == slow[a]);
      CHECK(fast[0].integer_value() == static_cast<int64_t>(s.cardinality()));
    }
  }
}

TEST_CASE("direct path used for unsupported exponents") {
  GroupSpec g({5, 5});
  std::mt19937_64 rng(7);
  const auto s = random_subset(g, rng);
  const auto sums = all_character_sums(s);
  CHECK(sums[0].integer_value() == static_cast<int64_t>(s.cardinality()));
  CHECK(sums[3] == character_sum(s, g.unrank(3)));
}

TEST_CASE("Parseval: sum of |chi(S)|^2 = order * |S|") {
  std::mt19937_64 rng(99);
  for (const auto& factors :
       {std::vector<uint32_t>{4, 4, 2, 2}, std::vector<uint32_t>{3, 3, 3}}) {
    GroupSpec g(factors);
    const auto s = random_subset(g, rng);
    const auto sums = all_character_sums(s);
    CyclotomicInt total(g.exponent());
    for (const auto& z : sums) total += z * z.conjugate();
    CHECK(total.integer_value() ==
          static_cast<int64_t>(g.order() * s.cardinality()));
  }
}

TEST_CASE("difference counts") {
  GroupSpec z5({5});
  SubsetIndicator single(z5);
  single.insert(2);
  for (uint64_t c : difference_counts(single)) CHECK(c == 0);

  // S = {a, -a}: differences 2a and -2a once each
  SubsetIndicator pair(z5);
  pair.insert(1);
  pair.insert(4);
  auto counts = difference_counts(pair);
  CHECK(counts[0] == 0);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 1);
  CHECK(counts[1] == 0);

  // merged when 2a = -2a
  GroupSpec z4({4});
  SubsetIndicator pair4(z4);
  pair4.insert(1);
  pair4.insert(3);
  counts = difference_counts(pair4);
  CHECK(counts[2] == 2);
  CHECK(counts[0] == 0);
}

TEST_CASE("convolution") {
  GroupSpec g({2, 2, 2, 2, 2, 2});
  SubsetIndicator ident(g);
  ident.insert(0);
  std::mt19937_64 rng(5);
  const auto b = random_subset(g, rng);
  const auto conv = convolve(ident, b);
  for (uint64_t y = 0; y < g.order(); ++y) CHECK(conv[y] == (b.contains(y) ? 1u : 0u));

  SubsetIndicator sa(g);
  sa.insert(9);
  const auto cc = convolve(sa, sa);
  CHECK(cc[g.add_ranks(9, 9)] == 1);

  const auto a = random_subset(g, rng);
  uint64_t total = 0;
  for (uint64_t c : convolve(a, b)) total += c;
  CHECK(total == a.cardinality() * b.cardinality());

  // exhaustive double-loop oracle
  const auto conv_ab = convolve(a, b);
  for (uint64_t y = 0; y < g.order(); ++y) {
    uint64_t direct = 0;
    for (uint64_t z = 0; z < g.order(); ++z)
      if (a.contains(z) && b.contains(g.sub_ranks(y, z))) ++direct;
    CHECK(conv_ab[y] == direct);
  }
}

TEST_CASE("convolution on a large single cyclic factor") {
  GroupSpec g({1021});  // one factor above the chunk-table bound
  SubsetIndicator a(g), b(g);
  for (uint64_t x : {3u, 500u, 1020u}) a.insert(x);
  for (uint64_t x : {1u, 999u}) b.insert(x);
  const auto conv = convolve(a, b);
  uint64_t total = 0;
  for (uint64_t y = 0; y < g.order(); ++y) {
    total += conv[y];
    uint64_t direct = 0;
    for (uint64_t z : a.members())
      if (b.contains(g.sub_ranks(y, z))) ++direct;
    CHECK(conv[y] == direct);
  }
  CHECK(total == 6);
}

TEST_CASE("difference counts equal convolve(S, -S) off the identity") {
  std::mt19937_64 rng(21);
  GroupSpec g({4, 3, 2});
  const auto s = random_subset(g, rng);
  const auto diff = difference_counts(s);
  const auto conv = convolve(s, s.negated());
  for (uint64_t y = 1; y < g.order(); ++y) CHECK(diff[y] == conv[y]);
  CHECK(diff[0] == 0);
  CHECK(conv[0] == s.cardinality());
}

TEST_CASE("subset indicator basics") {
  GroupSpec g({4, 2});
  SubsetIndicator s(g);
  s.insert(3);
  s.insert(5);
  CHECK(s.cardinality() == 2);
  CHECK(s.members() == std::vector<uint64_t>{3, 5});
  s.erase(3);
  CHECK(s.cardinality() == 1);
  CHECK(!s.contains(3));
  // symmetric iff closed under negation
  SubsetIndicator t(g);
  t.insert(1);
  CHECK(!t.is_symmetric());
  t.insert(g.neg_rank(1));
  CHECK(t.is_symmetric());
}
