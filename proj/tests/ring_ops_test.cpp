#include <gtest/gtest.h>

#include <random>

#include "polyarith/error.hpp"
#include "polyarith/ring_ops.hpp"
#include "test_util.hpp"

using namespace polyarith;
using testutil::error_of;

namespace {

PolyadicRing ring_of(long a, long b) { return PolyadicRing::minimal(make_class(a, b)); }

std::vector<RingElement> values(const PolyadicRing& ring, std::initializer_list<long> vs) {
  std::vector<RingElement> out;
  for (long v : vs) out.push_back(ring.from_value(v));
  return out;
}

std::vector<RingElement> repeat(const PolyadicRing& ring, long v, std::size_t count) {
  return std::vector<RingElement>(count, ring.from_value(v));
}

std::vector<RingElement> random_elements(const PolyadicRing& ring, std::size_t count, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> dist(-500, 500);
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(ring.element(dist(gen)));
  return out;
}

}  // namespace

TEST(Nu, QuaternaryAddition) {
  const auto z43 = ring_of(2, 3);
  const auto sum = nu(z43, values(z43, {2, 5, 8, 11}));
  EXPECT_EQ(sum.value(), 26);
  EXPECT_EQ(sum.k(), 8);  // 0+1+2+3 + I, I = 2
}

TEST(Nu, BinaryIntegers) {
  const auto z = ring_of(0, 1);
  EXPECT_EQ(nu(z, values(z, {3, 4})).value(), 7);
}

TEST(Nu, Errors) {
  const auto z43 = ring_of(2, 3);
  const auto z65 = ring_of(3, 5);
  EXPECT_EQ(error_of([&] { nu(z43, values(z43, {2, 5, 8})); }), ErrorKind::ArityMismatch);
  auto mixed = values(z43, {2, 5, 8});
  mixed.push_back(z65.from_value(8));
  EXPECT_EQ(error_of([&] { nu(z43, mixed); }), ErrorKind::ClassMismatch);
}

TEST(Mu, TernaryProducts) {
  const auto z43 = ring_of(2, 3);
  auto xs = values(z43, {2, 2, 2});
  auto p = mu(z43, xs);
  EXPECT_EQ(p.value(), 8);
  EXPECT_EQ(p.k(), 2);
  auto idx = product_index(z43, xs);
  EXPECT_EQ(idx.s, 0);
  EXPECT_EQ(idx.J, 2);

  xs = values(z43, {5, 5, 5});
  p = mu(z43, xs);
  EXPECT_EQ(p.value(), 125);
  EXPECT_EQ(p.k(), 41);
  idx = product_index(z43, xs);
  EXPECT_EQ(idx.s, 39);  // 4*3 + 6*3 + 9
  EXPECT_EQ(idx.r0, 41);
}

TEST(Mu, BinaryIntegers) {
  const auto z = ring_of(0, 1);
  EXPECT_EQ(mu(z, values(z, {3, 4})).value(), 12);
}

TEST(Mu, TernaryPolynomialMatchesExpansion) {
  // (a + b r1)(a + b r2)(a + b r3) = a + b (s + J).
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> dist(-10'000, 10'000);
  for (long b = 1; b <= 9; ++b) {
    for (long a = 0; a < b; ++a) {
      for (int t = 0; t < 20; ++t) {
        const Integer r1 = dist(gen), r2 = dist(gen), r3 = dist(gen);
        const Integer A = a, B = b;
        const Integer product = (A + B * r1) * (A + B * r2) * (A + B * r3);
        const Integer lhs = A + B * ternary_index_polynomial(r1, r2, r3, A, B);
        EXPECT_EQ(product - lhs, A * A * A - A);
      }
    }
  }
}

TEST(WordLength, AdmissibleWidths) {
  EXPECT_EQ(admissible_width(8, 1), 8u);
  EXPECT_EQ(admissible_width(8, 3), 22u);
  EXPECT_FALSE(word_length_for(8, 9));
  EXPECT_FALSE(word_length_for(8, 1));
  ASSERT_TRUE(word_length_for(7, 19));
  EXPECT_EQ(word_length_for(7, 19)->compositions, 3u);
  for (std::uint64_t w = 2; w < 30; ++w) EXPECT_TRUE(word_length_for(2, w)) << w;
}

TEST(NuIter, EightSevenRing) {
  const auto z87 = ring_of(5, 7);
  for (std::uint64_t w : {8u, 15u, 22u}) {
    const auto xs = repeat(z87, 5, w);
    EXPECT_EQ(nu_word(z87, xs).value(), Integer(5 * static_cast<long>(w))) << w;
  }
  const auto e = testutil::catch_error([&] { nu_word(z87, repeat(z87, 5, 9)); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::NonAdmissibleWordLength);
  EXPECT_NE(e->detail().find("8, 15"), std::string::npos) << e->detail();
}

TEST(NuIter, SevenTwosInFourThree) {
  const auto z43 = ring_of(2, 3);
  const auto sum = nu_iter(z43, 2, repeat(z43, 2, 7));
  EXPECT_EQ(sum.value(), 14);
  EXPECT_EQ(sum.k(), 4);
}

TEST(NuIter, CompositionCountMustMatchWidth) {
  const auto z43 = ring_of(2, 3);
  EXPECT_EQ(error_of([&] { nu_iter(z43, 1, repeat(z43, 2, 7)); }), ErrorKind::NonAdmissibleWordLength);
  EXPECT_EQ(error_of([&] { nu_iter(z43, 0, repeat(z43, 2, 1)); }), ErrorKind::NonAdmissibleWordLength);
}

TEST(NuIter, BinaryAcceptsAnyLength) {
  const auto z = ring_of(0, 1);
  for (std::size_t len = 2; len < 12; ++len) {
    EXPECT_EQ(nu_word(z, repeat(z, 3, len)).value(), Integer(3 * static_cast<long>(len)));
  }
}

TEST(MuIter, EightSevenRing) {
  const auto z87 = ring_of(5, 7);
  for (std::uint64_t w : {7u, 13u, 19u}) {
    EXPECT_EQ(mu_word(z87, repeat(z87, -2, w)).value(), ipow(-2, w)) << w;
  }
  EXPECT_EQ(error_of([&] { mu_word(z87, repeat(z87, 5, 8)); }), ErrorKind::NonAdmissibleWordLength);
}

TEST(MuIter, FiveTwos) {
  const auto z43 = ring_of(2, 3);
  const auto p = mu_iter(z43, 2, repeat(z43, 2, 5));
  EXPECT_EQ(p.value(), 32);
  EXPECT_EQ(p.k(), 10);
  EXPECT_EQ(error_of([&] { mu_word(z43, repeat(z43, 2, 4)); }), ErrorKind::NonAdmissibleWordLength);
}

TEST(Iterated, LeftNestingEqualsFlatArithmetic) {
  std::mt19937_64 gen(11);
  for (auto [a, b] : {std::pair{2L, 3L}, {3L, 5L}, {5L, 7L}, {0L, 1L}, {1L, 4L}}) {
    const auto ring = ring_of(a, b);
    for (std::uint64_t ell = 1; ell <= 4; ++ell) {
      const auto adds = random_elements(ring, admissible_width(ring.m(), ell), gen);
      Integer sum = 0;
      for (const auto& x : adds) sum += x.value();
      EXPECT_EQ(nu_iter(ring, ell, adds).value(), sum);

      const auto muls = random_elements(ring, admissible_width(ring.n(), ell), gen);
      Integer product = 1;
      for (const auto& x : muls) product *= x.value();
      EXPECT_EQ(mu_iter(ring, ell, muls).value(), product);
    }
  }
}

TEST(Closure, IndexFormulaAndMembership) {
  std::mt19937_64 gen(3);
  for (auto [a, b] : {std::pair{2L, 3L}, {3L, 5L}, {5L, 7L}, {4L, 6L}, {2L, 9L}}) {
    const auto ring = ring_of(a, b);
    for (int t = 0; t < 200; ++t) {
      const auto xs = random_elements(ring, ring.m(), gen);
      Integer k_sum = 0;
      for (const auto& x : xs) k_sum += x.k();
      const auto s = nu(ring, xs);
      EXPECT_TRUE(contains(ring.congruence_class(), s.value()));
      EXPECT_EQ(s.k(), k_sum + ring.shape().I);

      const auto ys = random_elements(ring, ring.n(), gen);
      const auto p = mu(ring, ys);
      EXPECT_TRUE(contains(ring.congruence_class(), p.value()));
      EXPECT_EQ(p.k(), product_index(ring, ys).r0);
    }
  }
}

TEST(PolyadicPower, KnownValues) {
  const auto z65 = ring_of(3, 5);
  auto p = polyadic_power(z65, z65.from_value(8), 1);
  EXPECT_EQ(p.value(), 32768);
  EXPECT_EQ(p.k(), 6553);

  const auto z43 = ring_of(2, 3);
  p = polyadic_power(z43, z43.from_value(8), 1);
  EXPECT_EQ(p.value(), 512);
  EXPECT_EQ(p.k(), 170);  // (512 - 2) / 3

  const auto z = ring_of(0, 1);
  EXPECT_EQ(polyadic_power(z, z.from_value(3), 1).value(), 9);
}

TEST(PolyadicPower, MatchesIteratedProductAndComposes) {
  for (auto [a, b] : {std::pair{2L, 3L}, {3L, 5L}, {5L, 7L}}) {
    const auto ring = ring_of(a, b);
    for (long k : {-3L, -1L, 0L, 2L}) {
      const auto x = ring.element(k);
      for (std::uint64_t l1 = 1; l1 <= 3; ++l1) {
        const auto direct = polyadic_power(ring, x, l1);
        EXPECT_EQ(direct, mu_iter(ring, l1, std::vector<RingElement>(admissible_width(ring.n(), l1), x)));
        for (std::uint64_t l2 = 1; l2 <= 2; ++l2) {
          const auto nested = polyadic_power(ring, direct, l2);
          const std::uint64_t e = admissible_width(ring.n(), l1) * admissible_width(ring.n(), l2);
          EXPECT_EQ(nested.value(), ipow(x.value(), e));
        }
      }
    }
  }
}

TEST(Querelement, Examples) {
  const auto z43 = ring_of(2, 3);
  const auto q = add_querelement(z43, z43.from_value(5));
  EXPECT_EQ(q.value(), -10);
  auto word = values(z43, {-10, 5, 5, 5});
  EXPECT_EQ(nu(z43, word).value(), 5);

  const auto z = ring_of(0, 1);
  EXPECT_EQ(add_querelement(z, z.from_value(7)).value(), 0);

  const auto z65 = ring_of(3, 5);
  const auto q65 = add_querelement(z65, z65.from_value(3));
  EXPECT_EQ(q65.value(), -12);
  EXPECT_EQ(q65.k(), -3);
  EXPECT_EQ(nu(z65, values(z65, {-12, 3, 3, 3, 3, 3})).value(), 3);
}

TEST(Querelement, LawAtEveryPosition) {
  std::mt19937_64 gen(5);
  for (auto [a, b] : {std::pair{2L, 3L}, {3L, 5L}, {5L, 7L}, {0L, 1L}}) {
    const auto ring = ring_of(a, b);
    for (const auto& x : random_elements(ring, 50, gen)) {
      const auto q = add_querelement(ring, x);
      for (std::size_t pos = 0; pos < ring.m(); ++pos) {
        std::vector<RingElement> word(ring.m(), x);
        word[pos] = q;
        EXPECT_EQ(nu(ring, word), x);
      }
    }
  }
}

TEST(SpecialElements, ZerolessRings) {
  const auto r43 = find_special_elements(ring_of(2, 3));
  EXPECT_FALSE(r43.zero);
  EXPECT_FALSE(r43.nilpotents);
  const auto r65 = find_special_elements(ring_of(3, 5));
  EXPECT_FALSE(r65.zero);
  EXPECT_TRUE(r65.identities.empty());
  EXPECT_TRUE(r65.neutral_polyads.empty());
  EXPECT_TRUE(r65.mu_idempotents.empty());
}

TEST(SpecialElements, OrdinaryIntegers) {
  const auto ring = ring_of(0, 1);
  const auto r = find_special_elements(ring);
  ASSERT_TRUE(r.zero);
  EXPECT_EQ(r.zero->value(), 0);
  ASSERT_EQ(r.identities.size(), 1u);
  EXPECT_EQ(r.identities[0].value(), 1);
  ASSERT_TRUE(r.nilpotents);
  ASSERT_EQ(r.nilpotents->size(), 1u);
  EXPECT_EQ(r.nilpotents->front().value(), 0);
  ASSERT_EQ(r.neutral_polyads.size(), 1u);
}

TEST(SpecialElements, MinusOneIsTernaryIdentityOfFourThree) {
  const auto ring = ring_of(2, 3);
  const auto r = find_special_elements(ring);
  ASSERT_EQ(r.identities.size(), 1u);
  const auto e = r.identities[0];
  EXPECT_EQ(e.value(), -1);
  EXPECT_EQ(e.k(), -1);
  // Independent check on a spread of elements, e in either trailing place.
  for (long k = -50; k <= 50; ++k) {
    const auto x = ring.element(k);
    EXPECT_EQ(mu(ring, std::vector<RingElement>{x, e, e}), x);
    EXPECT_EQ(mu(ring, std::vector<RingElement>{e, e, x}), x);
  }
  ASSERT_EQ(r.mu_idempotents.size(), 1u);
  EXPECT_EQ(r.mu_idempotents[0].value(), -1);
  EXPECT_TRUE(r.nu_idempotents.empty());
}

TEST(SpecialElements, ZeroInNonBinaryRing) {
  // [[0]]_4 with arities (2,2) is 4Z; zero 0, no unit.
  const auto ring = ring_of(0, 4);
  const auto r = find_special_elements(ring, 50);
  ASSERT_TRUE(r.zero);
  EXPECT_TRUE(r.identities.empty());
  ASSERT_TRUE(r.nilpotents);
  EXPECT_EQ(r.nilpotents->size(), 1u);
}

TEST(SpecialElements, IdentitySoundnessAcrossClasses) {
  std::mt19937_64 gen(9);
  for (const auto& row : arity_shape_table(12)) {
    if (!row.shape) continue;
    const auto ring = PolyadicRing::minimal(row.cls);
    const auto r = find_special_elements(ring, 200);
    for (const auto& e : r.identities) {
      for (const auto& x : random_elements(ring, 100, gen)) {
        std::vector<RingElement> word(ring.n(), e);
        word[0] = x;
        EXPECT_EQ(mu(ring, word), x) << to_string(ring);
      }
    }
    if (r.zero) {
      for (int t = 0; t < 100; ++t) {
        auto word = random_elements(ring, ring.n(), gen);
        word[t % ring.n()] = *r.zero;
        EXPECT_EQ(mu(ring, word), *r.zero);
      }
    }
  }
}

TEST(Rings, NonMinimalArities) {
  const auto cls = make_class(2, 3);
  const auto ring = PolyadicRing::with_arities(cls, 7, 5);
  EXPECT_EQ(ring.shape().I, 4);
  EXPECT_EQ(ring.shape().J, 10);
  EXPECT_TRUE(verify_ring_laws(ring, 50, 100, 1).all_passed());
  EXPECT_EQ(error_of([&] { PolyadicRing::with_arities(cls, 5, 3); }), ErrorKind::InadmissibleArity);
  EXPECT_EQ(error_of([&] { PolyadicRing::with_arities(cls, 1, 3); }), ErrorKind::InadmissibleArity);
  EXPECT_EQ(error_of([&] { PolyadicRing::minimal(make_class(2, 4)); }), ErrorKind::NoAritySolution);
}

TEST(RingLaws, PassOnKnownRings) {
  const auto z43 = verify_ring_laws(ring_of(2, 3), 100, 1000, 42);
  EXPECT_TRUE(z43.all_passed());
  const auto z87 = verify_ring_laws(ring_of(5, 7), 20, 1000, 42);
  EXPECT_TRUE(z87.all_passed());
  const auto z = verify_ring_laws(ring_of(0, 1), 100, 1000, 42);
  EXPECT_TRUE(z.all_passed());
  const auto* distrib = z87.find("total_distributivity");
  ASSERT_NE(distrib, nullptr);
  EXPECT_EQ(distrib->trials, 20u * 7u);
  for (const auto& c : z43.checks) {
    EXPECT_EQ(c.failures, 0u) << c.law;
    EXPECT_FALSE(c.counterexample) << c.law;
  }
}

TEST(RingLaws, DeterministicInSeed) {
  const auto ring = ring_of(3, 5);
  const auto first = verify_ring_laws(ring, 30, 500, 2024);
  const auto second = verify_ring_laws(ring, 30, 500, 2024);
  ASSERT_EQ(first.checks.size(), second.checks.size());
  for (std::size_t i = 0; i < first.checks.size(); ++i) {
    EXPECT_EQ(first.checks[i].law, second.checks[i].law);
    EXPECT_EQ(first.checks[i].trials, second.checks[i].trials);
  }
  EXPECT_EQ(first.seed, 2024u);
  EXPECT_EQ(first.prng, "xorshift64*");
  EXPECT_EQ(error_of([&] { verify_ring_laws(ring, 0, 10, 1); }), ErrorKind::InvalidArgument);
}
