#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "amalgam/closure.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/reduction.hpp"
#include "test_support.hpp"

namespace amalgam {
namespace {

TEST(ReductionContext, SplitAndInertKinds) {
  const auto p3minus = ReductionContext::make(3, IdealSign::minus);
  EXPECT_EQ(p3minus.kind(), PrimeKind::split);
  EXPECT_EQ(p3minus.omega_image(), 2u);
  EXPECT_EQ(ReductionContext::make(3, IdealSign::plus).omega_image(), 1u);

  const auto p11 = ReductionContext::make(11);
  EXPECT_EQ(p11.kind(), PrimeKind::split);
  EXPECT_EQ(p11.omega_image(), 3u);
  EXPECT_EQ(ReductionContext::make(11, IdealSign::minus).omega_image(), 8u);

  const auto p5 = ReductionContext::make(5);
  EXPECT_EQ(p5.kind(), PrimeKind::inert);
  EXPECT_EQ(p5.field().order(), 25u);
  EXPECT_EQ(p5.omega_image(), p5.field().t());

  EXPECT_THROW(ReductionContext::make(2), NotOddPrime);
  EXPECT_THROW(ReductionContext::make(15), NotOddPrime);
}

TEST(ReductionContext, ReduceEntries) {
  const auto ctx = ReductionContext::make(3);
  EXPECT_TRUE(ctx.reduce(MatrixR::identity()).is_identity());
  EXPECT_EQ(ctx.reduce(RingElem::half()), 2u);
  const Field& F = ctx.field();
  const FieldElem w = ctx.omega_image();
  EXPECT_EQ(F.mul(w, w), F.from_int(-2));
}

TEST(ReductionContext, HomomorphismOnRandomElements) {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const auto ctx = ReductionContext::make(p, s);
      const Field& F = ctx.field();
      for (int i = 0; i < 200; ++i) {
        const RingElem u = testing::random_ring_elem(rng);
        const RingElem v = testing::random_ring_elem(rng);
        ASSERT_EQ(ctx.reduce(u + v), F.add(ctx.reduce(u), ctx.reduce(v)));
        ASSERT_EQ(ctx.reduce(u * v), F.mul(ctx.reduce(u), ctx.reduce(v)));
      }
    }
  }
}

TEST(ReductionContext, ConjugationBecomesFrobeniusAtInertPrimes) {
  std::mt19937_64 rng(100);
  for (std::uint32_t p : {5u, 7u, 13u, 23u}) {
    const auto ctx = ReductionContext::make(p);
    ASSERT_EQ(ctx.kind(), PrimeKind::inert);
    for (int i = 0; i < 100; ++i) {
      const RingElem u = testing::random_ring_elem(rng);
      ASSERT_EQ(ctx.reduce(conj(u)), ctx.field().frobenius(ctx.reduce(u))) << p;
    }
  }
}

TEST(ReductionContext, ConjugationSwapsIdealsAtSplitPrimes) {
  std::mt19937_64 rng(101);
  for (std::uint32_t p : {3u, 11u, 17u, 19u}) {
    const auto plus = ReductionContext::make(p, IdealSign::plus);
    const auto minus = ReductionContext::make(p, IdealSign::minus);
    for (int i = 0; i < 100; ++i) {
      const RingElem u = testing::random_ring_elem(rng);
      ASSERT_EQ(plus.reduce(conj(u)), minus.reduce(u)) << p;
    }
  }
}

TEST(ReductionContext, MatrixReductionIsMultiplicative) {
  const Generators g = builtin_generators();
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {3u, 5u, 11u}) {
    const auto ctx = ReductionContext::make(p);
    for (int i = 0; i < 20; ++i) {
      const MatrixR m = evaluate_word(g, testing::random_word(rng));
      const MatrixR n = evaluate_word(g, testing::random_word(rng));
      ASSERT_EQ(ctx.reduce(m * n), mul(ctx.field(), ctx.reduce(m), ctx.reduce(n)));
      ASSERT_EQ(det(ctx.field(), ctx.reduce(m)), ctx.reduce(det(m)));
    }
  }
}

TEST(UnitaryForm, Examples) {
  const Generators g = builtin_generators();
  const auto ctx = ReductionContext::make(5);
  EXPECT_TRUE(check_unitary_form(FqMatrix::identity(), ctx));
  for (const MatrixR* m : {&g.a, &g.b, &g.c, &g.d, &g.f}) EXPECT_TRUE(check_unitary_form(ctx.reduce(*m), ctx));

  // 2^(p+1) = 2^6 = 4 mod 5, so 2f scales the form by 4.
  const FqMatrix bad = scale(ctx.field(), ctx.reduce(g.f), 2);
  EXPECT_FALSE(check_unitary_form(bad, ctx));

  EXPECT_THROW(check_unitary_form(FqMatrix::identity(), ReductionContext::make(11)), WrongContextKind);
}

TEST(UnitaryForm, HoldsForRandomWordsAtInertPrimes) {
  const Generators g = builtin_generators();
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {5u, 7u, 13u}) {
    const auto ctx = ReductionContext::make(p);
    for (int i = 0; i < 20; ++i)
      ASSERT_TRUE(check_unitary_form(ctx.reduce(evaluate_word(g, testing::random_word(rng))), ctx));
  }
}

TEST(Reduction, FaithfulOnFiniteSubgroups) {
  const Generators g = builtin_generators();
  const ExactClosure H = bfs_closure({g.b, g.c});
  const ExactClosure K = bfs_closure({g.a, g.b, g.d});
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const auto ctx = ReductionContext::make(p);
    for (const ExactClosure* G : {&H, &K}) {
      std::vector<FqMatrix> images;
      for (const MatrixR& m : G->elements()) images.push_back(ctx.reduce(m));
      std::sort(images.begin(), images.end());
      EXPECT_EQ(std::unique(images.begin(), images.end()), images.end()) << p;
    }
  }
}

}  // namespace
}  // namespace amalgam
