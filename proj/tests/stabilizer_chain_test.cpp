#include <gtest/gtest.h>

#include <random>

#include "amalgam/closure.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/order_formula.hpp"
#include "amalgam/reduction.hpp"
#include "amalgam/stabilizer_chain.hpp"
#include "amalgam/suites.hpp"

namespace amalgam {
namespace {

std::vector<FqMatrix> reduced(const ReductionContext& ctx, const Generators& g) {
  return {ctx.reduce(g.a), ctx.reduce(g.b), ctx.reduce(g.c), ctx.reduce(g.d)};
}

TEST(OrderFormula, Values) {
  EXPECT_EQ(group_order_formula(GroupFamily::SL, 2, 3).value, 24);
  EXPECT_EQ(group_order_formula(GroupFamily::SL, 5, 3).value, mpz_class("237783237120"));
  const mpz_class su55 = mpz_class(9765625) * 24 * 126 * 624 * 3126;
  EXPECT_EQ(group_order_formula(GroupFamily::SU, 5, 5).value, su55);
  EXPECT_EQ(group_order_formula(GroupFamily::SL, 1, 7).value, 1);
  EXPECT_EQ(group_order_formula(GroupFamily::SU, 3, 3).value, 6048);
  EXPECT_THROW(group_order_formula(GroupFamily::SL, 5, 4), std::invalid_argument);
  EXPECT_THROW(group_order_formula(GroupFamily::SL, 5, 15), std::invalid_argument);
  EXPECT_NO_THROW(group_order_formula(GroupFamily::SL, 5, 9));
}

TEST(OrderFormula, SL23AgainstExplicitClosure) {
  const Field F = Field::prime(3);
  FqMatrix u = FqMatrix::identity();
  u(0, 1) = 1;
  FqMatrix s = FqMatrix::identity();
  s(0, 0) = 0;
  s(0, 1) = 2;
  s(1, 0) = 1;
  s(1, 1) = 0;
  const FqClosure sl23 = bfs_closure(F, {u, s});
  EXPECT_EQ(mpz_class(static_cast<unsigned long>(sl23.size())), group_order_formula(GroupFamily::SL, 2, 3).value);
}

TEST(ProductReplacement, DeterministicForSeed) {
  const auto ctx = ReductionContext::make(11);
  const auto gens = reduced(ctx, builtin_generators());
  ProductReplacement r1(ctx.field(), gens, 42), r2(ctx.field(), gens, 42), r3(ctx.field(), gens, 43);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const FqMatrix x = r1.next();
    ASSERT_EQ(x, r2.next());
    differs |= x != r3.next();
  }
  EXPECT_TRUE(differs);
}

TEST(StabilizerChain, L3OnBothDomains) {
  const auto ctx = ReductionContext::make(3);
  const auto gens = reduced(ctx, builtin_generators());
  for (ActionDomain dom : {ActionDomain::vectors, ActionDomain::projective}) {
    ChainOptions opts;
    opts.domain = dom;
    const OrderResult r = matrix_group_order(ctx.field(), gens, opts);
    EXPECT_EQ(r.order, 7920);
    EXPECT_EQ(r.status, OrderStatus::exact);
  }
}

TEST(StabilizerChain, MembershipAfterCompletion) {
  const auto ctx = ReductionContext::make(3);
  const Generators g = builtin_generators();
  const auto gens = reduced(ctx, g);
  StabilizerChain chain(ctx.field(), ActionDomain::vectors);
  for (const auto& m : gens) chain.absorb(m);
  chain.complete();
  EXPECT_EQ(chain.order(), 7920);
  EXPECT_TRUE(chain.contains(mul(ctx.field(), gens[1], gens[2])));
  EXPECT_FALSE(chain.contains(ctx.reduce(g.f)));

  const PointSpace& space = chain.space();
  const Point base0 = space.index(chain.base()[0]);
  for (const auto& m : gens) {
    const Point pt = space.image(base0, m);
    const FqMatrix u = chain.transversal(0, pt);
    EXPECT_EQ(space.image(base0, u), pt);
    EXPECT_TRUE(mul(ctx.field(), u, chain.transversal_inverse(0, pt)).is_identity());
  }
  EXPECT_TRUE(chain.transversal(0, base0).is_identity());
}

TEST(StabilizerChain, CertifiedAgainstTargetAtEleven) {
  const auto ctx = ReductionContext::make(11);
  const auto gens = reduced(ctx, builtin_generators());
  ChainOptions opts;
  opts.seed = 1;
  const OrderResult r = matrix_group_order(ctx.field(), gens, opts, theorem_target(ctx));
  EXPECT_EQ(r.order, group_order_formula(GroupFamily::SL, 5, 11).value);
  EXPECT_EQ(r.status, OrderStatus::certified);
}

TEST(StabilizerChain, TargetPreconditions) {
  const auto ctx = ReductionContext::make(11);
  const Generators g = builtin_generators();
  auto gens = reduced(ctx, g);
  gens.push_back(scale(ctx.field(), FqMatrix::identity(), 2));
  EXPECT_THROW(matrix_group_order(ctx.field(), gens, {}, theorem_target(ctx)), std::invalid_argument);
  EXPECT_THROW(matrix_group_order(ctx.field(), reduced(ctx, g), {}, group_order_formula(GroupFamily::SL, 5, 13)),
               std::invalid_argument);
}

TEST(StabilizerChain, TightMemoryIsInconclusive) {
  const auto ctx = ReductionContext::make(11);
  const auto gens = reduced(ctx, builtin_generators());
  ChainOptions opts;
  opts.max_memory = 1 << 16;
  EXPECT_THROW(matrix_group_order(ctx.field(), gens, opts, theorem_target(ctx)), Inconclusive);
}

// Cyclic and two-generated subgroups of the reduced group with at most 100
// elements; the chain order must equal the BFS closure size.
void cross_validate(std::uint32_t p, int want) {
  const auto ctx = ReductionContext::make(p);
  const Field& F = ctx.field();
  const auto gens = reduced(ctx, builtin_generators());
  ProductReplacement rnd(F, gens, p);
  std::vector<FqMatrix> pool(gens.begin(), gens.end());
  for (int i = 0; i < 30; ++i) pool.push_back(rnd.next());

  std::vector<std::vector<FqMatrix>> candidates;
  for (const auto& x : pool) {
    candidates.push_back({x});
    for (const auto& y : gens) candidates.push_back({x, y});
    const auto xi = inverse(F, x);
    candidates.push_back({mul(F, mul(F, xi, gens[0]), x), mul(F, mul(F, xi, gens[1]), x)});
    candidates.push_back({mul(F, mul(F, xi, gens[1]), x), mul(F, mul(F, xi, gens[2]), x)});
  }

  int tested = 0;
  for (const auto& cand : candidates) {
    std::size_t size;
    try {
      size = bfs_closure(F, cand, 100).size();
    } catch (const ClosureExceedsCap&) {
      continue;
    }
    for (ActionDomain dom : {ActionDomain::vectors, ActionDomain::projective}) {
      ChainOptions opts;
      opts.domain = dom;
      opts.seed = static_cast<std::uint64_t>(tested);
      const OrderResult r = matrix_group_order(F, cand, opts);
      ASSERT_EQ(r.order, static_cast<unsigned long>(size)) << "p=" << p << " candidate " << tested;
      ASSERT_EQ(r.status, OrderStatus::exact);
    }
    ++tested;
  }
  EXPECT_GE(tested, want) << "p=" << p;
}

TEST(StabilizerChainProperty, MatchesClosureSizeAtThree) { cross_validate(3, 40); }
TEST(StabilizerChainProperty, MatchesClosureSizeAtFive) { cross_validate(5, 40); }
TEST(StabilizerChainProperty, MatchesClosureSizeAtEleven) { cross_validate(11, 40); }

}  // namespace
}  // namespace amalgam
