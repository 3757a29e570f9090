#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "amalgam/generators.hpp"
#include "amalgam/matrix.hpp"
#include "test_support.hpp"

namespace amalgam {
namespace {

RingElem t(long x, long y, unsigned k) { return RingElem::canonicalize(x, y, k); }

using Minor = std::vector<std::vector<RingElem>>;

// Oracle: Laplace expansion along the first row.
RingElem cofactor_det(const Minor& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RingElem acc;
  for (std::size_t j = 0; j < n; ++j) {
    Minor sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RingElem> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    const RingElem term = m[0][j] * cofactor_det(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Minor as_minor(const MatrixR& m) {
  Minor out(kDim, std::vector<RingElem>(kDim));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) out[i][j] = m(i, j);
  return out;
}

using Poly = std::vector<RingElem>;

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

CharPoly as_char_poly(const Poly& p) {
  CharPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) out.coeffs.at(i) = p[i];
  return out;
}

RingElem eval_poly(const CharPoly& p, const RingElem& x) {
  RingElem acc;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + p.coeffs[i];
  return acc;
}

class MatrixFixture : public ::testing::Test {
 protected:
  Generators g = builtin_generators();
};

TEST_F(MatrixFixture, BuiltinEntries) {
  EXPECT_EQ(g.a(0, 0), RingElem(-1));
  EXPECT_EQ(g.c(0, 2), t(0, 1, 1));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      EXPECT_EQ(g.f(i, j), RingElem(j == (i + 1) % kDim ? 1 : 0));
}

TEST_F(MatrixFixture, Multiplication) {
  for (const MatrixR* m : {&g.a, &g.b, &g.c, &g.d})
    EXPECT_EQ(*m * MatrixR::identity(), *m);
  MatrixR a2 = MatrixR::identity();
  a2(3, 3) = RingElem(-1);
  a2(4, 4) = RingElem(-1);
  EXPECT_EQ(g.a * g.a, a2);
  EXPECT_TRUE((g.b * g.b).is_identity());
}

TEST_F(MatrixFixture, Adjoint) {
  EXPECT_EQ(adjoint(MatrixR::identity()), MatrixR::identity());
  for (const MatrixR* m : {&g.a, &g.b, &g.c, &g.d, &g.f}) {
    EXPECT_EQ(adjoint(adjoint(*m)), *m);
    EXPECT_TRUE((*m * adjoint(*m)).is_identity());
    EXPECT_TRUE(is_unitary(*m));
  }
  MatrixR two = MatrixR::scalar(RingElem(2));
  EXPECT_FALSE(is_unitary(two));
  EXPECT_THROW(unitary_inverse(two), std::domain_error);
}

TEST_F(MatrixFixture, DeterminantAgainstCofactorOracle) {
  EXPECT_EQ(det(MatrixR::identity()), RingElem(1));
  for (const MatrixR* m : {&g.a, &g.b, &g.c, &g.d}) {
    EXPECT_EQ(det(*m), RingElem(1));
    EXPECT_EQ(cofactor_det(as_minor(*m)), RingElem(1));
  }
  EXPECT_EQ(det(g.f), RingElem(1));
}

TEST_F(MatrixFixture, ElementOrders) {
  EXPECT_EQ(element_order(g.a), 4u);
  EXPECT_EQ(element_order(g.b), 2u);
  EXPECT_EQ(element_order(g.c), 3u);
  EXPECT_EQ(element_order(g.d), 3u);
  EXPECT_EQ(element_order(g.b * g.c), 8u);
  EXPECT_EQ(element_order(g.a * g.d), 2u);
  EXPECT_EQ(element_order(MatrixR::identity()), 1u);
  EXPECT_THROW(element_order(MatrixR::scalar(t(1, 1, 0))), OrderExceedsCap);
  EXPECT_THROW(element_order(g.b * g.c, 7), OrderExceedsCap);
}

TEST_F(MatrixFixture, CharPolyOfIdentity) {
  // (x - 1)^5
  Poly p{RingElem(1)};
  for (int i = 0; i < 5; ++i) p = poly_mul(p, {RingElem(-1), RingElem(1)});
  EXPECT_EQ(char_poly(MatrixR::identity()), as_char_poly(p));
  EXPECT_TRUE(is_self_reciprocal(char_poly(MatrixR::identity())));
}

TEST_F(MatrixFixture, CharPolyOfA) {
  // (x + 1)^2 (x - 1) (x^2 + 1)
  Poly p = poly_mul({RingElem(1), RingElem(1)}, {RingElem(1), RingElem(1)});
  p = poly_mul(p, {RingElem(-1), RingElem(1)});
  p = poly_mul(p, {RingElem(1), RingElem(0), RingElem(1)});
  EXPECT_EQ(char_poly(g.a), as_char_poly(p));
  EXPECT_TRUE(is_self_reciprocal(char_poly(g.a)));
}

TEST_F(MatrixFixture, CharPolyOfBC) {
  const MatrixR bc = g.b * g.c;
  // (x + 1)(x^2 + 1)(x^2 + w x - 1)
  Poly p = poly_mul({RingElem(1), RingElem(1)}, {RingElem(1), RingElem(0), RingElem(1)});
  p = poly_mul(p, {RingElem(-1), RingElem::omega(), RingElem(1)});
  const CharPoly cp = char_poly(bc);
  EXPECT_EQ(cp, as_char_poly(p));
  EXPECT_EQ(cp.coeffs[0], RingElem(-1));
  EXPECT_FALSE(is_self_reciprocal(cp));
  EXPECT_TRUE(power(bc, 8).is_identity());
  EXPECT_FALSE(power(bc, 4).is_identity());
}

TEST_F(MatrixFixture, SelfReciprocalRejectsNonUnitConstant) {
  CharPoly p;
  p.coeffs = {RingElem(2), RingElem(0), RingElem(0), RingElem(0), RingElem(0), RingElem(1)};
  EXPECT_THROW(is_self_reciprocal(p), NonUnitConstantTerm);
}

TEST_F(MatrixFixture, CharPolyMatchesDeterminantAtSamplePoints) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixR m = evaluate_word(g, testing::random_word(rng));
    const CharPoly cp = char_poly(m);
    for (long s = -3; s <= 3; ++s) {
      Minor shifted = as_minor(m);
      for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
          shifted[i][j] = (i == j ? RingElem(s) : RingElem(0)) - shifted[i][j];
      ASSERT_EQ(eval_poly(cp, RingElem(s)), cofactor_det(shifted)) << "trial " << trial << " s=" << s;
    }
  }
}

TEST_F(MatrixFixture, CayleyHamiltonOnRandomWords) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const std::string w = testing::random_word(rng, 10);
    const MatrixR m = evaluate_word(g, w);
    ASSERT_TRUE(evaluate(char_poly(m), m) == MatrixR()) << w;
  }
}

TEST_F(MatrixFixture, DeterminantAndAdjointAreMultiplicative) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const MatrixR m = evaluate_word(g, testing::random_word(rng));
    const MatrixR n = evaluate_word(g, testing::random_word(rng));
    ASSERT_EQ(det(m * n), det(m) * det(n));
    ASSERT_EQ(adjoint(m * n), adjoint(n) * adjoint(m));
  }
  // Non-unitary matrices too: random entries.
  for (int i = 0; i < 10; ++i) {
    MatrixR m, n;
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) {
        m(r, c) = testing::random_ring_elem(rng, 5, 2);
        n(r, c) = testing::random_ring_elem(rng, 5, 2);
      }
    ASSERT_EQ(det(m * n), det(m) * det(n));
    ASSERT_EQ(det(m), cofactor_det(as_minor(m)));
    ASSERT_EQ(adjoint(m * n), adjoint(n) * adjoint(m));
  }
}

TEST_F(MatrixFixture, WordEvaluation) {
  EXPECT_TRUE(evaluate_word(g, "").is_identity());
  EXPECT_EQ(evaluate_word(g, "bc"), g.b * g.c);
  EXPECT_TRUE(evaluate_word(g, "cC").is_identity());
  EXPECT_EQ(evaluate_word(g, "A"), power(g.a, 3));
  EXPECT_THROW(evaluate_word(g, "ax"), std::invalid_argument);
}

TEST_F(MatrixFixture, FixtureRoundTripIsBitExact) {
  const std::string text = to_fixture(g);
  const Generators back = parse_fixture(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(to_fixture(back), text);
  EXPECT_EQ(parse_fixture_block({"1,0,0, 0,0,0, 0,0,0, 0,0,0, 0,0,0",
                                 "0,0,0, 1,0,0, 0,0,0, 0,0,0, 0,0,0",
                                 "0,0,0, 0,0,0, 1,0,0, 0,0,0, 0,0,0",
                                 "0,0,0, 0,0,0, 0,0,0, 1,0,0, 0,0,0",
                                 "0,0,0, 0,0,0, 0,0,0, 0,0,0, 2,0,1"}),
            MatrixR::identity());
  EXPECT_THROW(parse_fixture_block({"1,0,0"}), std::invalid_argument);
}

}  // namespace
}  // namespace amalgam
