#include <gtest/gtest.h>

#include "amalgam/suites.hpp"

namespace amalgam {
namespace {

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& c : j.at("checks")) c["millis"] = 0;
  return j;
}

TEST(VerifyExact, DefaultRun) {
  const VerificationReport r = verify_exact();
  for (const Check& c : r.checks()) {
    if (c.id == "exact.a_word") continue;
    EXPECT_EQ(c.status, CheckStatus::pass) << c.id << ": " << c.witness;
  }
  for (const char* id : {"exact.unitary.c", "exact.order.bc", "exact.closure.bc", "exact.d_not_in_H",
                         "exact.intersection.HK", "exact.presentation.gl23", "exact.spectrum.bc", "exact.a_in_H"})
    EXPECT_NE(r.find(id), nullptr) << id;
}

TEST(VerifyExact, LiteralWordGivesInverse) {
  const Check* c = verify_exact().find("exact.a_word");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, CheckStatus::fail);
  EXPECT_NE(c->witness.find("a^-1"), std::string::npos);
}

TEST(VerifyExact, PerturbedFixtureIsCaught) {
  Generators g = builtin_generators();
  g.c(0, 2) = -g.c(0, 2);
  const VerificationReport r = verify_exact(g);
  const Check* c = r.find("exact.unitary.c");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, CheckStatus::fail);
  EXPECT_FALSE(c->witness.empty());
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(VerifyExact, DeterministicModuloTiming) {
  EXPECT_EQ(without_timing(verify_exact().to_json()).dump(), without_timing(verify_exact().to_json()).dump());
}

TEST(VerifyMod, UnsupportedPrimes) {
  for (std::uint32_t p : {2u, 9u, 1u}) {
    ModOptions o;
    o.p = p;
    EXPECT_THROW(verify_mod(builtin_generators(), o), UnsupportedPrime) << p;
  }
}

TEST(VerifyMod, QuickLevelPassesAtSmallPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    ModOptions o;
    o.p = p;
    const VerificationReport r = verify_mod(builtin_generators(), o);
    EXPECT_EQ(r.exit_code(), 0) << r.to_text();
    const Check* form = r.find("mod" + std::to_string(p) + ".form");
    ASSERT_NE(form, nullptr);
    const bool inert = p % 8 == 5 || p % 8 == 7;
    EXPECT_EQ(form->status, inert ? CheckStatus::pass : CheckStatus::skip) << p;
  }
}

VerificationReport full_at_three(IdealSign s) {
  ModOptions o;
  o.p = 3;
  o.ideal = s;
  o.level = VerifyLevel::full;
  return verify_mod(builtin_generators(), o);
}

TEST(VerifyMod, FullAtThreeOnePlusOmega) {
  const VerificationReport r = full_at_three(IdealSign::minus);
  EXPECT_EQ(r.exit_code(), 0) << r.to_text();
  for (const char* id : {"mod3.order", "mod3.orbits", "mod3.dual", "mod3.m11.perm11", "mod3.m11.tower",
                         "mod3.m11.perm110", "mod3.ea_rank", "mod3.bf"}) {
    const Check* c = r.find(id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->status, CheckStatus::pass) << id;
  }
  EXPECT_NE(r.find("mod3.m11.tower")->witness.find("on points"), std::string::npos);
}

TEST(VerifyMod, FullAtThreeOneMinusOmega) {
  const VerificationReport r = full_at_three(IdealSign::plus);
  const Check* orbits = r.find("mod3.orbits");
  ASSERT_NE(orbits, nullptr);
  EXPECT_EQ(orbits->status, CheckStatus::fail);
  EXPECT_NE(orbits->witness.find("[55,66] on points, [11,110] on hyperplanes"), std::string::npos) << orbits->witness;
  for (const char* id : {"mod3.order", "mod3.dual", "mod3.m11.perm11", "mod3.m11.tower", "mod3.m11.perm110"})
    EXPECT_EQ(r.find(id)->status, CheckStatus::pass) << id;
  EXPECT_NE(r.find("mod3.m11.tower")->witness.find("on hyperplanes"), std::string::npos);
}

TEST(VerifyMod, TightMemoryGivesInconclusive) {
  ModOptions o;
  o.p = 11;
  o.level = VerifyLevel::full;
  o.chain.max_memory = 1 << 16;
  o.auto_projective = false;
  const VerificationReport r = verify_mod(builtin_generators(), o);
  EXPECT_EQ(r.find("mod11.order")->status, CheckStatus::inconclusive);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Spectrum, OfBC) {
  const Generators g = builtin_generators();
  const Spectrum s = spectrum(g.b * g.c);
  ASSERT_TRUE(s.order.has_value());
  EXPECT_EQ(*s.order, 8u);
  EXPECT_FALSE(s.self_reciprocal);
  EXPECT_TRUE(spectrum(g.a).self_reciprocal);
}

TEST(TheoremTarget, FamilyFollowsSplitting) {
  EXPECT_EQ(theorem_target(ReductionContext::make(11)).family, GroupFamily::SL);
  EXPECT_EQ(theorem_target(ReductionContext::make(5)).family, GroupFamily::SU);
  EXPECT_EQ(theorem_target(ReductionContext::make(5)).q, 5u);
}

}  // namespace
}  // namespace amalgam
