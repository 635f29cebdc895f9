#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace gtest_util;

namespace {

std::vector<AlgebraPtr<GF>> gorenstein_corpus() {
  std::vector<AlgebraPtr<GF>> out;
  for (const auto& a : corpus())
    if (gorenstein_dim(a, 6).is_finite()) out.push_back(a);
  return out;
}

}  // namespace

TEST(Selfinjective, Examples) {
  EXPECT_TRUE(is_selfinjective(builtin("field")));
  EXPECT_TRUE(is_selfinjective(builtin("dual-numbers")));
  EXPECT_TRUE(is_selfinjective(builtin("kupisch-22-cyclic")));
  EXPECT_TRUE(is_selfinjective(nakayama({3, 3}, true, GF(2))));
  EXPECT_TRUE(is_selfinjective(truncated_poly(GF(5), 4)));
  EXPECT_FALSE(is_selfinjective(builtin("A2-path")));
  EXPECT_FALSE(is_selfinjective(builtin("kommutativ-33")));
  EXPECT_FALSE(is_selfinjective(nakayama({2, 3}, true, GF(2))));
  EXPECT_FALSE(is_selfinjective(builtin("A2-tensor-dual")));
}

TEST(Stable, Examples) {
  auto d = builtin("dual-numbers");
  EXPECT_TRUE(stable_status(simple_module(d, 0), 6).stable());
  auto a = builtin("A2-path");
  auto st = stable_status(simple_module(a, 0), 6);
  ASSERT_FALSE(st.stable());
  EXPECT_EQ(*st.first_nonvanishing, 1u);
  EXPECT_TRUE(stable_status(regular_right(a), 6).stable());
}

TEST(GP, CertificateExamples) {
  auto d = builtin("dual-numbers");
  EXPECT_EQ(gp_certificate(simple_module(d, 0), 6).to_string(), "GPCertified(selfinjective)");
  auto a = builtin("A2-path");
  EXPECT_EQ(gp_certificate(projective_module(a, 0), 6).to_string(), "GPCertified(projective)");
  EXPECT_EQ(gp_certificate(Module<GF>::zero(a, "0"), 6).to_string(), "GPCertified(zero module)");
  auto s1 = gp_certificate(simple_module(a, 0), 6);
  EXPECT_EQ(s1.verdict, GPVerdict::not_gp);
  EXPECT_EQ(s1.leg, "ext");
  EXPECT_EQ(s1.degree, 1u);
  // D(A) over A2 is P(1) + S(1); the simple summand breaks it
  EXPECT_EQ(gp_certificate(coregular(a), 6).verdict, GPVerdict::not_gp);
}

TEST(GP, NonGorensteinAlgebraNeverCertifiesNonProjectives) {
  auto k = builtin("kommutativ-33");
  for (const auto& m : {simple_module(k, 0), coregular(k), syzygy(coregular(k), 1)}) {
    auto c = gp_certificate(m, 4);
    EXPECT_NE(c.verdict, GPVerdict::gp_certified) << m.label();
  }
  auto s = gp_certificate(simple_module(k, 0), 4);
  EXPECT_EQ(s.verdict, GPVerdict::not_gp);
}

TEST(GP, CertifiedImpliesStable) {
  std::mt19937_64 rng(41);
  for (const auto& a : corpus())
    for (const auto& m : sample_modules(a, rng, 6, 16)) {
      auto c = gp_certificate(m, 5);
      if (c.verdict == GPVerdict::not_gp) continue;
      EXPECT_TRUE(stable_status(m, 5).stable()) << a->name() << " " << m.label();
    }
}

TEST(GP, SyzygyAtGorensteinDimensionIsCertified) {
  std::mt19937_64 rng(42);
  for (const auto& a : gorenstein_corpus()) {
    auto g = gorenstein_dim(a, 6);
    for (const auto& m : sample_modules(a, rng, 5, 16))
      EXPECT_TRUE(gp_certificate(syzygy(m, g.value), 6).certified()) << a->name() << " " << m.label();
  }
}

TEST(Gpd, Examples) {
  auto a = builtin("A2-path");
  EXPECT_EQ(gpd_status(simple_module(a, 0), 6).to_string(), "Finite(1)");
  EXPECT_EQ(gpd_status(coregular(a), 6).to_string(), "Finite(1)");
  auto d = builtin("dual-numbers");
  EXPECT_EQ(gpd_status(simple_module(d, 0), 6).to_string(), "Finite(0)");
  auto t3 = truncated_poly(GF(3), 3);
  EXPECT_EQ(gpd_status(simple_module(t3, 0), 6).to_string(), "Finite(0)");
  EXPECT_TRUE(pd_status(simple_module(t3, 0), 6).is_infinite());
  EXPECT_TRUE(gpd_status(simple_module(builtin("kommutativ-33"), 0), 4).exceeds_bound());
}

TEST(Gpd, EqualsLargestNonvanishingExt) {
  std::mt19937_64 rng(43);
  std::size_t finite = 0;
  for (const auto& a : corpus())
    for (const auto& m : sample_modules(a, rng, 8, 16)) {
      auto g = gpd_status(m, 6);
      if (!g.is_finite()) continue;
      ++finite;
      auto sup = sup_ext_nonvanishing(m, 6);
      EXPECT_EQ(sup.degree.value_or(0), g.value) << a->name() << " " << m.label();
    }
  EXPECT_GT(finite, 40u);
}

TEST(Gpd, NeverExceedsPd) {
  std::mt19937_64 rng(44);
  for (const auto& a : gorenstein_corpus())
    for (const auto& m : sample_modules(a, rng, 5, 16)) {
      auto pd = pd_status(m, 6);
      auto g = gpd_status(m, 6);
      if (pd.is_finite()) {
        ASSERT_TRUE(g.is_finite());
        EXPECT_EQ(g.value, pd.value) << m.label();
      }
      if (g.is_finite()) EXPECT_LE(g.value, gorenstein_dim(a, 6).value);
    }
}

TEST(SupExt, Examples) {
  EXPECT_EQ(sup_ext_nonvanishing(Module<GF>::zero(builtin("field"), "0"), 4).to_string(), "empty (exhausted)");
  auto a = builtin("A2-path");
  EXPECT_EQ(sup_ext_nonvanishing(coregular(a), 6).to_string(), "1 (exhausted)");
  auto k = builtin("kommutativ-33");
  auto s = sup_ext_nonvanishing(coregular(k), 5);
  EXPECT_FALSE(s.exhausted);
  EXPECT_EQ(s.degree.value_or(0), 5u);
}
