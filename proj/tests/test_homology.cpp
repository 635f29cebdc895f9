#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace gtest_util;

namespace {

using Dims = std::vector<std::size_t>;

Dims ext_dims(const Module<GF>& m, const Module<GF>& n, std::size_t b) { return ext_table(m, n, b).dims; }

Dims env_dims(const AlgebraPtr<GF>& a, std::size_t b) {
  auto e = enveloping(a);
  return ext_table(bimodule_as_env_module(a), regular_right(e), b).dims;
}

}  // namespace

TEST(Ext, DualNumbersSimpleIsPeriodic) {
  auto d = builtin("dual-numbers");
  auto s = simple_module(d, 0);
  EXPECT_EQ(ext_dims(s, s, 6), Dims(7, 1));
  EXPECT_EQ(ext_dims(s, regular_right(d), 4), (Dims{1, 0, 0, 0, 0}));
}

TEST(Ext, PathAlgebraA2) {
  auto a = builtin("A2-path");
  auto s = simples(a);
  // one nonsplit extension between the two simples, nothing above degree 1
  EXPECT_EQ(ext_dims(s[0], s[1], 3), (Dims{0, 1, 0, 0}));
  EXPECT_EQ(ext_dims(s[1], s[0], 3), (Dims{0, 0, 0, 0}));
  EXPECT_EQ(ext_dims(s[0], s[0], 3), (Dims{1, 0, 0, 0}));
}

TEST(Ext, DegreeZeroIsHom) {
  std::mt19937_64 rng(5);
  for (const auto& a : corpus()) {
    auto ms = sample_modules(a, rng, 4, 14);
    for (const auto& m : ms)
      for (const auto& n : ms) EXPECT_EQ(ext_dims(m, n, 0)[0], hom_dim(m, n)) << a->name();
  }
}

TEST(Ext, DimensionShiftAlongSyzygies) {
  std::mt19937_64 rng(6);
  for (const auto& a : corpus()) {
    auto ms = sample_modules(a, rng, 4, 14);
    auto reg = regular_right(a);
    for (const auto& m : ms) {
      auto whole = ext_dims(m, reg, 5);
      auto shifted = ext_dims(syzygy(m, 1), reg, 4);
      for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(whole[i + 1], shifted[i]) << a->name() << " " << m.label();
    }
  }
}

TEST(Ext, PaddedResolutionGivesSameTable) {
  std::mt19937_64 rng(7);
  for (const auto& a : corpus()) {
    auto ms = sample_modules(a, rng, 3, 14);
    for (const auto& m : ms)
      for (const auto& n : ms) {
        Resolution<GF> res(m);
        const std::size_t k = 1 + rng() % 3, j = rng() % a->num_idempotents();
        auto padded = padded_complex(res, 5, k, j);
        EXPECT_EQ(ext_table_from_complex(padded, n, 4), ext_table(m, n, 4)) << a->name() << " k=" << k;
      }
  }
}

TEST(Ext, BarOracleMatchesResolutionOverEnvelope) {
  for (const auto& name : {"field", "dual-numbers", "A2-path", "kommutativ-33", "trunc-p2"}) {
    auto a = builtin(name);
    EXPECT_EQ(ext_env_bar_oracle(a, 4).dims, env_dims(a, 4)) << name;
  }
  EXPECT_EQ(ext_env_bar_oracle(builtin("kommutativ-33"), 4).dims, (Dims{4, 4, 9, 18, 36}));
  EXPECT_EQ(ext_env_bar_oracle(builtin("dual-numbers"), 4).dims, (Dims{2, 0, 0, 0, 0}));
}

TEST(Ext, DualOfAlgebraAgainstAlgebraMatchesEnvelope) {
  for (const auto& name : {"field", "dual-numbers", "A2-path", "kupisch-22-cyclic", "kommutativ-33"}) {
    auto a = builtin(name);
    auto lhs = ext_dims(coregular(a), regular_right(a), 5);
    auto rhs = env_dims(a, 5);
    for (std::size_t i = 1; i <= 5; ++i) EXPECT_EQ(lhs[i], rhs[i]) << name << " degree " << i;
  }
}

TEST(Pd, StatusExamples) {
  auto d = builtin("dual-numbers");
  EXPECT_TRUE(pd_status(simple_module(d, 0), 6).is_infinite());
  EXPECT_EQ(pd_status(regular_right(d), 6).to_string(), "Finite(0)");
  EXPECT_EQ(pd_status(Module<GF>::zero(d, "0"), 6).to_string(), "Finite(0)");
  auto a = builtin("A2-path");
  EXPECT_EQ(pd_status(simple_module(a, 0), 6).to_string(), "Finite(1)");
  auto n = nakayama({2, 2, 1}, false, GF(2));
  EXPECT_EQ(pd_status(simple_module(n, 0), 6).to_string(), "Finite(2)");
  auto t3 = truncated_poly(GF(3), 3);
  EXPECT_TRUE(pd_status(simple_module(t3, 0), 6).is_infinite());
}

TEST(Pd, FiniteValueIsLastNonvanishingExtIntoAlgebra) {
  std::mt19937_64 rng(8);
  for (const auto& a : corpus()) {
    auto reg = regular_right(a);
    for (const auto& m : sample_modules(a, rng, 6, 16)) {
      auto st = pd_status(m, 6);
      if (!st.is_finite()) continue;
      auto e = ext_dims(m, reg, st.value + 2);
      EXPECT_NE(e[st.value], 0u) << m.label();
      EXPECT_EQ(e[st.value + 1], 0u);
      EXPECT_EQ(e[st.value + 2], 0u);
    }
  }
}

TEST(Dims, GlobalAndGorensteinDimensions) {
  EXPECT_EQ(gldim_status(builtin("field"), 6).to_string(), "Finite(0)");
  EXPECT_EQ(gldim_status(builtin("A2-path"), 6).to_string(), "Finite(1)");
  EXPECT_TRUE(gldim_status(builtin("dual-numbers"), 6).is_infinite());
  EXPECT_EQ(gldim_status(nakayama({2, 2, 1}, false, GF(2)), 6).to_string(), "Finite(2)");

  EXPECT_EQ(gorenstein_dim_status(builtin("dual-numbers"), 6).to_string(), "Finite(0)");
  EXPECT_EQ(gorenstein_dim_status(builtin("A2-path"), 6).to_string(), "Finite(1)");
  EXPECT_EQ(gorenstein_dim_status(builtin("kupisch-22-cyclic"), 6).to_string(), "Finite(0)");
  EXPECT_EQ(gorenstein_dim_status(nakayama({3, 2, 1}, false, GF(2)), 6).to_string(), "Finite(1)");
  auto k = gorenstein_dim_status(builtin("kommutativ-33"), 4);
  EXPECT_FALSE(k.is_finite());
  EXPECT_FALSE(k.symmetry_violation);
}

TEST(Dims, InjectiveDimensionsAgreeOnBothSidesForNakayama) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& s : kupisch_series(n, 3, false)) {
      auto a = nakayama(s, false, GF(2));
      auto r = inj_dim_status(a, Side::right, 6);
      auto l = inj_dim_status(a, Side::left, 6);
      ASSERT_TRUE(r.is_finite() && l.is_finite()) << a->name();
      EXPECT_EQ(r.value, l.value) << a->name();
      EXPECT_LE(r.value, gldim_status(a, 6).value);
    }
}

TEST(Dims, ResourceLimitBecomesExceedsBound) {
  auto saved = settings().max_term_dim;
  settings().max_term_dim = 4;
  auto st = pd_status(simple_module(builtin("kommutativ-33"), 0), 8);
  settings().max_term_dim = saved;
  EXPECT_TRUE(st.exceeds_bound());
  EXPECT_EQ(st.to_string(), "ExceedsBound(8)");
}
