#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "gorhom/expr.hpp"

using namespace gtest_util;

namespace {

template <class F>
Module<F> conjugate(const Module<F>& m, std::mt19937_64& rng) {
  const F& f = m.field();
  for (;;) {
    auto g = random_matrix(f, m.dim(), m.dim(), rng);
    if (rank(g) != m.dim()) continue;
    auto ginv = *solve(g, Matrix<F>::identity(f, m.dim()));
    std::vector<Matrix<F>> act;
    for (const auto& x : m.actions()) act.push_back(ginv * x * g);
    return Module<F>(m.algebra(), m.dim(), std::move(act), m.label() + "^g");
  }
}

std::vector<std::pair<AlgebraPtr<GF>, std::vector<Module<GF>>>> samples(std::size_t per) {
  std::mt19937_64 rng(21);
  std::vector<std::pair<AlgebraPtr<GF>, std::vector<Module<GF>>>> out;
  for (const auto& a : corpus()) out.emplace_back(a, sample_modules(a, rng, per, 16));
  return out;
}

}  // namespace

TEST(Hom, SmallExamples) {
  auto a2 = builtin("A2-path");
  auto p = indecomposable_projectives(a2);
  EXPECT_EQ(hom_dim(p[1], p[0]), 1u);
  EXPECT_EQ(hom_dim(p[0], p[1]), 0u);
  auto d = builtin("dual-numbers");
  EXPECT_EQ(hom_dim(simple_module(d, 0), regular_right(d)), 1u);
  EXPECT_EQ(hom_dim(regular_right(d), regular_right(d)), 2u);
  auto k = builtin("kommutativ-33");
  EXPECT_EQ(hom_dim(simple_module(k, 0), regular_right(k)), 2u);
}

TEST(Hom, PresentationMatchesStackedLinearSystem) {
  for (const auto& [a, ms] : samples(4))
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        auto h = hom_basis(ms[i], ms[j]);
        EXPECT_EQ(h.size(), hom_basis_stacked(ms[i], ms[j]).size()) << a->name();
        for (const auto& f : h) EXPECT_TRUE(f.is_intertwining());
      }
}

TEST(Hom, YonedaForIndecomposableProjectives) {
  for (const auto& [a, ms] : samples(5))
    for (const auto& m : ms)
      for (std::size_t j = 0; j < a->num_idempotents(); ++j)
        EXPECT_EQ(hom_dim(projective_module(a, j), m), m.component(j).rows()) << a->name() << " " << m.label();
}

TEST(Hom, VectorSpaceDualityReversesHom) {
  for (const auto& [a, ms] : samples(4))
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j)
        EXPECT_EQ(hom_dim(ms[i], ms[j]), hom_dim(vector_dual(ms[j]), vector_dual(ms[i]))) << a->name();
}

TEST(Module, ConstructedModulesAreValid) {
  for (const auto& [a, ms] : samples(6)) {
    for (const auto& m : ms) EXPECT_TRUE(is_valid_module(m)) << m.label();
    EXPECT_TRUE(is_valid_module(coregular(a)));
    EXPECT_TRUE(is_valid_module(star_dual(regular_right(a))));
  }
}

TEST(Cover, ShortExactAndMinimal) {
  for (const auto& [a, ms] : samples(5))
    for (const auto& m : ms) {
      auto c = projective_cover(m);
      EXPECT_TRUE(c.epi.is_intertwining());
      EXPECT_TRUE(c.inclusion.is_intertwining());
      EXPECT_EQ(rank(c.epi.matrix), m.dim());
      EXPECT_EQ(c.cover.dim(), m.dim() + c.kernel.dim());
      EXPECT_EQ(rank(c.inclusion.matrix), c.kernel.dim());
      EXPECT_TRUE(is_zero_vec(m.field(), (c.inclusion.matrix * c.epi.matrix).data()));
      EXPECT_EQ(c.cover.top_dim(), m.top_dim()) << m.label();
    }
}

TEST(Cover, DifferentialsCompose) {
  for (const auto& a : corpus()) {
    Resolution<GF> res(coregular(a));
    for (std::size_t n = 1; n <= 4; ++n) {
      auto d = res.differential(n) * res.differential(n - 1);
      EXPECT_TRUE(is_zero_vec(a->field(), d.data())) << a->name();
    }
    EXPECT_TRUE(res.minimal_witness());
    EXPECT_TRUE(res.exact_witness());
  }
}

TEST(Syzygy, ProjectivesHaveZeroSyzygy) {
  for (const auto& a : corpus()) {
    EXPECT_TRUE(syzygy(regular_right(a), 1).is_zero());
    for (const auto& p : indecomposable_projectives(a)) EXPECT_TRUE(syzygy(p, 1).is_zero());
  }
  auto d = builtin("dual-numbers");
  EXPECT_EQ(syzygy(simple_module(d, 0), 3).dim(), 1u);
}

TEST(Isomorphism, ConjugatesAreIsomorphic) {
  std::mt19937_64 rng(33);
  for (const auto& [a, ms] : samples(4))
    for (const auto& m : ms) {
      auto n = conjugate(m, rng);
      auto v = is_isomorphic(m, n);
      ASSERT_EQ(v.kind, IsoKind::yes) << m.label() << ": " << v.reason;
      ASSERT_TRUE(v.witness.has_value());
      EXPECT_TRUE((ModuleMap<GF>{m, n, *v.witness}).is_isomorphism());
    }
}

TEST(Isomorphism, DistinguishesNonIsomorphic) {
  auto a2 = builtin("A2-path");
  auto s = simples(a2);
  EXPECT_EQ(is_isomorphic(s[0], s[1]).kind, IsoKind::no);
  auto k = builtin("kommutativ-33");
  auto two = dsum(simple_module(k, 0), simple_module(k, 0));
  auto fold = quotient(regular_right(k), Matrix<GF>(k->field(), 0, 3)).first;
  EXPECT_EQ(is_isomorphic(two, syzygy(simple_module(k, 0), 1)).kind, IsoKind::yes);
  EXPECT_EQ(is_isomorphic(fold, coregular(k)).kind, IsoKind::no);
  EXPECT_EQ(is_isomorphic(regular_right(a2), coregular(a2)).kind, IsoKind::no);
}

TEST(Isomorphism, WitnessIntertwines) {
  std::mt19937_64 rng(34);
  auto a = nakayama({3, 2, 1}, false, GF(2));
  auto m = coregular(a);
  auto n = conjugate(m, rng);
  auto v = is_isomorphic(m, n);
  ASSERT_EQ(v.kind, IsoKind::yes);
  ModuleMap<GF> f{m, n, *v.witness};
  EXPECT_TRUE(f.is_isomorphism());
}

TEST(StarDual, EvaluationIsIsoOnProjectives) {
  for (const auto& a : corpus()) {
    EXPECT_TRUE(eval_to_double_dual(regular_right(a)).is_isomorphism()) << a->name();
    for (const auto& p : indecomposable_projectives(a)) EXPECT_TRUE(eval_to_double_dual(p).is_isomorphism());
    EXPECT_EQ(star_dual(regular_right(a)).dim(), a->dim());
  }
  auto d = builtin("dual-numbers");
  EXPECT_TRUE(eval_to_double_dual(simple_module(d, 0)).is_isomorphism());
  auto a2 = builtin("A2-path");
  // S(2) = P(2) is projective; S(1) has zero dual
  EXPECT_EQ(star_dual(simple_module(a2, 0)).dim(), 0u);
  EXPECT_FALSE(eval_to_double_dual(simple_module(a2, 0)).is_isomorphism());
}

TEST(ModuleExpr, ParsesAndPrints) {
  const std::vector<std::string> good = {"A", "D(A)", "Aee", "S(1)", "P(2)", "omega^3(S(1))",
                                         "star(D(A))", "dsum(S(1),omega^1(P(1)))"};
  for (const auto& s : good) EXPECT_EQ(parse_module_expression(s)->to_string(), s);
  EXPECT_EQ(parse_module_expression(" dsum ( S(1) , A ) ")->to_string(), "dsum(S(1),A)");
}

TEST(ModuleExpr, ErrorsCarryPosition) {
  try {
    parse_module_expression("dsum(S(1),, A)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 11"), std::string::npos) << e.what();
  }
  for (const char* bad : {"", "S()", "S(x)", "omega(S(1))", "dsum(A)", "A)", "star A", "P(1"})
    EXPECT_THROW(parse_module_expression(bad), ParseError) << bad;
}

TEST(ModuleExpr, FuzzNeverCrashes) {
  std::mt19937_64 rng(99);
  const std::string alphabet = "ADSPe()^,1203omgastrdu ";
  for (int t = 0; t < 3000; ++t) {
    std::string s;
    for (std::size_t k = 0, len = rng() % 16; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    try {
      auto e = parse_module_expression(s);
      EXPECT_EQ(parse_module_expression(e->to_string())->to_string(), e->to_string());
    } catch (const ParseError&) {
    }
  }
}

TEST(ModuleExpr, Evaluation) {
  auto a = builtin("A2-path");
  EXPECT_EQ(evaluate(*parse_module_expression("D(A)"), a).dim(), 3u);
  EXPECT_EQ(evaluate(*parse_module_expression("omega^1(S(1))"), a).dim(), 1u);
  EXPECT_EQ(evaluate(*parse_module_expression("dsum(P(1),P(2))"), a).dim(), 3u);
  EXPECT_THROW(evaluate(*parse_module_expression("S(3)"), a), IndexError);
  EXPECT_THROW(parse_module_expression("S(0)"), ParseError);
  EXPECT_THROW(evaluate(*parse_module_expression("Aee"), a), UsageError);
  EXPECT_THROW(evaluate(*parse_module_expression("dsum(A,star(A))"), a), AlgebraMismatch);
  auto env = enveloping(a);
  EXPECT_EQ(evaluate(*parse_module_expression("Aee"), env, a).dim(), 3u);
}
