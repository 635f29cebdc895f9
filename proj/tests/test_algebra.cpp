#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "gorhom/io.hpp"

using namespace gtest_util;

namespace {

template <class F>
bool same_row_space(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(a) == rank(b) && rank(vstack(a, b)) == rank(a);
}

template <class F>
Vec<F> random_element(const Algebra<F>& a, std::mt19937_64& rng) {
  Vec<F> v = zero_vec(a.field(), a.dim());
  for (auto& x : v) x = a.field().from_int(static_cast<long long>(rng() % 5));
  return v;
}

}  // namespace

TEST(FromQuiver, DimensionsOfCorpusAlgebras) {
  EXPECT_EQ(builtin("field")->dim(), 1u);
  EXPECT_EQ(builtin("dual-numbers")->dim(), 2u);
  EXPECT_EQ(builtin("A2-path")->dim(), 3u);
  EXPECT_EQ(builtin("kommutativ-33")->dim(), 3u);
  EXPECT_EQ(builtin("kupisch-22-cyclic")->dim(), 4u);
  EXPECT_EQ(builtin("A2-tensor-dual")->dim(), 6u);
  EXPECT_EQ(truncated_poly(GF(3), 3)->dim(), 3u);
  EXPECT_EQ(monomial_local(GF(2), {"x"}, {{"x", "x", "x"}})->dim(), 3u);
}

TEST(FromQuiver, NakayamaDimensionIsSumOfSeries) {
  const GF f(2);
  for (bool cyclic : {false, true})
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& s : kupisch_series(n, 4, cyclic)) {
        auto a = nakayama(s, cyclic, f);
        std::size_t sum = 0;
        for (auto c : s) sum += c;
        EXPECT_EQ(a->dim(), sum) << a->name();
        EXPECT_EQ(a->num_idempotents(), n);
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(a->projective(j).basis.rows(), s[j]);
      }
}

TEST(FromQuiver, AnticommutingLocalAlgebraOverGF3) {
  const GF f(3);
  std::vector<Relation<GF>> rels = {{{1, {"x", "x"}}}, {{1, {"y", "y"}}}, {{1, {"x", "y"}}, {1, {"y", "x"}}}};
  auto a = local_algebra(f, {"x", "y"}, rels, false);
  EXPECT_EQ(a->dim(), 4u);
  EXPECT_FALSE(a->is_commutative());
  EXPECT_TRUE(validate(*a).all_ok());
}

TEST(FromQuiver, RejectsInadmissiblePresentations) {
  const GF f(2);
  QuiverPresentation<GF> q;
  q.vertices = {"1"};
  q.arrows = {{"x", "1", "1"}};
  q.relations = {{{1, {"x", "x", "x"}}}};
  q.max_path_length = 2;
  EXPECT_THROW(from_quiver(q, f), NotAdmissible);
  q.relations = {{{1, {"x"}}}};
  EXPECT_THROW(from_quiver(q, f), NotAdmissible);

  QuiverPresentation<GF> r;
  r.vertices = {"1", "2"};
  r.arrows = {{"a", "1", "2"}, {"b", "2", "1"}, {"c", "1", "1"}};
  r.relations = {{{1, {"a", "b"}}, {1, {"c", "a"}}}};
  r.max_path_length = 3;
  EXPECT_THROW(from_quiver(r, f), InhomogeneousRelation);
  r.relations = {{{1, {"a", "z"}}}};
  EXPECT_THROW(from_quiver(r, f), InvalidPresentation);
  r.relations = {{{1, {"a", "a"}}}};
  EXPECT_THROW(from_quiver(r, f), InvalidPresentation);
}

TEST(Kupisch, AdmissibilityRules) {
  EXPECT_NO_THROW(check_kupisch({2, 1}, false));
  EXPECT_NO_THROW(check_kupisch({1}, false));
  EXPECT_THROW(check_kupisch({2, 2}, false), InadmissibleSeries);
  EXPECT_THROW(check_kupisch({3, 1, 1}, false), InadmissibleSeries);
  EXPECT_THROW(check_kupisch({2, 4}, true), InadmissibleSeries);
  EXPECT_THROW(check_kupisch({1, 2}, true), InadmissibleSeries);
  EXPECT_THROW(check_kupisch({}, true), InadmissibleSeries);
  EXPECT_EQ(nakayama({1}, false, GF(2))->dim(), 1u);
}

TEST(Validate, EveryCorpusAlgebraPasses) {
  for (const auto& a : corpus()) EXPECT_TRUE(validate(*a).all_ok()) << a->name() << ": " << validate(*a).summary();
}

TEST(Radical, TraceFormRadicalMatchesArrowIdeal) {
  for (const auto& a : corpus()) EXPECT_TRUE(same_row_space(radical_basis(*a), a->radical())) << a->name();
  for (std::uint32_t p : {3u, 5u}) {
    auto a = truncated_poly(GF(p), p);
    EXPECT_TRUE(same_row_space(radical_basis(*a), a->radical())) << "p=" << p;
    auto b = nakayama({3, 3, 2}, true, GF(p));
    EXPECT_TRUE(same_row_space(radical_basis(*b), b->radical()));
  }
  auto q = truncated_poly(RationalField{}, 3);
  EXPECT_TRUE(same_row_space(radical_basis(*q), q->radical()));
}

TEST(Structure, RandomTriplesAssociate) {
  std::mt19937_64 rng(11);
  for (const auto& a : corpus()) {
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(*a, rng), y = random_element(*a, rng), z = random_element(*a, rng);
      EXPECT_EQ(a->multiply(a->multiply(x, y), z), a->multiply(x, a->multiply(y, z))) << a->name();
    }
  }
}

TEST(Opposite, ReversesProductsAndIsInvolutive) {
  for (const auto& a : corpus()) {
    auto op = opposite(a);
    EXPECT_EQ(opposite(op), a);
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j)
        for (std::size_t k = 0; k < a->dim(); ++k) EXPECT_EQ(op->c(i, j, k), a->c(j, i, k));
    EXPECT_TRUE(validate(*op).all_ok());
  }
}

TEST(Tensor, StructureConstantsMultiply) {
  auto a = builtin("A2-path");
  auto b = builtin("dual-numbers");
  auto t = tensor(a, b);
  const std::size_t m = b->dim();
  ASSERT_EQ(t->dim(), a->dim() * m);
  EXPECT_EQ(t->num_idempotents(), a->num_idempotents() * b->num_idempotents());
  const GF& f = a->field();
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < a->dim(); ++k)
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t r = 0; r < a->dim(); ++r)
            for (std::size_t s = 0; s < m; ++s)
              EXPECT_EQ(t->c(i * m + j, k * m + l, r * m + s), f.mul(a->c(i, k, r), b->c(j, l, s)));
}

TEST(Enveloping, DimensionAndValidity) {
  for (const auto& name : {"dual-numbers", "A2-path", "kommutativ-33", "kupisch-22-cyclic"}) {
    auto a = builtin(name);
    auto e = enveloping(a);
    EXPECT_EQ(e->dim(), a->dim() * a->dim());
    EXPECT_EQ(enveloping(a), e);
    EXPECT_TRUE(validate(*e).all_ok()) << name;
  }
}

TEST(FromTable, RebuildsQuiverAlgebras) {
  for (const auto& a : corpus()) {
    auto file = algebra_to_file(*a, FieldSpec::prime(2));
    auto b = build_algebra(file, GF(2));
    EXPECT_TRUE(b->same_table(*a)) << a->name();
  }
}

TEST(FromTable, RejectsBrokenTables) {
  const GF f(2);
  // basis e, a, b: a*a = b, b*a = a, a*b = 0 is not associative
  std::vector<std::string> basis = {"e", "a", "b"};
  auto vec = [&](std::vector<std::uint32_t> v) { return Vec<GF>(v.begin(), v.end()); };
  std::vector<std::vector<Vec<GF>>> prod(3, std::vector<Vec<GF>>(3, vec({0, 0, 0})));
  for (std::size_t i = 0; i < 3; ++i) {
    prod[0][i][i] = 1;
    prod[i][0][i] = 1;
  }
  prod[1][1] = vec({0, 0, 1});
  prod[2][1] = vec({0, 1, 0});
  EXPECT_THROW(from_table(basis, vec({1, 0, 0}), prod, {vec({1, 0, 0})}, f), ValidationFailed);
  prod[2][1] = vec({0, 0, 0});
  EXPECT_NO_THROW(from_table(basis, vec({1, 0, 0}), prod, {vec({1, 0, 0})}, f));
  EXPECT_THROW(from_table(basis, vec({0, 1, 0}), prod, {vec({1, 0, 0})}, f), ValidationFailed);
}

TEST(AlgebraFile, QuiverFileParsesToDualNumbers) {
  auto file = parse_algebra_file(R"({"name": "d", "field": {"kind": "prime", "p": 2},
    "quiver": {"vertices": ["1"], "arrows": [{"name": "a", "source": "1", "target": "1"}],
               "relations": ["a*a"], "max_path_length": 2}})");
  auto a = build_algebra(file, GF(2));
  EXPECT_TRUE(a->same_table(*builtin("dual-numbers")));
}

TEST(AlgebraFile, RoundTrip) {
  std::vector<std::string> docs = {
      R"({"field": {"kind": "rational"}, "quiver": {"vertices": ["1", "2"],
          "arrows": [{"name": "a", "source": "1", "target": "2"}, {"name": "b", "source": "2", "target": "1"}],
          "relations": [[{"coeff": "1/2", "path": "a*b"}], "b*a"], "max_path_length": 3}})",
      R"({"builtin": "kommutativ-33"})",
      R"({"name": "n", "family": {"family": "nakayama-cyclic", "series": [2, 3]}})",
  };
  for (const auto& d : docs) {
    auto f1 = parse_algebra_file(d);
    auto f2 = parse_algebra_file(serialize_algebra_file(f1));
    EXPECT_EQ(f1, f2);
  }
  auto env = algebra_to_file(*enveloping(builtin("A2-path")), FieldSpec::prime(2));
  EXPECT_EQ(parse_algebra_file(serialize_algebra_file(env)), env);
  auto rebuilt = build_algebra(env, GF(2));
  EXPECT_TRUE(rebuilt->same_table(*enveloping(builtin("A2-path"))));
}

TEST(AlgebraFile, Diagnostics) {
  auto msg = [](const std::string& text) {
    try {
      parse_algebra_file(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg(R"({"quiver": {"vertices": ["1"], "arrows": [{"name": "x", "source": "1", "target": "1"}],
                   "relations": [[{"coeff": "1/2", "path": "x*x"}]]}})")
                .find("relations[0][0].coeff"),
            std::string::npos);
  EXPECT_NE(msg(R"({"table": {"basis": ["e"], "unit": {"e": 1}, "products": []}})").find("idempotents"),
            std::string::npos);
  EXPECT_NE(msg("{\n  \"builtin\": \n}").find("line 3"), std::string::npos);
  EXPECT_NE(msg(R"({"builtin": "field", "family": {"family": "x"}})").find("exactly one"), std::string::npos);
  EXPECT_NE(msg(R"({"field": {"kind": "prime", "p": 4}, "builtin": "field"})").find("field.p"), std::string::npos);
}

TEST(Corpus, UnknownBuiltin) { EXPECT_THROW(builtin("nope"), UnknownName); }
