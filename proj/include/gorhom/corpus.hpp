#ifndef GORHOM_CORPUS_HPP
#define GORHOM_CORPUS_HPP

// Algebra families (Nakayama, truncated polynomial, local with monomial
// relations) and the named examples.

#include <algorithm>
#include <string>
#include <vector>

#include "gorhom/algebra.hpp"

namespace gorhom {

namespace detail {

inline std::string join_series(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

}  // namespace detail

/// Checks a Kupisch series. Linear: c_n = 1, c_i >= 2 below, c_{i+1} >= c_i - 1.
/// Cyclic: c_i >= 2 and c_{i+1} >= c_i - 1 with wrap-around.
inline void check_kupisch(const std::vector<std::size_t>& c, bool cyclic) {
  const std::size_t n = c.size();
  if (n == 0) throw InadmissibleSeries("empty Kupisch series");
  for (std::size_t i = 0; i < n; ++i) {
    const bool last = !cyclic && i + 1 == n;
    if (last) {
      if (c[i] != 1) throw InadmissibleSeries("last entry of a linear series must be 1");
      continue;
    }
    if (c[i] < 2) throw InadmissibleSeries("entry " + std::to_string(i + 1) + " must be at least 2");
    const std::size_t next = c[(i + 1) % n];
    if (next + 1 < c[i])
      throw InadmissibleSeries("entry " + std::to_string(i + 2) + " drops by more than 1");
  }
}

template <class F>
QuiverPresentation<F> nakayama_presentation(const std::vector<std::size_t>& series, bool cyclic, const F& field) {
  check_kupisch(series, cyclic);
  const std::size_t n = series.size();
  QuiverPresentation<F> q;
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  const std::size_t narrows = cyclic ? n : n - 1;
  for (std::size_t i = 0; i < narrows; ++i)
    q.arrows.push_back({"a" + std::to_string(i + 1), std::to_string(i + 1), std::to_string((i + 1) % n + 1)});
  std::size_t longest = 1;
  for (std::size_t i = 0; i < n; ++i) {
    longest = std::max(longest, series[i]);
    if (!cyclic && i + series[i] >= n) continue;  // no path of that length
    RelationTerm<F> t{field.one(), {}};
    for (std::size_t s = 0; s < series[i]; ++s) t.path.push_back("a" + std::to_string((i + s) % n + 1));
    q.relations.push_back({t});
  }
  q.max_path_length = static_cast<int>(std::max<std::size_t>(longest, 2));
  return q;
}

/// Nakayama algebra with the given Kupisch series on an oriented line or cycle.
template <class F>
AlgebraPtr<F> nakayama(const std::vector<std::size_t>& series, bool cyclic, const F& field, std::string name = "") {
  if (name.empty())
    name = std::string(cyclic ? "nakayama-cyclic" : "nakayama-linear") + "[" + detail::join_series(series) + "]";
  return from_quiver(nakayama_presentation(series, cyclic, field), field, name);
}

/// k[T]/(T^n).
template <class F>
AlgebraPtr<F> truncated_poly(const F& field, std::size_t n, std::string name = "") {
  if (n == 0) throw PreconditionUnmet("truncation must be at least 1");
  if (name.empty()) name = "trunc-" + std::to_string(n);
  QuiverPresentation<F> q;
  q.vertices = {"1"};
  if (n >= 2) {
    q.arrows = {{"x", "1", "1"}};
    q.relations = {{{field.one(), std::vector<std::string>(n, "x")}}};
    q.max_path_length = static_cast<int>(n);
  }
  return from_quiver(q, field, name);
}

/// One vertex with loops `gens`, the given relations, and commutators when
/// `commutative`. The path-length bound is searched up to 16 when not given.
template <class F>
AlgebraPtr<F> local_algebra(const F& field, const std::vector<std::string>& gens, std::vector<Relation<F>> relations,
                            bool commutative, std::string name = "", int max_path_length = 0) {
  QuiverPresentation<F> q;
  q.vertices = {"1"};
  for (const auto& g : gens) q.arrows.push_back({g, "1", "1"});
  if (commutative)
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        relations.push_back({{field.one(), {gens[i], gens[j]}}, {field.neg(field.one()), {gens[j], gens[i]}}});
  q.relations = std::move(relations);
  if (max_path_length > 0) {
    q.max_path_length = max_path_length;
    return from_quiver(q, field, name);
  }
  for (int len = 2;; ++len) {
    q.max_path_length = len;
    try {
      return from_quiver(q, field, name);
    } catch (const NotAdmissible&) {
      if (len >= 16) throw;
    }
  }
}

/// Local algebra with the given monomials set to zero.
template <class F>
AlgebraPtr<F> monomial_local(const F& field, const std::vector<std::string>& gens,
                             const std::vector<std::vector<std::string>>& monomials, bool commutative = false,
                             std::string name = "") {
  std::vector<Relation<F>> rels;
  for (const auto& m : monomials) rels.push_back({{field.one(), m}});
  return local_algebra(field, gens, std::move(rels), commutative, std::move(name));
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"field",          "dual-numbers",     "A2-path",  "kommutativ-33",
                                                 "kupisch-22-cyclic", "trunc-p2", "A2-tensor-dual"};
  return names;
}

/// Named examples, all over GF(2).
inline AlgebraPtr<PrimeField> builtin(const std::string& name) {
  const PrimeField f(2);
  if (name == "field") return truncated_poly(f, 1, "field");
  if (name == "dual-numbers") return truncated_poly(f, 2, "dual-numbers");
  if (name == "A2-path") return nakayama({2, 1}, false, f, "A2-path");
  if (name == "kommutativ-33")
    return monomial_local(f, {"x", "y"}, {{"x", "x"}, {"y", "y"}, {"x", "y"}, {"y", "x"}}, false, "kommutativ-33");
  if (name == "kupisch-22-cyclic") return nakayama({2, 2}, true, f, "kupisch-22-cyclic");
  if (name == "trunc-p2") return truncated_poly(f, 2, "trunc-p2");
  if (name == "A2-tensor-dual") return tensor(builtin("A2-path"), builtin("dual-numbers"), "A2-tensor-dual");
  throw UnknownName("unknown builtin algebra '" + name + "'");
}

/// All admissible Kupisch series of length n with entries at most hi.
inline std::vector<std::vector<std::size_t>> kupisch_series(std::size_t n, std::size_t hi, bool cyclic) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(n, 1);
  for (;;) {
    try {
      check_kupisch(cur, cyclic);
      out.push_back(cur);
    } catch (const InadmissibleSeries&) {
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == hi) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace gorhom

#endif  // GORHOM_CORPUS_HPP
