#ifndef GORHOM_TESTS_COMMON_HPP
#define GORHOM_TESTS_COMMON_HPP

#include <random>
#include <string>
#include <vector>

#include "gorhom/corpus.hpp"
#include "gorhom/gorenstein.hpp"

namespace gtest_util {

using namespace gorhom;
using GF = PrimeField;

template <class F>
Matrix<F> random_matrix(const F& field, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix<F> m(field, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if constexpr (is_prime_field_v<F>) {
        m.at(i, j) = static_cast<typename F::element>(rng() % field.p());
      } else {
        m.at(i, j) = field.from_int(static_cast<long long>(rng() % 7) - 3);
      }
    }
  return m;
}

/// Builtins plus a few linear and cyclic Nakayama algebras.
inline std::vector<AlgebraPtr<GF>> corpus() {
  std::vector<AlgebraPtr<GF>> out;
  for (const auto& n : builtin_names()) out.push_back(builtin(n));
  const GF f(2);
  out.push_back(nakayama({2, 2, 1}, false, f));
  out.push_back(nakayama({3, 2, 1}, false, f));
  out.push_back(nakayama({2, 3}, true, f));
  out.push_back(nakayama({3, 3}, true, f));
  return out;
}

/// Random modules built from A, D(A), simples, projectives and injectives
/// by syzygies, double star duals and direct sums, with dimension <= cap.
template <class F>
std::vector<Module<F>> sample_modules(const AlgebraPtr<F>& a, std::mt19937_64& rng, std::size_t count,
                                      std::size_t cap = 24) {
  std::vector<Module<F>> base = {regular_right(a), coregular(a)};
  for (auto& m : simples(a)) base.push_back(m);
  for (auto& m : indecomposable_projectives(a)) base.push_back(m);
  for (auto& m : indecomposable_injectives(a)) base.push_back(m);
  std::vector<Module<F>> out;
  std::size_t guard = 0;
  while (out.size() < count && guard++ < 40 * count) {
    Module<F> m = base[rng() % base.size()];
    const int op = static_cast<int>(rng() % 4);
    if (op == 1) {
      m = syzygy(m, 1 + rng() % 3);
    } else if (op == 2) {
      m = star_dual(star_dual(m));
    } else if (op == 3) {
      m = dsum(m, base[rng() % base.size()]);
    }
    if (m.dim() == 0 || m.dim() > cap) continue;
    out.push_back(m);
  }
  return out;
}

}  // namespace gtest_util

#endif  // GORHOM_TESTS_COMMON_HPP
