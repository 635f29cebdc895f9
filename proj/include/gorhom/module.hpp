#ifndef GORHOM_MODULE_HPP
#define GORHOM_MODULE_HPP

// Right modules as one action matrix per algebra basis element, with the
// row-vector convention m . a = m * rho(a), so rho(ab) = rho(a) rho(b).

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gorhom/algebra.hpp"

namespace gorhom {

template <class F>
class Module {
 public:
  using element = typename F::element;

  Module(AlgebraPtr<F> alg, std::size_t dim, std::vector<Matrix<F>> action, std::string label = "")
      : data_(std::make_shared<Data>(std::move(alg), dim, std::move(action), std::move(label))) {
    const auto& a = *data_->alg;
    if (data_->action.size() != a.dim()) throw DimensionMismatch("module needs one action matrix per basis element");
    for (const auto& m : data_->action)
      if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("action matrix has wrong shape");
  }

  static Module zero(AlgebraPtr<F> alg, std::string label = "0") {
    const std::size_t n = alg->dim();
    std::vector<Matrix<F>> act(n, Matrix<F>(alg->field(), 0, 0));
    return Module(std::move(alg), 0, std::move(act), std::move(label));
  }

  const AlgebraPtr<F>& algebra() const noexcept { return data_->alg; }
  const F& field() const noexcept { return data_->alg->field(); }
  std::size_t dim() const noexcept { return data_->dim; }
  bool is_zero() const noexcept { return data_->dim == 0; }
  const std::string& label() const noexcept { return data_->label; }

  Module with_label(std::string label) const {
    return Module(data_->alg, data_->dim, data_->action, std::move(label));
  }

  const Matrix<F>& action(std::size_t b) const { return data_->action.at(b); }
  const std::vector<Matrix<F>>& actions() const noexcept { return data_->action; }

  /// rho(x) for an arbitrary algebra element x.
  Matrix<F> action_of(std::span<const element> x) const {
    Matrix<F> out(field(), dim(), dim());
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!field().is_zero(x[k])) out = out + data_->action[k].scaled(x[k]);
    return out;
  }

  Vec<F> act(std::span<const element> v, std::size_t b) const { return vec_mul(field(), v, data_->action[b]); }

  Vec<F> act_element(std::span<const element> v, std::span<const element> x) const {
    Vec<F> out = zero_vec(field(), dim());
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!field().is_zero(x[k])) axpy<F>(field(), out, x[k], act(v, k));
    return out;
  }

  /// RREF basis of M e_j (the image of rho(e_j)).
  const Matrix<F>& component(std::size_t j) const {
    std::call_once(data_->component_once, [this] {
      const auto& a = *data_->alg;
      for (const auto& e : a.idempotents()) data_->components.push_back(rref(action_of(e)).reduced);
      for (auto& c : data_->components) {
        std::size_t r = 0;
        while (r < c.rows() && !is_zero_vec<F>(field(), c.row(r))) ++r;
        Matrix<F> trimmed(field(), r, dim());
        for (std::size_t i = 0; i < r; ++i) std::copy(c.row(i).begin(), c.row(i).end(), trimmed.row(i).begin());
        c = std::move(trimmed);
      }
    });
    return data_->components.at(j);
  }

  /// RREF basis of M J.
  const Matrix<F>& radical_subspace() const {
    std::call_once(data_->radical_once, [this] {
      const auto& a = *data_->alg;
      EchelonBasis<F> span(field(), dim());
      const auto& g = a.radical_generators();
      std::vector<Matrix<F>> acts;
      for (std::size_t r = 0; r < g.rows(); ++r) acts.push_back(action_of(g.row(r)));
      for (const auto& m : acts)
        for (std::size_t i = 0; i < dim(); ++i) span.add(m.row(i));
      data_->radical = span.matrix();
    });
    return data_->radical;
  }

  std::size_t top_dim() const { return dim() - radical_subspace().rows(); }

  bool operator==(const Module& o) const {
    return same_algebra(algebra(), o.algebra()) && dim() == o.dim() && actions() == o.actions();
  }

 private:
  struct Data {
    Data(AlgebraPtr<F> a, std::size_t d, std::vector<Matrix<F>> act, std::string l)
        : alg(std::move(a)), dim(d), action(std::move(act)), label(std::move(l)), radical(alg->field(), 0, d) {}
    AlgebraPtr<F> alg;
    std::size_t dim;
    std::vector<Matrix<F>> action;
    std::string label;
    std::once_flag component_once;
    std::vector<Matrix<F>> components;
    std::once_flag radical_once;
    Matrix<F> radical;
  };
  std::shared_ptr<Data> data_;
};

template <class F>
void require_same_algebra(const Module<F>& m, const Module<F>& n, const char* what) {
  if (!same_algebra(m.algebra(), n.algebra()))
    throw AlgebraMismatch(std::string(what) + ": modules over different algebras");
}

/// A module homomorphism f(m) = m * matrix.
template <class F>
struct ModuleMap {
  Module<F> source;
  Module<F> target;
  Matrix<F> matrix;

  bool is_intertwining() const {
    const std::size_t n = source.algebra()->dim();
    for (std::size_t b = 0; b < n; ++b)
      if (source.action(b) * matrix != matrix * target.action(b)) return false;
    return true;
  }

  bool is_isomorphism() const {
    return source.dim() == target.dim() && rank(matrix) == source.dim();
  }
};

/// Checks rho(unit) = 1 and rho(b_i) rho(b_j) = sum_k c(i,j,k) rho(b_k).
template <class F>
bool is_valid_module(const Module<F>& m) {
  const auto& a = *m.algebra();
  if (m.action_of(a.unit()) != Matrix<F>::identity(m.field(), m.dim())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix<F> rhs(m.field(), m.dim(), m.dim());
      for (const auto& [k, v] : a.product_terms(i, j)) rhs = rhs + m.action(k).scaled(v);
      if (m.action(i) * m.action(j) != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

template <class F>
Module<F> regular_right(const AlgebraPtr<F>& a) {
  return Module<F>(a, a->dim(), a->right_mult_all(), "A");
}

/// D(A) with (f.a)(x) = f(a x); rho(b) is the transpose of left multiplication.
template <class F>
Module<F> coregular(const AlgebraPtr<F>& a) {
  std::vector<Matrix<F>> act;
  for (std::size_t b = 0; b < a->dim(); ++b) act.push_back(a->left_mult(b).transpose());
  return Module<F>(a, a->dim(), std::move(act), "D(A)");
}

/// Vector-space dual D(M) as a module over the opposite algebra.
template <class F>
Module<F> vector_dual(const Module<F>& m) {
  std::vector<Matrix<F>> act;
  for (const auto& r : m.actions()) act.push_back(r.transpose());
  return Module<F>(opposite(m.algebra()), m.dim(), std::move(act), "D(" + m.label() + ")");
}

template <class F>
Module<F> projective_module(const AlgebraPtr<F>& a, std::size_t j) {
  const auto& pd = a->projective(j);
  return Module<F>(a, pd.basis.rows(), pd.action, "P(" + std::to_string(j + 1) + ")");
}

template <class F>
std::vector<Module<F>> indecomposable_projectives(const AlgebraPtr<F>& a) {
  std::vector<Module<F>> out;
  for (std::size_t j = 0; j < a->num_idempotents(); ++j) out.push_back(projective_module(a, j));
  return out;
}

/// Submodule spanned by the rows of `rows` (which must be invariant).
/// Returns the module and its inclusion map matrix (RREF basis rows).
template <class F>
std::pair<Module<F>, Matrix<F>> submodule(const Module<F>& m, const Matrix<F>& rows, std::string label = "") {
  const F& field = m.field();
  EchelonBasis<F> span(field, m.dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) span.add(rows.row(r));
  Matrix<F> basis = span.matrix();
  auto piv = rref(basis).pivots;
  const std::size_t d = basis.rows();
  std::vector<Matrix<F>> act;
  for (std::size_t b = 0; b < m.algebra()->dim(); ++b) {
    Matrix<F> x(field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto img = m.act(basis.row(i), b);
      if (!span.contains(img)) throw InternalInconsistency("submodule: subspace is not invariant");
      for (std::size_t k = 0; k < d; ++k) x.at(i, k) = img[piv[k]];
    }
    act.push_back(std::move(x));
  }
  return {Module<F>(m.algebra(), d, std::move(act), std::move(label)), std::move(basis)};
}

/// Quotient M / S for an invariant subspace S. Returns the module and the
/// projection matrix (dim M x dim Q).
template <class F>
std::pair<Module<F>, Matrix<F>> quotient(const Module<F>& m, const Matrix<F>& sub, std::string label = "") {
  const F& field = m.field();
  EchelonBasis<F> span(field, m.dim());
  for (std::size_t r = 0; r < sub.rows(); ++r) span.add(sub.row(r));
  std::vector<char> piv(m.dim(), 0);
  for (auto c : span.pivots()) piv[c] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!piv[c]) keep.push_back(c);
  const std::size_t q = keep.size();
  Matrix<F> proj(field, m.dim(), q);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Vec<F> e = zero_vec(field, m.dim());
    e[i] = field.one();
    auto red = span.reduce(e);
    for (std::size_t k = 0; k < q; ++k) proj.at(i, k) = red[keep[k]];
  }
  std::vector<Matrix<F>> act;
  for (std::size_t b = 0; b < m.algebra()->dim(); ++b) {
    Matrix<F> x(field, q, q);
    for (std::size_t i = 0; i < q; ++i) {
      auto img = span.reduce(m.action(b).row(keep[i]));
      for (std::size_t k = 0; k < q; ++k) x.at(i, k) = img[keep[k]];
    }
    act.push_back(std::move(x));
  }
  return {Module<F>(m.algebra(), q, std::move(act), std::move(label)), std::move(proj)};
}

template <class F>
std::vector<Module<F>> simples(const AlgebraPtr<F>& a) {
  std::vector<Module<F>> out;
  for (std::size_t j = 0; j < a->num_idempotents(); ++j) {
    auto p = projective_module(a, j);
    out.push_back(quotient(p, p.radical_subspace(), "S(" + std::to_string(j + 1) + ")").first);
  }
  return out;
}

template <class F>
Module<F> simple_module(const AlgebraPtr<F>& a, std::size_t j) {
  auto p = projective_module(a, j);
  return quotient(p, p.radical_subspace(), "S(" + std::to_string(j + 1) + ")").first;
}

/// Indecomposable injective D(A e_j): functionals on A vanishing on A(1 - e_j).
template <class F>
Module<F> injective_module(const AlgebraPtr<F>& a, std::size_t j) {
  const F& field = a->field();
  const std::size_t n = a->dim();
  Matrix<F> vanish(field, 0, n);
  for (std::size_t i = 0; i < a->num_idempotents(); ++i) {
    if (i == j) continue;
    const auto& e = a->idempotents()[i];
    for (std::size_t k = 0; k < n; ++k) vanish.append_row(a->multiply(a->basis_vector(k), e));
  }
  Matrix<F> sub = nullspace_basis(vanish);
  return submodule(coregular(a), sub, "I(" + std::to_string(j + 1) + ")").first;
}

template <class F>
std::vector<Module<F>> indecomposable_injectives(const AlgebraPtr<F>& a) {
  std::vector<Module<F>> out;
  for (std::size_t j = 0; j < a->num_idempotents(); ++j) out.push_back(injective_module(a, j));
  return out;
}

template <class F>
Module<F> dsum(const Module<F>& m, const Module<F>& n) {
  require_same_algebra(m, n, "dsum");
  std::vector<Matrix<F>> act;
  for (std::size_t b = 0; b < m.algebra()->dim(); ++b) act.push_back(block_diag(m.action(b), n.action(b)));
  return Module<F>(m.algebra(), m.dim() + n.dim(), std::move(act), "dsum(" + m.label() + "," + n.label() + ")");
}

/// A as a right A^e-module: m . (x (x) y) = x m y.
template <class F>
Module<F> bimodule_as_env_module(const AlgebraPtr<F>& a) {
  auto env = enveloping(a);
  const std::size_t n = a->dim();
  std::vector<Matrix<F>> act;
  act.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) act.push_back(a->left_mult(i) * a->right_mult(j));
  return Module<F>(env, n, std::move(act), "Aee");
}

}  // namespace gorhom

#endif  // GORHOM_MODULE_HPP
