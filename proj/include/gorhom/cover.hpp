#ifndef GORHOM_COVER_HPP
#define GORHOM_COVER_HPP

// Projective covers and minimal projective resolutions. Projective terms are
// kept as lists of indecomposable summands e_j A; vectors live in block
// coordinates and the algebra acts blockwise, so large terms never need full
// action matrices.

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gorhom/module.hpp"

namespace gorhom {

/// Process-wide computation settings.
struct Settings {
  std::size_t max_term_dim = 16384;  // largest projective term a resolution may build
  std::uint64_t seed = 20240607;     // seed of the randomized isomorphism search
};

inline Settings& settings() {
  static Settings s;
  return s;
}

/// Right multiplication matrices on each e_i A in local coordinates.
template <class F>
struct LocalActions {
  std::vector<std::vector<Matrix<F>>> idem;    // idem[i][e]: by e_e on e_i A
  std::vector<std::vector<Matrix<F>>> radgen;  // radgen[i][g]: by radical generator g
  std::vector<std::vector<std::vector<Matrix<F>>>> pbasis;  // pbasis[i][j][l]: by basis element l of e_j A
  std::vector<Vec<F>> e_local;                 // coordinates of e_i in e_i A
  std::vector<EchelonBasis<F>> local_radical;  // e_i J in local coordinates
};

namespace detail {

template <class F>
Matrix<F> local_action_of(const ProjectiveData<F>& pd, const F& field, std::span<const typename F::element> x) {
  const std::size_t d = pd.basis.rows();
  Matrix<F> out(field, d, d);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!field.is_zero(x[k])) out = out + pd.action[k].scaled(x[k]);
  return out;
}

}  // namespace detail

template <class F>
std::shared_ptr<const LocalActions<F>> local_actions(const AlgebraPtr<F>& a) {
  std::lock_guard<std::mutex> lock(a->cache_mutex_);
  if (a->local_cache_) return std::static_pointer_cast<const LocalActions<F>>(a->local_cache_);
  const F& field = a->field();
  const std::size_t r = a->num_idempotents();
  auto la = std::make_shared<LocalActions<F>>();
  la->idem.resize(r);
  la->radgen.resize(r);
  la->pbasis.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& pd = a->projective(i);
    for (const auto& e : a->idempotents()) la->idem[i].push_back(detail::local_action_of(pd, field, e));
    const auto& g = a->radical_generators();
    for (std::size_t x = 0; x < g.rows(); ++x) la->radgen[i].push_back(detail::local_action_of(pd, field, g.row(x)));
    la->pbasis[i].resize(r);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& pj = a->projective(j);
      for (std::size_t l = 0; l < pj.basis.rows(); ++l)
        la->pbasis[i][j].push_back(detail::local_action_of(pd, field, pj.basis.row(l)));
    }
    Vec<F> el(pd.basis.rows(), field.zero());
    const auto& e = a->idempotents()[i];
    for (std::size_t m = 0; m < pd.basis.rows(); ++m) el[m] = e[pd.pivots[m]];
    la->e_local.push_back(std::move(el));
    // e_i J = e_i A intersect J, in local coordinates
    EchelonBasis<F> rad(field, pd.basis.rows());
    const auto& J = a->radical();
    for (std::size_t x = 0; x < J.rows(); ++x) {
      auto v = a->multiply(e, J.row(x));
      Vec<F> loc(pd.basis.rows(), field.zero());
      for (std::size_t m = 0; m < pd.basis.rows(); ++m) loc[m] = v[pd.pivots[m]];
      rad.add(loc);
    }
    la->local_radical.push_back(std::move(rad));
  }
  a->local_cache_ = la;
  return la;
}

/// Direct sum of indecomposable projectives e_{j_1} A + ... + e_{j_s} A.
template <class F>
class ProjectiveSum {
 public:
  using element = typename F::element;

  explicit ProjectiveSum(AlgebraPtr<F> a) : alg_(std::move(a)), local_(local_actions(alg_)) {}

  void add(std::size_t j) {
    summands_.push_back(j);
    offsets_.push_back(dim_);
    dim_ += alg_->projective(j).basis.rows();
  }

  const AlgebraPtr<F>& algebra() const noexcept { return alg_; }
  const LocalActions<F>& local() const noexcept { return *local_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return summands_.size(); }
  const std::vector<std::size_t>& summands() const noexcept { return summands_; }
  std::size_t summand(std::size_t k) const { return summands_.at(k); }
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }
  std::size_t block_dim(std::size_t k) const { return alg_->projective(summands_[k]).basis.rows(); }

  /// Applies a per-summand-type local matrix blockwise.
  template <class Pick>
  Vec<F> act_blocks(std::span<const element> v, Pick&& pick) const {
    const F& field = alg_->field();
    Vec<F> out = zero_vec(field, dim_);
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      const std::size_t o = offsets_[k], d = block_dim(k);
      auto in = v.subspan(o, d);
      if (is_zero_vec<F>(field, in)) continue;
      const Matrix<F>& m = pick(summands_[k]);
      std::span<element> dst(out.data() + o, d);
      for (std::size_t t = 0; t < d; ++t) axpy<F>(field, dst, in[t], m.row(t));
    }
    return out;
  }

  Vec<F> act(std::span<const element> v, std::size_t b) const {
    return act_blocks(v, [&](std::size_t i) -> const Matrix<F>& { return alg_->projective(i).action[b]; });
  }
  Vec<F> act_idem(std::span<const element> v, std::size_t e) const {
    return act_blocks(v, [&](std::size_t i) -> const Matrix<F>& { return local_->idem[i][e]; });
  }
  Vec<F> act_radgen(std::span<const element> v, std::size_t g) const {
    return act_blocks(v, [&](std::size_t i) -> const Matrix<F>& { return local_->radgen[i][g]; });
  }
  Vec<F> act_proj_basis(std::span<const element> v, std::size_t j, std::size_t l) const {
    return act_blocks(v, [&](std::size_t i) -> const Matrix<F>& { return local_->pbasis[i][j][l]; });
  }

  /// Whether v lies in (this) J, checked block by block.
  bool in_radical(std::span<const element> v) const {
    const F& field = alg_->field();
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      auto in = v.subspan(offsets_[k], block_dim(k));
      if (is_zero_vec<F>(field, in)) continue;
      if (!local_->local_radical[summands_[k]].contains(in)) return false;
    }
    return true;
  }

  Module<F> to_module(std::string label = "") const {
    std::vector<Matrix<F>> act;
    for (std::size_t b = 0; b < alg_->dim(); ++b) {
      Matrix<F> m(alg_->field(), dim_, dim_);
      for (std::size_t k = 0; k < summands_.size(); ++k) {
        const auto& loc = alg_->projective(summands_[k]).action[b];
        for (std::size_t r = 0; r < loc.rows(); ++r)
          for (std::size_t c = 0; c < loc.cols(); ++c) m.at(offsets_[k] + r, offsets_[k] + c) = loc.at(r, c);
      }
      act.push_back(std::move(m));
    }
    return Module<F>(alg_, dim_, std::move(act), std::move(label));
  }

 private:
  AlgebraPtr<F> alg_;
  std::shared_ptr<const LocalActions<F>> local_;
  std::vector<std::size_t> summands_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

/// A module seen as an ambient space for cover computations.
template <class F>
class ModuleAmbient {
 public:
  using element = typename F::element;

  explicit ModuleAmbient(Module<F> m) : m_(std::move(m)) {
    const auto& a = *m_.algebra();
    for (const auto& e : a.idempotents()) idem_.push_back(m_.action_of(e));
    const auto& g = a.radical_generators();
    for (std::size_t x = 0; x < g.rows(); ++x) radgen_.push_back(m_.action_of(g.row(x)));
  }

  std::size_t dim() const noexcept { return m_.dim(); }
  Vec<F> act_idem(std::span<const element> v, std::size_t e) const { return vec_mul(m_.field(), v, idem_[e]); }
  Vec<F> act_radgen(std::span<const element> v, std::size_t g) const { return vec_mul(m_.field(), v, radgen_[g]); }
  Vec<F> act_proj_basis(std::span<const element> v, std::size_t j, std::size_t l) const {
    return m_.act_element(v, m_.algebra()->projective(j).basis.row(l));
  }

 private:
  Module<F> m_;
  std::vector<Matrix<F>> idem_;
  std::vector<Matrix<F>> radgen_;
};

template <class F>
class SumAmbient {
 public:
  using element = typename F::element;
  explicit SumAmbient(const ProjectiveSum<F>& p) : p_(p) {}
  std::size_t dim() const noexcept { return p_.dim(); }
  Vec<F> act_idem(std::span<const element> v, std::size_t e) const { return p_.act_idem(v, e); }
  Vec<F> act_radgen(std::span<const element> v, std::size_t g) const { return p_.act_radgen(v, g); }
  Vec<F> act_proj_basis(std::span<const element> v, std::size_t j, std::size_t l) const {
    return p_.act_proj_basis(v, j, l);
  }

 private:
  const ProjectiveSum<F>& p_;
};

/// Minimal cover of a submodule K of an ambient space.
template <class F>
struct CoverStep {
  std::vector<std::size_t> summands;  // idempotent type of each generator
  Matrix<F> generators;               // generator images, ambient coordinates
  bool exact = true;                  // images span K
};

/// Chooses generators of K modulo K J. K J = K G where G lifts a basis of
/// J / J^2, because J = A G.
template <class F, class Ambient>
CoverStep<F> cover_subspace(const AlgebraPtr<F>& a, const Ambient& amb, const Matrix<F>& K) {
  const F& field = a->field();
  CoverStep<F> out{{}, Matrix<F>(field, 0, amb.dim()), true};
  const std::size_t target = rank(K);
  if (target == 0) return out;
  EchelonBasis<F> span(field, amb.dim());
  const std::size_t ngen = a->radical_generators().rows();
  for (std::size_t k = 0; k < K.rows() && span.size() < target; ++k)
    for (std::size_t g = 0; g < ngen; ++g) span.add(amb.act_radgen(K.row(k), g));
  for (std::size_t j = 0; j < a->num_idempotents() && span.size() < target; ++j) {
    const std::size_t dj = a->projective(j).basis.rows();
    for (std::size_t k = 0; k < K.rows() && span.size() < target; ++k) {
      auto v = amb.act_idem(K.row(k), j);
      if (span.contains(v)) continue;
      for (std::size_t l = 0; l < dj; ++l) span.add(amb.act_proj_basis(v, j, l));
      out.summands.push_back(j);
      out.generators.append_row(v);
    }
  }
  out.exact = span.size() == target;
  return out;
}

/// Matrix of the cover map P -> ambient: row (g, l) is generator g times the
/// l-th basis element of its summand.
template <class F, class Ambient>
Matrix<F> cover_map_matrix(const AlgebraPtr<F>& a, const Ambient& amb, const std::vector<std::size_t>& summands,
                           const Matrix<F>& generators) {
  Matrix<F> out(a->field(), 0, amb.dim());
  for (std::size_t g = 0; g < summands.size(); ++g) {
    const std::size_t j = summands[g];
    for (std::size_t l = 0; l < a->projective(j).basis.rows(); ++l)
      out.append_row(amb.act_proj_basis(generators.row(g), j, l));
  }
  return out;
}

/// One term of a projective complex: summand types and the images of the
/// generators in the previous term (block coordinates; for degree 0, in the
/// coordinates of the resolved module).
template <class F>
struct ComplexTerm {
  std::vector<std::size_t> summands;
  Matrix<F> images;
};

/// Minimal projective resolution, extended on demand.
template <class F>
class Resolution {
 public:
  explicit Resolution(Module<F> target) : target_(std::move(target)) {
    Matrix<F> id = Matrix<F>::identity(target_.field(), target_.dim());
    syzygies_.push_back(id);
  }

  const Module<F>& target() const noexcept { return target_; }
  const AlgebraPtr<F>& algebra() const noexcept { return target_.algebra(); }

  /// Makes Omega^n available (Omega^0 = target).
  void ensure_syzygy(std::size_t n) {
    while (syzygies_.size() <= n) {
      const std::size_t i = syzygies_.size() - 1;  // compute Omega^{i+1} = ker(P_i -> Omega^i)
      ensure_term(i);
      if (terms_[i].summands.empty()) {
        syzygies_.push_back(Matrix<F>(target_.field(), 0, 0));
        continue;
      }
      const ProjectiveSum<F>& p = sums_[i];
      Matrix<F> map(target_.field(), 0, 0);
      if (i == 0) {
        ModuleAmbient<F> amb(target_);
        map = cover_map_matrix(algebra(), amb, terms_[0].summands, terms_[0].images);
      } else {
        SumAmbient<F> amb(sums_[i - 1]);
        map = cover_map_matrix(algebra(), amb, terms_[i].summands, terms_[i].images);
      }
      Matrix<F> ker = left_kernel(map);
      if (ker.rows() != p.dim() - rank_of_syzygy(i)) exact_ = false;
      for (std::size_t r = 0; r < ker.rows(); ++r)
        if (!p.in_radical(ker.row(r))) minimal_ = false;
      syzygies_.push_back(std::move(ker));
    }
  }

  /// Makes P_n available.
  void ensure_term(std::size_t n) {
    while (terms_.size() <= n) {
      const std::size_t i = terms_.size();
      ensure_syzygy(i);
      const Matrix<F>& K = syzygies_[i];
      CoverStep<F> step{{}, Matrix<F>(target_.field(), 0, 0), true};
      if (K.rows() > 0) {
        if (i == 0) {
          ModuleAmbient<F> amb(target_);
          step = cover_subspace(algebra(), amb, K);
        } else {
          SumAmbient<F> amb(sums_[i - 1]);
          step = cover_subspace(algebra(), amb, K);
        }
      }
      if (!step.exact) exact_ = false;
      ProjectiveSum<F> p(algebra());
      for (auto j : step.summands) p.add(j);
      if (p.dim() > settings().max_term_dim)
        throw ResourceLimit("projective term P_" + std::to_string(i) + " would have dimension " +
                            std::to_string(p.dim()) + " (limit " + std::to_string(settings().max_term_dim) + ")");
      terms_.push_back({std::move(step.summands), std::move(step.generators)});
      sums_.push_back(std::move(p));
    }
  }

  const ComplexTerm<F>& term(std::size_t n) {
    ensure_term(n);
    return terms_[n];
  }
  const ProjectiveSum<F>& projective(std::size_t n) {
    ensure_term(n);
    return sums_[n];
  }
  /// Omega^n as rows in the coordinates of P_{n-1} (or of the target for n = 0).
  const Matrix<F>& syzygy_rows(std::size_t n) {
    ensure_syzygy(n);
    return syzygies_[n];
  }
  std::size_t syzygy_dim(std::size_t n) { return syzygy_rows(n).rows(); }

  /// Smallest n with Omega^{n+1} = 0 among the computed terms, if any.
  /// A zero target yields 0.
  std::optional<std::size_t> length_within(std::size_t bound) {
    if (target_.dim() == 0) return 0;
    for (std::size_t n = 0; n <= bound; ++n)
      if (syzygy_dim(n + 1) == 0) return n;
    return std::nullopt;
  }

  /// Omega^n as a module in its own right, with its basis in the
  /// coordinates of P_{n-1} (identity for n = 0).
  std::pair<Module<F>, Matrix<F>> syzygy_module_with_basis(std::size_t n) {
    const F& field = target_.field();
    if (n == 0) return {target_, Matrix<F>::identity(field, target_.dim())};
    const Matrix<F>& rows = syzygy_rows(n);
    const std::string label = "omega^" + std::to_string(n) + "(" + target_.label() + ")";
    const ProjectiveSum<F>& p = sums_[n - 1];
    if (rows.rows() == 0) return {Module<F>::zero(algebra(), label), Matrix<F>(field, 0, p.dim())};
    EchelonBasis<F> span(field, p.dim());
    for (std::size_t r = 0; r < rows.rows(); ++r) span.add(rows.row(r));
    Matrix<F> basis = span.matrix();
    auto piv = rref(basis).pivots;
    const std::size_t d = basis.rows();
    std::vector<Matrix<F>> act;
    for (std::size_t b = 0; b < algebra()->dim(); ++b) {
      Matrix<F> x(field, d, d);
      for (std::size_t i = 0; i < d; ++i) {
        auto img = p.act(basis.row(i), b);
        for (std::size_t k = 0; k < d; ++k) x.at(i, k) = img[piv[k]];
      }
      act.push_back(std::move(x));
    }
    return {Module<F>(algebra(), d, std::move(act), label), std::move(basis)};
  }

  Module<F> syzygy_module(std::size_t n) { return syzygy_module_with_basis(n).first; }

  /// Matrix of P_n -> P_{n-1} (or onto the target for n = 0).
  Matrix<F> differential(std::size_t n) {
    ensure_term(n);
    if (n == 0) {
      ModuleAmbient<F> amb(target_);
      return cover_map_matrix(algebra(), amb, terms_[0].summands, terms_[0].images);
    }
    SumAmbient<F> amb(sums_[n - 1]);
    return cover_map_matrix(algebra(), amb, terms_[n].summands, terms_[n].images);
  }

  bool minimal_witness() const noexcept { return minimal_; }
  bool exact_witness() const noexcept { return exact_; }
  std::size_t computed_terms() const noexcept { return terms_.size(); }

 private:
  std::size_t rank_of_syzygy(std::size_t i) const { return syzygies_[i].rows(); }

  Module<F> target_;
  std::deque<ComplexTerm<F>> terms_;
  std::deque<ProjectiveSum<F>> sums_;
  std::deque<Matrix<F>> syzygies_;
  bool minimal_ = true;
  bool exact_ = true;
};

}  // namespace gorhom

#endif  // GORHOM_COVER_HPP
