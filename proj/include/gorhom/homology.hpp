#ifndef GORHOM_HOMOLOGY_HPP
#define GORHOM_HOMOLOGY_HPP

// Ext dimension tables from minimal resolutions, bounded dimension verdicts
// (pd, id, gldim, Gorenstein dimension) and the Hochschild bar-complex oracle
// for Ext over the enveloping algebra.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorhom/modrep.hpp"

namespace gorhom {

inline constexpr std::size_t default_bound = 10;

struct ExtTable {
  std::size_t bound = 0;
  std::vector<std::size_t> dims;  // dims[i] = dim Ext^i, i = 0..bound
  bool operator==(const ExtTable&) const = default;
};

namespace detail {

template <class F>
std::vector<std::size_t> block_offsets(const Algebra<F>& a, const std::vector<std::size_t>& summands) {
  std::vector<std::size_t> out;
  std::size_t o = 0;
  for (auto j : summands) {
    out.push_back(o);
    o += a.projective(j).basis.rows();
  }
  out.push_back(o);
  return out;
}

}  // namespace detail

/// dim Hom(P, N) for P with the given summands.
template <class F>
std::size_t cochain_dim(const TargetData<F>& td, const std::vector<std::size_t>& summands) {
  std::size_t d = 0;
  for (auto j : summands) d += td.component_dim(j);
  return d;
}

/// Rank of Hom(P_i, N) -> Hom(P_{i+1}, N) given the summands of P_i and the
/// images of the generators of P_{i+1} in P_i. The transpose is streamed row
/// by row: one row per basis vector of Hom(P_{i+1}, N).
template <class F>
std::size_t cochain_rank(const TargetData<F>& td, const std::vector<std::size_t>& summands_i,
                         const ComplexTerm<F>& next) {
  const auto& a = *td.module.algebra();
  const F& field = a.field();
  const std::size_t ci = cochain_dim(td, summands_i);
  if (ci == 0 || next.summands.empty()) return 0;
  auto off = detail::block_offsets(a, summands_i);
  std::vector<std::size_t> coff;
  std::size_t c = 0;
  for (auto j : summands_i) {
    coff.push_back(c);
    c += td.component_dim(j);
  }
  RankAccumulator<F> acc(field, ci);
  for (std::size_t gp = 0; gp < next.summands.size(); ++gp) {
    const std::size_t jp = next.summands[gp];
    const std::size_t dp = td.component_dim(jp);
    if (dp == 0) continue;
    Matrix<F> rows(field, dp, ci);
    auto img = next.images.row(gp);
    bool any = false;
    for (std::size_t g = 0; g < summands_i.size(); ++g) {
      const std::size_t j = summands_i[g];
      const std::size_t dj = td.component_dim(j);
      if (dj == 0) continue;
      auto loc = img.subspan(off[g], off[g + 1] - off[g]);
      for (std::size_t l = 0; l < loc.size(); ++l) {
        if (field.is_zero(loc[l])) continue;
        const Matrix<F>& b = td.block[j][l][jp];  // dj x dp
        for (std::size_t t = 0; t < dj; ++t)
          for (std::size_t tp = 0; tp < dp; ++tp) {
            const auto& v = b.at(t, tp);
            if (field.is_zero(v)) continue;
            auto& slot = rows.at(tp, coff[g] + t);
            slot = field.add(slot, field.mul(loc[l], v));
            any = true;
          }
      }
    }
    if (!any) continue;
    for (std::size_t tp = 0; tp < dp; ++tp) acc.add_row(rows.row(tp));
  }
  return acc.rank();
}

/// Ext^i(M, N) computed lazily along a shared resolution of M.
template <class F>
class ExtSequence {
 public:
  ExtSequence(std::shared_ptr<Resolution<F>> res, const Module<F>& n) : res_(std::move(res)), td_(n) {
    require_same_algebra(res_->target(), n, "ext");
  }

  std::size_t dim(std::size_t i) {
    const std::size_t c = cdim(i);
    const std::size_t r = rank(i);
    const std::size_t rprev = i == 0 ? 0 : rank(i - 1);
    return c - r - rprev;
  }

  std::vector<std::size_t> dims(std::size_t bound) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= bound; ++i) out.push_back(dim(i));
    return out;
  }

  Resolution<F>& resolution() { return *res_; }

 private:
  std::size_t cdim(std::size_t i) {
    while (cdim_.size() <= i) cdim_.push_back(cochain_dim(td_, res_->term(cdim_.size()).summands));
    return cdim_[i];
  }
  std::size_t rank(std::size_t i) {
    while (rank_.size() <= i) {
      const std::size_t k = rank_.size();
      std::vector<std::size_t> s = res_->term(k).summands;
      rank_.push_back(cochain_rank(td_, s, res_->term(k + 1)));
    }
    return rank_[i];
  }

  std::shared_ptr<Resolution<F>> res_;
  TargetData<F> td_;
  std::vector<std::size_t> cdim_;
  std::vector<std::size_t> rank_;
};

/// dim Ext^i(M, N) for i = 0..bound, from a minimal resolution of M run to
/// degree bound + 1.
template <class F>
ExtTable ext_table(const Module<F>& m, const Module<F>& n, std::size_t bound) {
  require_same_algebra(m, n, "ext_table");
  ExtSequence<F> seq(std::make_shared<Resolution<F>>(m), n);
  return {bound, seq.dims(bound)};
}

/// Ext dims from an explicit projective complex P_0 <- P_1 <- ... given by
/// its terms (missing terms are zero).
template <class F>
ExtTable ext_table_from_complex(const std::vector<ComplexTerm<F>>& terms, const Module<F>& n, std::size_t bound) {
  TargetData<F> td(n);
  const F& field = n.field();
  auto term = [&](std::size_t i) -> ComplexTerm<F> {
    if (i < terms.size()) return terms[i];
    return {{}, Matrix<F>(field, 0, 0)};
  };
  std::vector<std::size_t> rk;
  for (std::size_t i = 0; i <= bound; ++i) rk.push_back(cochain_rank(td, term(i).summands, term(i + 1)));
  ExtTable out{bound, {}};
  for (std::size_t i = 0; i <= bound; ++i)
    out.dims.push_back(cochain_dim(td, term(i).summands) - rk[i] - (i ? rk[i - 1] : 0));
  return out;
}

/// Terms 0..upto of the minimal resolution of M, with a contractible summand
/// e_j A --id--> e_j A inserted in degrees k and k-1 (k >= 1).
template <class F>
std::vector<ComplexTerm<F>> padded_complex(Resolution<F>& res, std::size_t upto, std::size_t k, std::size_t j) {
  const auto& a = *res.algebra();
  const F& field = a.field();
  std::vector<ComplexTerm<F>> terms;
  for (std::size_t i = 0; i <= upto; ++i) terms.push_back(res.term(i));
  if (k == 0 || k > upto) throw IndexError("padding degree out of range");
  auto la = local_actions(res.algebra());
  const std::size_t dj = a.projective(j).basis.rows();
  // new summand in degree k-1 maps to zero
  // an empty term may carry a 0 x 0 image matrix; take the width from below
  const std::size_t prev_cols =
      k == 1 ? res.target().dim() : detail::block_offsets(a, terms[k - 2].summands).back();
  if (terms[k - 1].images.rows() == 0) terms[k - 1].images = Matrix<F>(field, 0, prev_cols);
  terms[k - 1].summands.push_back(j);
  terms[k - 1].images.append_row(zero_vec(field, prev_cols));
  // widen degree-k images by the new block, then add the identity generator
  auto widen = [&](Matrix<F>& m, std::size_t extra) {
    Matrix<F> w(field, m.rows(), m.cols() + extra);
    for (std::size_t r = 0; r < m.rows(); ++r) std::copy(m.row(r).begin(), m.row(r).end(), w.row(r).begin());
    m = std::move(w);
  };
  const std::size_t old_cols = terms[k].images.rows() ? terms[k].images.cols()
                                                      : detail::block_offsets(a, terms[k - 1].summands).back() - dj;
  if (terms[k].images.rows() == 0) terms[k].images = Matrix<F>(field, 0, old_cols);
  widen(terms[k].images, dj);
  Vec<F> gen = zero_vec(field, old_cols + dj);
  std::copy(la->e_local[j].begin(), la->e_local[j].end(), gen.begin() + old_cols);
  terms[k].summands.push_back(j);
  terms[k].images.append_row(gen);
  if (k + 1 <= upto && terms[k + 1].images.rows() > 0) widen(terms[k + 1].images, dj);
  return terms;
}

// ---------------------------------------------------------------------------
// Dimension verdicts

enum class DimKind { finite, infinite_certified, exceeds_bound };

struct DimStatus {
  DimKind kind = DimKind::exceeds_bound;
  std::size_t value = 0;  // the finite value, or the bound for exceeds_bound
  std::string note;       // certificate or reason
  bool symmetry_violation = false;

  static DimStatus finite(std::size_t v, std::string note) { return {DimKind::finite, v, std::move(note), false}; }
  static DimStatus infinite(std::string note) { return {DimKind::infinite_certified, 0, std::move(note), false}; }
  static DimStatus exceeds(std::size_t bound, std::string note) {
    return {DimKind::exceeds_bound, bound, std::move(note), false};
  }

  bool is_finite() const noexcept { return kind == DimKind::finite; }
  bool is_infinite() const noexcept { return kind == DimKind::infinite_certified; }
  bool exceeds_bound() const noexcept { return kind == DimKind::exceeds_bound; }

  std::string to_string() const {
    switch (kind) {
      case DimKind::finite: return "Finite(" + std::to_string(value) + ")";
      case DimKind::infinite_certified: return "InfiniteCertified";
      case DimKind::exceeds_bound: return "ExceedsBound(" + std::to_string(value) + ")";
    }
    return "?";
  }
};

/// Projective dimension within the bound. Finite(n) when Omega^{n+1} = 0;
/// InfiniteCertified on a periodicity Omega^i ~ Omega^j != 0 with i < j.
template <class F>
DimStatus pd_status(const Module<F>& m, std::size_t bound) {
  if (m.dim() == 0) return DimStatus::finite(0, "zero module");
  Resolution<F> res(m);
  std::map<std::size_t, Module<F>> materialized;
  auto syz = [&](std::size_t i) -> const Module<F>& {
    auto it = materialized.find(i);
    if (it == materialized.end()) it = materialized.emplace(i, res.syzygy_module(i)).first;
    return it->second;
  };
  try {
    for (std::size_t j = 1; j <= bound + 1; ++j) {
      const std::size_t dj = res.syzygy_dim(j);
      if (dj == 0) return DimStatus::finite(j - 1, "Omega^" + std::to_string(j) + " = 0");
      if (j > bound) break;
      for (std::size_t i = 0; i < j; ++i) {
        if (res.syzygy_dim(i) != dj) continue;
        auto v = is_isomorphic(syz(i), syz(j));
        if (v.kind == IsoKind::yes)
          return DimStatus::infinite("syzygy periodicity Omega^" + std::to_string(i) + " ~ Omega^" +
                                     std::to_string(j) + ", nonzero");
      }
    }
  } catch (const ResourceLimit& e) {
    return DimStatus::exceeds(bound, e.what());
  }
  return DimStatus::exceeds(bound, "no vanishing syzygy or periodicity through degree " + std::to_string(bound));
}

/// Right (side = right) or left injective dimension of the regular module.
enum class Side { right, left };

inline const char* side_name(Side s) { return s == Side::right ? "right" : "left"; }

/// id of the regular module on one side. Certified through pd of the dual
/// of the regular module on the other side, and cross-checked against
/// Ext^i(S, A) over the simples S.
template <class F>
DimStatus inj_dim_status(const AlgebraPtr<F>& a, Side side, std::size_t bound) {
  const AlgebraPtr<F> x = side == Side::right ? a : opposite(a);
  auto xop = opposite(x);
  // X selfinjective iff D(X) ~ X.
  auto iso = is_isomorphic(coregular(x), regular_right(x));
  if (iso.kind == IsoKind::yes) return DimStatus::finite(0, "D(A) ~ A (selfinjective)");
  // id(X_X) = pd over X^op of D(X_X).
  DimStatus cert = pd_status(coregular(xop), bound);
  if (cert.is_infinite()) return DimStatus::infinite("pd of D(A) on the other side: " + cert.note);
  std::optional<std::size_t> value;
  std::string note;
  if (cert.is_finite()) {
    value = cert.value;
    note = "pd of D(A) on the other side is " + std::to_string(cert.value);
  } else {
    // Finite global dimension also certifies.
    std::size_t worst = 0;
    bool all = true;
    for (const auto& s : simples(x)) {
      auto st = pd_status(s, bound);
      if (!st.is_finite()) {
        all = false;
        break;
      }
      worst = std::max(worst, st.value);
    }
    if (!all) return DimStatus::exceeds(bound, "no certificate within bound");
    value = std::nullopt;
    note = "simples have finite pd";
    // id is then the largest nonvanishing degree of Ext(S, A), all below the bound
    std::size_t best = 0;
    auto reg = regular_right(x);
    for (const auto& s : simples(x)) {
      ExtSequence<F> seq(std::make_shared<Resolution<F>>(s), reg);
      for (std::size_t i = 0; i <= worst; ++i)
        if (seq.dim(i) != 0) best = std::max(best, i);
    }
    return DimStatus::finite(best, note);
  }
  // Cross-check against the simples.
  const std::size_t g = *value;
  std::size_t best = 0;
  auto reg = regular_right(x);
  try {
    for (const auto& s : simples(x)) {
      ExtSequence<F> seq(std::make_shared<Resolution<F>>(s), reg);
      for (std::size_t i = 0; i <= g + 1; ++i)
        if (seq.dim(i) != 0) best = std::max(best, i);
    }
  } catch (const ResourceLimit&) {
    return DimStatus::finite(g, note + " (cross-check skipped: resource limit)");
  }
  if (best != g)
    throw InternalInconsistency("injective dimension " + std::to_string(g) +
                                " disagrees with Ext from simples (" + std::to_string(best) + ")");
  return DimStatus::finite(g, note);
}

template <class F>
DimStatus gldim_status(const AlgebraPtr<F>& a, std::size_t bound) {
  std::size_t worst = 0;
  bool exceeds = false;
  std::string note;
  for (const auto& s : simples(a)) {
    auto st = pd_status(s, bound);
    if (st.is_infinite()) return DimStatus::infinite(s.label() + ": " + st.note);
    if (st.exceeds_bound()) {
      exceeds = true;
      note = s.label() + ": " + st.note;
      continue;
    }
    worst = std::max(worst, st.value);
  }
  if (exceeds) return DimStatus::exceeds(bound, note);
  return DimStatus::finite(worst, "maximum pd over the simples");
}

template <class F>
DimStatus gorenstein_dim_status(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = inj_dim_status(a, Side::right, bound);
  if (r.is_finite() && r.value == 0) return DimStatus::finite(0, "selfinjective");
  auto l = inj_dim_status(a, Side::left, bound);
  if (r.is_finite() && l.is_finite()) {
    if (r.value == l.value) return DimStatus::finite(r.value, "left and right injective dimensions agree");
    auto st = DimStatus::exceeds(bound, "left id " + std::to_string(l.value) + " != right id " +
                                            std::to_string(r.value));
    st.symmetry_violation = true;
    return st;
  }
  if (r.is_infinite()) return DimStatus::infinite("right: " + r.note);
  if (l.is_infinite()) return DimStatus::infinite("left: " + l.note);
  return DimStatus::exceeds(bound, "right " + r.to_string() + ", left " + l.to_string());
}

// ---------------------------------------------------------------------------
// Hochschild oracle

/// Ext^i_{A^e}(A, A^e) for i = 0..bound as Hochschild cohomology of A with
/// coefficients in A (x) A with the outer bimodule structure, from the full
/// bar complex.
template <class F>
ExtTable ext_env_bar_oracle(const AlgebraPtr<F>& a, std::size_t bound) {
  const F& field = a->field();
  const std::size_t n = a->dim();
  const std::size_t nm = n * n;  // coefficient module dimension
  auto cdim = [&](std::size_t k) {
    std::size_t d = nm;
    for (std::size_t i = 0; i < k; ++i) d *= n;
    return d;
  };
  if (static_cast<double>(cdim(bound)) * static_cast<double>(cdim(bound + 1)) > double(1u << 22))
    throw TooLarge("bar complex too large: dim(A) = " + std::to_string(n) + ", bound " + std::to_string(bound));

  // Left and right actions on the coefficient module, basis (u, v) -> u * n + v.
  auto left_act = [&](std::size_t b, std::size_t m, Vec<F>& out, const typename F::element& coef) {
    const std::size_t u = m / n, v = m % n;
    for (const auto& [k, c] : a->product_terms(b, u)) {
      auto& slot = out[k * n + v];
      slot = field.add(slot, field.mul(coef, c));
    }
  };
  auto right_act = [&](std::size_t b, std::size_t m, Vec<F>& out, const typename F::element& coef) {
    const std::size_t u = m / n, v = m % n;
    for (const auto& [k, c] : a->product_terms(v, b)) {
      auto& slot = out[u * n + k];
      slot = field.add(slot, field.mul(coef, c));
    }
  };

  // rank of delta^k : C^k -> C^{k+1}; cochain index (I, m) = I * nm + m with
  // I the base-n number of the k-tuple.
  auto delta_rank = [&](std::size_t k) {
    const std::size_t rows = cdim(k), cols = cdim(k + 1);
    std::size_t nk = 1;
    for (std::size_t i = 0; i < k; ++i) nk *= n;
    RankAccumulator<F> acc(field, cols);
    Vec<F> out(cols, field.zero());
    std::vector<std::size_t> idx(k);
    for (std::size_t r = 0; r < rows; ++r) {
      std::fill(out.begin(), out.end(), field.zero());
      const std::size_t I = r / nm, m = r % nm;
      {
        std::size_t t = I;
        for (std::size_t p = k; p-- > 0;) {
          idx[p] = t % n;
          t /= n;
        }
      }
      // J as base-n number of a (k+1)-tuple; output slot (J * nm + m').
      // term 0: a_1 f(a_2..a_{k+1}); J = (j, I)
      for (std::size_t j = 0; j < n; ++j) {
        Vec<F> tmp(nm, field.zero());
        left_act(j, m, tmp, field.one());
        const std::size_t J = j * nk + I;
        for (std::size_t q = 0; q < nm; ++q)
          if (!field.is_zero(tmp[q])) out[J * nm + q] = field.add(out[J * nm + q], tmp[q]);
      }
      // middle terms: (-1)^i f(.., a_i a_{i+1}, ..) with the product at position i-1 of I
      for (std::size_t i = 1; i <= k; ++i) {
        const auto sign = (i % 2) ? field.neg(field.one()) : field.one();
        const std::size_t target = idx[i - 1];
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const auto& c = a->c(p, q, target);
            if (field.is_zero(c)) continue;
            std::size_t J = 0;
            for (std::size_t s = 0; s < k; ++s) {
              if (s == i - 1) {
                J = J * n + p;
                J = J * n + q;
              } else {
                J = J * n + idx[s];
              }
            }
            auto& slot = out[J * nm + m];
            slot = field.add(slot, field.mul(sign, c));
          }
      }
      // last term: (-1)^{k+1} f(a_1..a_k) a_{k+1}; J = (I, j)
      const auto sign = ((k + 1) % 2) ? field.neg(field.one()) : field.one();
      for (std::size_t j = 0; j < n; ++j) {
        Vec<F> tmp(nm, field.zero());
        right_act(j, m, tmp, sign);
        const std::size_t J = I * n + j;
        for (std::size_t q = 0; q < nm; ++q)
          if (!field.is_zero(tmp[q])) out[J * nm + q] = field.add(out[J * nm + q], tmp[q]);
      }
      acc.add_row(out);
    }
    return acc.rank();
  };

  std::vector<std::size_t> rk;
  for (std::size_t k = 0; k <= bound; ++k) rk.push_back(delta_rank(k));
  ExtTable out{bound, {}};
  for (std::size_t k = 0; k <= bound; ++k) out.dims.push_back(cdim(k) - rk[k] - (k ? rk[k - 1] : 0));
  return out;
}

}  // namespace gorhom

#endif  // GORHOM_HOMOLOGY_HPP
