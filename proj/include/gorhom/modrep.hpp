#ifndef GORHOM_MODREP_HPP
#define GORHOM_MODREP_HPP

// Projective covers, syzygies, Hom spaces, the star dual Hom(-, A), the
// evaluation map to the double dual and isomorphism testing.

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "gorhom/cover.hpp"

namespace gorhom {

template <class F>
struct CoverData {
  Module<F> cover;
  ModuleMap<F> epi;
  Module<F> kernel;
  ModuleMap<F> inclusion;
};

template <class F>
CoverData<F> projective_cover(const Module<F>& m) {
  Resolution<F> res(m);
  const ProjectiveSum<F>& p = res.projective(0);
  Module<F> cover = p.to_module("P0(" + m.label() + ")");
  Matrix<F> epi = res.differential(0);
  if (epi.rows() == 0) epi = Matrix<F>(m.field(), 0, m.dim());
  auto [kernel, basis] = res.syzygy_module_with_basis(1);
  return {cover, {cover, m, std::move(epi)}, kernel, {kernel, cover, std::move(basis)}};
}

template <class F>
Module<F> syzygy(const Module<F>& m, std::size_t r) {
  if (r == 0) return m;
  Resolution<F> res(m);
  return res.syzygy_module(r);
}

/// Per-idempotent data of a fixed second argument N used by Hom and Ext:
/// bases of N e_j and the action of each basis element of e_j A on them.
template <class F>
struct TargetData {
  Module<F> module;
  std::vector<Matrix<F>> component;               // RREF basis of N e_j
  std::vector<std::vector<std::size_t>> pivots;   // pivots of component[j]
  std::vector<std::vector<Matrix<F>>> image;      // image[j][l] = component[j] * rho(u_l), u_l basis of e_j A
  std::vector<std::vector<std::vector<Matrix<F>>>> block;  // block[j][l][j'] = image[j][l] at pivots of N e_j'

  explicit TargetData(Module<F> n) : module(std::move(n)) {
    const auto& a = *module.algebra();
    const std::size_t r = a.num_idempotents();
    for (std::size_t j = 0; j < r; ++j) {
      component.push_back(module.component(j));
      pivots.push_back(rref(component.back()).pivots);
    }
    image.resize(r);
    block.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& pj = a.projective(j);
      for (std::size_t l = 0; l < pj.basis.rows(); ++l) {
        Matrix<F> img = component[j] * module.action_of(pj.basis.row(l));
        std::vector<Matrix<F>> per;
        for (std::size_t jp = 0; jp < r; ++jp) {
          Matrix<F> b(module.field(), img.rows(), pivots[jp].size());
          for (std::size_t t = 0; t < img.rows(); ++t)
            for (std::size_t s = 0; s < pivots[jp].size(); ++s) b.at(t, s) = img.at(t, pivots[jp][s]);
          per.push_back(std::move(b));
        }
        image[j].push_back(std::move(img));
        block[j].push_back(std::move(per));
      }
    }
  }

  std::size_t component_dim(std::size_t j) const { return component[j].rows(); }
};

/// Basis of Hom_A(M, N) from a projective presentation P1 -> P0 -> M -> 0:
/// a map is a choice of n_g in N e_j for each generator g of P0 killing the
/// relations, transported to M through a right inverse of P0 -> M.
template <class F>
std::vector<ModuleMap<F>> hom_basis(const Module<F>& m, const Module<F>& n) {
  require_same_algebra(m, n, "hom_basis");
  std::vector<ModuleMap<F>> out;
  if (m.dim() == 0 || n.dim() == 0) return out;
  const F& field = m.field();
  const auto& a = m.algebra();
  Resolution<F> res(m);
  const auto& t0 = res.term(0);
  const auto& t1 = res.term(1);
  const ProjectiveSum<F>& p0 = res.projective(0);
  TargetData<F> td(n);

  // Unknown layout: generator g contributes dim N e_{j_g} coordinates.
  std::vector<std::size_t> uoff;
  std::size_t U = 0;
  for (auto j : t0.summands) {
    uoff.push_back(U);
    U += td.component_dim(j);
  }
  if (U == 0) return out;

  // Constraint columns: each relation generator k yields a vector in N.
  const std::size_t nrel = t1.summands.size();
  Matrix<F> cons(field, U, nrel * n.dim());
  for (std::size_t k = 0; k < nrel; ++k) {
    auto rel = t1.images.row(k);
    for (std::size_t g = 0; g < t0.summands.size(); ++g) {
      const std::size_t j = t0.summands[g];
      auto loc = rel.subspan(p0.offset(g), p0.block_dim(g));
      for (std::size_t l = 0; l < loc.size(); ++l) {
        if (field.is_zero(loc[l])) continue;
        const Matrix<F>& img = td.image[j][l];
        for (std::size_t t = 0; t < img.rows(); ++t)
          axpy<F>(field, cons.row(uoff[g] + t).subspan(k * n.dim(), n.dim()), loc[l], img.row(t));
      }
    }
  }
  Matrix<F> sols = left_kernel(cons);
  if (sols.rows() == 0) return out;

  // Right inverse of the epi P0 -> M.
  Matrix<F> d0 = res.differential(0);
  auto pinvT = solve(d0.transpose(), Matrix<F>::identity(field, m.dim()));
  if (!pinvT) throw InternalInconsistency("hom_basis: projective cover is not surjective");
  Matrix<F> pinv = pinvT->transpose();

  for (std::size_t s = 0; s < sols.rows(); ++s) {
    auto x = sols.row(s);
    Matrix<F> y(field, p0.dim(), n.dim());
    for (std::size_t g = 0; g < t0.summands.size(); ++g) {
      const std::size_t j = t0.summands[g];
      for (std::size_t l = 0; l < p0.block_dim(g); ++l) {
        const Matrix<F>& img = td.image[j][l];
        for (std::size_t t = 0; t < img.rows(); ++t)
          axpy<F>(field, y.row(p0.offset(g) + l), x[uoff[g] + t], img.row(t));
      }
    }
    out.push_back({m, n, pinv * y});
  }
  (void)a;
  return out;
}

/// Hom basis from the stacked intertwining system rho_m(b) F = F rho_n(b)
/// over algebra generators b. Quadratic in the module dimensions; used as an
/// independent check of hom_basis.
template <class F>
std::vector<ModuleMap<F>> hom_basis_stacked(const Module<F>& m, const Module<F>& n) {
  require_same_algebra(m, n, "hom_basis_stacked");
  std::vector<ModuleMap<F>> out;
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return out;
  const F& field = m.field();
  const auto& gens = m.algebra()->generators();
  // Unknown F(p, q) at index p * dn + q; equation (r, c) per generator.
  Matrix<F> sys(field, 0, dm * dn);
  for (std::size_t x = 0; x < gens.rows(); ++x) {
    Matrix<F> rm = m.action_of(gens.row(x));
    Matrix<F> rn = n.action_of(gens.row(x));
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dn; ++c) {
        Vec<F> eq = zero_vec(field, dm * dn);
        // (rm F)(r, c) = sum_p rm(r, p) F(p, c)
        for (std::size_t p = 0; p < dm; ++p) eq[p * dn + c] = field.add(eq[p * dn + c], rm.at(r, p));
        // (F rn)(r, c) = sum_q F(r, q) rn(q, c)
        for (std::size_t q = 0; q < dn; ++q) eq[r * dn + q] = field.sub(eq[r * dn + q], rn.at(q, c));
        sys.append_row(eq);
      }
  }
  Matrix<F> ker = nullspace_basis(sys);
  for (std::size_t s = 0; s < ker.rows(); ++s) {
    Matrix<F> f(field, dm, dn);
    for (std::size_t p = 0; p < dm; ++p)
      for (std::size_t q = 0; q < dn; ++q) f.at(p, q) = ker.at(s, p * dn + q);
    out.push_back({m, n, std::move(f)});
  }
  return out;
}

template <class F>
std::size_t hom_dim(const Module<F>& m, const Module<F>& n) {
  return hom_basis(m, n).size();
}

/// M* = Hom_A(M, A) over A^op, with basis the RREF of the flattened Hom
/// basis (row-major dim M x dim A).
template <class F>
struct StarDual {
  Module<F> module;
  Matrix<F> basis;
};

template <class F>
StarDual<F> star_dual_with_basis(const Module<F>& m) {
  const auto& a = m.algebra();
  const F& field = m.field();
  auto aop = opposite(a);
  const std::size_t n = a->dim();
  const std::size_t flat = m.dim() * n;
  const std::string label = "star(" + m.label() + ")";
  auto homs = hom_basis(m, regular_right(a));
  EchelonBasis<F> span(field, flat);
  for (const auto& h : homs) span.add(h.matrix.data());
  Matrix<F> basis = span.matrix();
  const std::size_t d = basis.rows();
  if (d == 0) return {Module<F>::zero(aop, label), Matrix<F>(field, 0, flat)};
  auto piv = rref(basis).pivots;
  std::vector<Matrix<F>> act;
  for (std::size_t b = 0; b < n; ++b) {
    // (f . b)(x) = b f(x): right multiply the dim M x dim A matrix by L_b.
    const Matrix<F>& lb = a->left_mult(b);
    Matrix<F> x(field, d, d);
    for (std::size_t s = 0; s < d; ++s) {
      Matrix<F> fm(field, m.dim(), n);
      for (std::size_t p = 0; p < m.dim(); ++p) {
        auto src = basis.row(s).subspan(p * n, n);
        std::copy(src.begin(), src.end(), fm.row(p).begin());
      }
      Matrix<F> img = fm * lb;
      for (std::size_t t = 0; t < d; ++t) x.at(s, t) = img.data()[piv[t]];
    }
    act.push_back(std::move(x));
  }
  return {Module<F>(aop, d, std::move(act), label), std::move(basis)};
}

template <class F>
Module<F> star_dual(const Module<F>& m) {
  return star_dual_with_basis(m).module;
}

/// The natural map M -> M** sending m to (f -> f(m)).
template <class F>
ModuleMap<F> eval_to_double_dual(const Module<F>& m) {
  const F& field = m.field();
  const auto& a = m.algebra();
  const std::size_t n = a->dim();
  auto first = star_dual_with_basis(m);
  auto second = star_dual_with_basis(first.module);
  const std::size_t h = first.basis.rows();
  const std::size_t flat = h * n;
  Module<F> dd = second.module;
  auto piv = rref(second.basis).pivots;
  Matrix<F> map(field, m.dim(), dd.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Vec<F> ev = zero_vec(field, flat);
    for (std::size_t s = 0; s < h; ++s) {
      // f_s(e_i) is row i of the matrix f_s
      auto row = first.basis.row(s).subspan(i * n, n);
      std::copy(row.begin(), row.end(), ev.begin() + s * n);
    }
    for (std::size_t t = 0; t < dd.dim(); ++t) map.at(i, t) = ev[piv[t]];
  }
  // M** lives over (A^op)^op, which is A itself.
  return {m, dd, std::move(map)};
}

enum class IsoKind { yes, no, unknown };

template <class F>
struct IsoVerdict {
  IsoKind kind = IsoKind::unknown;
  std::optional<Matrix<F>> witness;
  std::string reason;
};

/// Isomorphism invariants: dims of the M e_j, of the radical layers M J^k
/// and of the socle.
template <class F>
std::vector<std::size_t> module_invariants(const Module<F>& m) {
  const F& field = m.field();
  const auto& a = *m.algebra();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.num_idempotents(); ++j) out.push_back(m.component(j).rows());
  const auto& g = a.radical_generators();
  std::vector<Matrix<F>> acts;
  for (std::size_t x = 0; x < g.rows(); ++x) acts.push_back(m.action_of(g.row(x)));
  Matrix<F> layer = Matrix<F>::identity(field, m.dim());
  while (layer.rows() > 0) {
    EchelonBasis<F> next(field, m.dim());
    for (std::size_t r = 0; r < layer.rows(); ++r)
      for (const auto& act : acts) next.add(vec_mul(field, layer.row(r), act));
    layer = next.matrix();
    out.push_back(layer.rows());
  }
  Matrix<F> all(field, m.dim(), 0);
  for (const auto& act : acts) all = hstack(all, act);
  out.push_back(m.dim() == 0 ? 0 : left_kernel(all).rows());
  return out;
}

/// Decides M ~ N by searching the Hom space for an invertible element:
/// exhaustively when it has at most 2^16 elements, else by 64 random trials.
template <class F>
IsoVerdict<F> is_isomorphic(const Module<F>& m, const Module<F>& n) {
  require_same_algebra(m, n, "is_isomorphic");
  const F& field = m.field();
  if (m.dim() != n.dim()) return {IsoKind::no, std::nullopt, "dimensions differ"};
  if (m.dim() == 0) return {IsoKind::yes, Matrix<F>(field, 0, 0), "zero modules"};
  if (module_invariants(m) != module_invariants(n))
    return {IsoKind::no, std::nullopt, "radical layers, socles or idempotent components differ"};
  auto hmn = hom_basis(m, n);
  auto hnm = hom_basis(n, m);
  if (hmn.size() != hnm.size()) return {IsoKind::no, std::nullopt, "dim Hom(M,N) != dim Hom(N,M)"};
  if (hmn.empty()) return {IsoKind::no, std::nullopt, "Hom(M,N) = 0"};
  const std::size_t h = hmn.size();
  const std::size_t d = m.dim();
  auto combo = [&](const std::vector<typename F::element>& c) {
    Matrix<F> f(field, d, d);
    for (std::size_t s = 0; s < h; ++s)
      if (!field.is_zero(c[s])) f = f + hmn[s].matrix.scaled(c[s]);
    return f;
  };
  // Cheap first guesses: each basis element alone.
  for (std::size_t s = 0; s < h; ++s)
    if (rank(hmn[s].matrix) == d) return {IsoKind::yes, hmn[s].matrix, "basis homomorphism"};

  std::mt19937_64 rng(settings().seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<typename F::element> c;
    for (std::size_t s = 0; s < h; ++s) {
      if constexpr (is_prime_field_v<F>)
        c.push_back(static_cast<typename F::element>(rng() % field.p()));
      else
        c.push_back(field.from_int(static_cast<long long>(rng() % 2001) - 1000));
    }
    Matrix<F> f = combo(c);
    if (rank(f) == d) return {IsoKind::yes, f, "random search"};
  }
  if constexpr (is_prime_field_v<F>) {
    std::uint64_t total = 1;
    bool exhaustive = true;
    for (std::size_t s = 0; s < h && exhaustive; ++s) {
      total *= field.p();
      if (total > (1u << 16)) exhaustive = false;
    }
    if (exhaustive) {
      std::vector<typename F::element> c(h, field.zero());
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t s = 0; s < h; ++s) {
          c[s] = static_cast<typename F::element>(x % field.p());
          x /= field.p();
        }
        Matrix<F> f = combo(c);
        if (rank(f) == d) return {IsoKind::yes, f, "exhaustive search"};
      }
      return {IsoKind::no, std::nullopt, "no invertible element in Hom(M,N) (exhaustive)"};
    }
  }
  return {IsoKind::unknown, std::nullopt, "64 random trials found no invertible map (seed " +
                                              std::to_string(settings().seed) + ")"};
}

}  // namespace gorhom

#endif  // GORHOM_MODREP_HPP
