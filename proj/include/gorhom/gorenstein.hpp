#ifndef GORHOM_GORENSTEIN_HPP
#define GORHOM_GORENSTEIN_HPP

// Gorenstein projectivity via the totally reflexive test, Gorenstein
// projective dimension and stability.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gorhom/homology.hpp"

namespace gorhom {

namespace detail {

struct AlgebraFacts {
  std::mutex m;
  std::optional<bool> selfinjective;
  std::map<std::size_t, DimStatus> gdim;
};

template <class F>
AlgebraFacts& facts(const Algebra<F>& a) {
  std::lock_guard<std::mutex> lock(a.cache_mutex_);
  if (!a.facts_cache_) a.facts_cache_ = std::make_shared<AlgebraFacts>();
  return *static_cast<AlgebraFacts*>(a.facts_cache_.get());
}

}  // namespace detail

/// D(A) ~ A as right modules (memoized). An unknown iso verdict falls back
/// to right injective dimension 0 within a small bound.
template <class F>
bool is_selfinjective(const AlgebraPtr<F>& a) {
  auto& f = detail::facts(*a);
  {
    std::lock_guard<std::mutex> lock(f.m);
    if (f.selfinjective) return *f.selfinjective;
  }
  auto v = is_isomorphic(coregular(a), regular_right(a));
  bool out;
  if (v.kind == IsoKind::unknown) {
    auto st = pd_status(coregular(a), 0);
    out = st.is_finite() && st.value == 0;
  } else {
    out = v.kind == IsoKind::yes;
  }
  std::lock_guard<std::mutex> lock(f.m);
  f.selfinjective = out;
  return out;
}

/// gorenstein_dim_status memoized per (algebra, bound).
template <class F>
DimStatus gorenstein_dim(const AlgebraPtr<F>& a, std::size_t bound) {
  auto& f = detail::facts(*a);
  {
    std::lock_guard<std::mutex> lock(f.m);
    auto it = f.gdim.find(bound);
    if (it != f.gdim.end()) return it->second;
  }
  DimStatus st = is_selfinjective(a) ? DimStatus::finite(0, "selfinjective") : gorenstein_dim_status(a, bound);
  std::lock_guard<std::mutex> lock(f.m);
  f.gdim.emplace(bound, st);
  return st;
}

struct StableStatus {
  std::size_t stable_up_to = 0;  // the bound scanned
  std::optional<std::size_t> first_nonvanishing;
  bool stable() const noexcept { return !first_nonvanishing; }
};

template <class F>
StableStatus stable_status(const Module<F>& m, std::size_t bound) {
  StableStatus out{bound, std::nullopt};
  if (m.dim() == 0 || bound == 0) return out;
  ExtSequence<F> seq(std::make_shared<Resolution<F>>(m), regular_right(m.algebra()));
  for (std::size_t i = 1; i <= bound; ++i)
    if (seq.dim(i) != 0) {
      out.first_nonvanishing = i;
      break;
    }
  return out;
}

enum class GPVerdict { not_gp, gp_certified, gp_up_to_bound };

struct GPCertificate {
  GPVerdict verdict = GPVerdict::gp_up_to_bound;
  std::string basis;    // certified: projective / selfinjective / gorenstein-bound / zero module
  std::string witness;  // not_gp: the failing leg
  std::string leg;      // not_gp: "eval", "ext" or "ext-dual"
  std::size_t degree = 0;
  std::size_t bound = 0;  // degrees checked for the Ext legs

  bool certified() const noexcept { return verdict == GPVerdict::gp_certified; }

  std::string to_string() const {
    switch (verdict) {
      case GPVerdict::gp_certified: return "GPCertified(" + basis + ")";
      case GPVerdict::not_gp: return "NotGP(" + witness + ")";
      case GPVerdict::gp_up_to_bound: return "GPUpToBound(" + std::to_string(bound) + ")";
    }
    return "?";
  }
};

namespace detail {

template <class F>
bool is_projective_module(const Module<F>& m) {
  if (m.dim() == 0) return true;
  Resolution<F> res(m);
  return res.syzygy_dim(1) == 0;
}

}  // namespace detail

/// Totally reflexive test: M -> M** iso, Ext^i(M, A) = 0 and
/// Ext^i(M*, A^op) = 0 for 1 <= i <= degree window. Positive verdicts only
/// under projectivity, selfinjectivity or a finite Gorenstein dimension g <= B.
template <class F>
GPCertificate gp_certificate(const Module<F>& m, std::size_t bound) {
  GPCertificate out;
  out.bound = bound;
  if (m.dim() == 0) {
    out.verdict = GPVerdict::gp_certified;
    out.basis = "zero module";
    return out;
  }
  const auto& a = m.algebra();
  if (detail::is_projective_module(m)) {
    out.verdict = GPVerdict::gp_certified;
    out.basis = "projective";
    return out;
  }
  if (is_selfinjective(a)) {
    out.verdict = GPVerdict::gp_certified;
    out.basis = "selfinjective";
    return out;
  }
  const DimStatus g = gorenstein_dim(a, bound);
  const bool finite_g = g.is_finite() && g.value <= bound;
  const std::size_t window = finite_g ? g.value : bound;
  out.bound = window;

  auto fail = [&](std::string leg, std::size_t deg, std::string witness) {
    out.verdict = GPVerdict::not_gp;
    out.leg = std::move(leg);
    out.degree = deg;
    out.witness = std::move(witness);
    return out;
  };

  ExtSequence<F> ext(std::make_shared<Resolution<F>>(m), regular_right(a));
  for (std::size_t i = 1; i <= window; ++i) {
    const std::size_t d = ext.dim(i);
    if (d != 0) return fail("ext", i, "dim Ext^" + std::to_string(i) + "(M, A) = " + std::to_string(d));
  }
  auto ev = eval_to_double_dual(m);
  if (!ev.is_isomorphism()) return fail("eval", 0, "evaluation M -> M** is not an isomorphism");
  auto mstar = star_dual(m);
  if (mstar.dim() != 0) {
    ExtSequence<F> ext2(std::make_shared<Resolution<F>>(mstar), regular_right(mstar.algebra()));
    for (std::size_t i = 1; i <= window; ++i) {
      const std::size_t d = ext2.dim(i);
      if (d != 0) return fail("ext-dual", i, "dim Ext^" + std::to_string(i) + "(M*, A) = " + std::to_string(d));
    }
  }
  if (finite_g) {
    out.verdict = GPVerdict::gp_certified;
    out.basis = "gorenstein-bound " + std::to_string(g.value);
  } else {
    out.verdict = GPVerdict::gp_up_to_bound;
  }
  return out;
}

/// Largest i <= B with Ext^i(M, A) != 0 (degree 0 included). Empty for the
/// zero module. exhausted: no nonvanishing beyond B is possible (finite
/// Gorenstein dimension or projective dimension within the bound).
struct SupExt {
  std::optional<std::size_t> degree;
  bool exhausted = false;
  std::size_t computed_to = 0;  // Ext computed for degrees 0..computed_to

  std::string to_string() const {
    std::string s = degree ? std::to_string(*degree) : std::string("empty");
    return s + (exhausted ? " (exhausted)" : " (window)");
  }
};

template <class F>
SupExt sup_ext_nonvanishing(const Module<F>& m, std::size_t bound) {
  SupExt out;
  if (m.dim() == 0) {
    out.exhausted = true;
    out.computed_to = bound;
    return out;
  }
  auto res = std::make_shared<Resolution<F>>(m);
  ExtSequence<F> ext(res, regular_right(m.algebra()));
  try {
    for (std::size_t i = 0; i <= bound; ++i) {
      if (ext.dim(i) != 0) out.degree = i;
      out.computed_to = i;
    }
  } catch (const ResourceLimit&) {
    return out;
  }
  auto g = gorenstein_dim(m.algebra(), bound);
  if (g.is_finite() && g.value <= bound) {
    out.exhausted = true;
  } else {
    try {
      out.exhausted = res->syzygy_dim(bound + 1) == 0;
    } catch (const ResourceLimit&) {
    }
  }
  return out;
}

/// Gorenstein projective dimension within the bound: the least n with
/// Omega^n(M) certified Gorenstein projective, cross-checked against the
/// largest nonvanishing Ext^i(M, A).
template <class F>
DimStatus gpd_status(const Module<F>& m, std::size_t bound) {
  if (m.dim() == 0) return DimStatus::finite(0, "zero module");
  const auto& a = m.algebra();
  std::optional<std::size_t> found;
  std::string note;
  try {
    const DimStatus g = is_selfinjective(a) ? DimStatus::finite(0, "selfinjective") : gorenstein_dim(a, bound);
    if (g.is_finite() && g.value <= bound) {
      Resolution<F> res(m);
      for (std::size_t n = 0; n <= g.value && !found; ++n) {
        auto cert = gp_certificate(res.syzygy_module(n), bound);
        if (cert.certified()) {
          found = n;
          note = "Omega^" + std::to_string(n) + " " + cert.to_string();
        }
      }
      if (!found)
        throw InternalInconsistency("Omega^" + std::to_string(g.value) +
                                    " not Gorenstein projective over an algebra of Gorenstein dimension " +
                                    std::to_string(g.value));
    } else {
      // Without a finite Gorenstein dimension only projective syzygies are
      // certified, so Gpd can only be found as pd.
      auto pd = pd_status(m, bound);
      if (!pd.is_finite()) return DimStatus::exceeds(bound, "no certified Gorenstein projective syzygy");
      found = pd.value;
      note = "Omega^" + std::to_string(pd.value) + " projective";
    }
  } catch (const ResourceLimit& e) {
    return DimStatus::exceeds(bound, e.what());
  }
  auto sup = sup_ext_nonvanishing(m, bound);
  const std::size_t s = sup.degree.value_or(0);
  if (sup.computed_to >= *found && s != *found)
    throw InternalInconsistency("Gpd " + std::to_string(*found) + " but largest nonvanishing Ext^i(M, A) is " +
                                sup.to_string());
  return DimStatus::finite(*found, note);
}

}  // namespace gorhom

#endif  // GORHOM_GORENSTEIN_HPP
