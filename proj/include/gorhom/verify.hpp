#ifndef GORHOM_VERIFY_HPP
#define GORHOM_VERIFY_HPP

// One checker per statement about Ext, Gorenstein dimensions and Gorenstein
// projectivity. Each returns a CheckReport; a bound-limited computation
// never produces fail.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorhom/gorenstein.hpp"

namespace gorhom {

enum class CheckStatus { pass, fail, inconclusive, skipped, error };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::error: return "error";
  }
  return "?";
}

struct CheckReport {
  std::string check;
  std::string algebra;
  std::size_t bound = 0;
  CheckStatus status = CheckStatus::inconclusive;
  std::string detail;                                     // witness or reason
  std::vector<std::pair<std::string, std::string>> data;  // compared quantities

  void put(std::string key, std::string value) { data.emplace_back(std::move(key), std::move(value)); }
  const std::string* get(const std::string& key) const {
    for (const auto& [k, v] : data)
      if (k == key) return &v;
    return nullptr;
  }
};

inline std::string dims_string(const std::vector<std::size_t>& v, std::size_t from = 0) {
  std::string out = "[";
  for (std::size_t i = from; i < v.size(); ++i) out += (i > from ? " " : "") + std::to_string(v[i]);
  return out + "]";
}

namespace detail {

template <class F>
CheckReport start(const char* check, const AlgebraPtr<F>& a, std::size_t bound) {
  CheckReport r;
  r.check = check;
  r.algebra = a->name();
  r.bound = bound;
  return r;
}

}  // namespace detail

/// dim Ext^i_A(D(A), A) against dim Ext^i_{A^e}(A, A^e), i = 1..B.
template <class F>
CheckReport lemma_dim_match(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("lemma", a, bound);
  try {
    auto lhs = ext_table(coregular(a), regular_right(a), bound).dims;
    auto env = enveloping(a);
    auto rhs = ext_table(bimodule_as_env_module(a), regular_right(env), bound).dims;
    r.put("ext_A(D(A),A)", dims_string(lhs, 1));
    r.put("ext_Ae(A,Ae)", dims_string(rhs, 1));
    for (std::size_t i = 1; i <= bound; ++i)
      if (lhs[i] != rhs[i]) {
        r.status = CheckStatus::fail;
        r.detail = "degree " + std::to_string(i) + ": " + std::to_string(lhs[i]) + " != " + std::to_string(rhs[i]);
        return r;
      }
    r.status = CheckStatus::pass;
  } catch (const ResourceLimit& e) {
    r.status = CheckStatus::inconclusive;
    r.detail = e.what();
  }
  return r;
}

/// Gdim(A), Gpd_{A^e}(A), sup{i : Ext^i(D(A), A) != 0} and Gpd_A(D(A)).
template <class F>
CheckReport main_theorem_report(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("theorem", a, bound);
  const DimStatus gdim = gorenstein_dim(a, bound);
  const DimStatus gpd_env = gpd_status(bimodule_as_env_module(a), bound);
  const SupExt sup = sup_ext_nonvanishing(coregular(a), bound);
  const DimStatus gpd_d = gpd_status(coregular(a), bound);
  r.put("Gdim(A)", gdim.to_string());
  r.put("Gpd_Ae(A)", gpd_env.to_string());
  r.put("sup Ext(D(A),A)", sup.to_string());
  r.put("Gpd_A(D(A))", gpd_d.to_string());
  std::vector<std::pair<std::string, std::size_t>> certified;
  if (gdim.is_finite()) certified.emplace_back("Gdim(A)", gdim.value);
  if (gpd_env.is_finite()) certified.emplace_back("Gpd_Ae(A)", gpd_env.value);
  if (sup.exhausted) certified.emplace_back("sup Ext(D(A),A)", sup.degree.value_or(0));
  if (gpd_d.is_finite()) certified.emplace_back("Gpd_A(D(A))", gpd_d.value);
  for (std::size_t i = 1; i < certified.size(); ++i)
    if (certified[i].second != certified[0].second) {
      r.status = CheckStatus::fail;
      r.detail = certified[0].first + " = " + std::to_string(certified[0].second) + " but " + certified[i].first +
                 " = " + std::to_string(certified[i].second);
      return r;
    }
  // A certified value below a nonvanishing Ext degree is also a contradiction.
  if (!certified.empty() && sup.degree && *sup.degree > certified[0].second) {
    r.status = CheckStatus::fail;
    r.detail = certified[0].first + " = " + std::to_string(certified[0].second) + " but Ext^" +
               std::to_string(*sup.degree) + "(D(A), A) != 0";
    return r;
  }
  if (certified.size() == 4) {
    r.status = CheckStatus::pass;
    r.put("common", std::to_string(certified[0].second));
  } else {
    r.status = CheckStatus::inconclusive;
    r.detail = std::to_string(certified.size()) + " of 4 quantities certified within the bound";
  }
  return r;
}

/// Gpd_{A^e}(A) = gldim(A) when the global dimension is finite.
template <class F>
CheckReport happel_check(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("happel", a, bound);
  auto gl = gldim_status(a, bound);
  if (!gl.is_finite()) throw PreconditionUnmet("global dimension not certified finite: " + gl.to_string());
  auto gpd = gpd_status(bimodule_as_env_module(a), bound);
  r.put("gldim(A)", gl.to_string());
  r.put("Gpd_Ae(A)", gpd.to_string());
  if (gpd.exceeds_bound()) {
    r.status = CheckStatus::inconclusive;
    r.detail = gpd.note;
  } else if (gpd.is_finite() && gpd.value == gl.value) {
    r.status = CheckStatus::pass;
  } else {
    r.status = CheckStatus::fail;
    r.detail = "Gpd_Ae(A) = " + gpd.to_string() + ", gldim = " + gl.to_string();
  }
  return r;
}

/// A is Gorenstein projective over A^e iff A is selfinjective.
template <class F>
CheckReport selfinjective_gp_check(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("selfinj", a, bound);
  const bool si = is_selfinjective(a);
  auto cert = gp_certificate(bimodule_as_env_module(a), bound);
  r.put("selfinjective", si ? "yes" : "no");
  r.put("A over A^e", cert.to_string());
  if (si) {
    r.status = cert.verdict == GPVerdict::not_gp ? CheckStatus::fail : CheckStatus::pass;
    if (cert.verdict == GPVerdict::not_gp) r.detail = "selfinjective but " + cert.witness;
  } else if (cert.verdict == GPVerdict::not_gp) {
    r.status = CheckStatus::pass;
    r.detail = cert.witness;
  } else if (cert.verdict == GPVerdict::gp_certified) {
    r.status = CheckStatus::fail;
    r.detail = "not selfinjective but " + cert.to_string();
  } else {
    r.status = CheckStatus::inconclusive;
    r.detail = "all legs vanish through degree " + std::to_string(cert.bound);
  }
  return r;
}

/// No syzygy Omega^m(I), m >= 1, of an injective I of infinite projective
/// dimension is Gorenstein projective.
template <class F>
CheckReport syzygy_injective_check(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("prop22", a, bound);
  std::size_t tested = 0;
  std::string certs;
  for (std::size_t j = 0; j < a->num_idempotents(); ++j) {
    auto inj = injective_module(a, j);
    auto pd = pd_status(inj, bound);
    if (pd.is_finite()) continue;
    ++tested;
    Resolution<F> res(inj);
    for (std::size_t m = 1; m <= bound; ++m) {
      std::optional<Module<F>> om;
      try {
        om = res.syzygy_module(m);
      } catch (const ResourceLimit& e) {
        certs += " " + inj.label() + ": stopped at m=" + std::to_string(m) + " (" + e.what() + ")";
        break;
      }
      auto cert = gp_certificate(*om, bound);
      if (cert.certified()) {
        r.status = CheckStatus::fail;
        r.detail = "Omega^" + std::to_string(m) + "(" + inj.label() + ") " + cert.to_string();
        return r;
      }
      certs += " " + inj.label() + "/" + std::to_string(m) + ":" +
               (cert.verdict == GPVerdict::not_gp ? "NotGP" : "GPUpToBound");
    }
  }
  if (tested == 0) throw PreconditionUnmet("every indecomposable injective has finite projective dimension");
  r.put("injectives tested", std::to_string(tested));
  r.put("syzygies", certs.empty() ? "-" : certs.substr(1));
  r.status = CheckStatus::pass;
  return r;
}

/// Nonvanishing set {1 <= i <= B : Ext^i(D(A), A) != 0}. In the Gorenstein
/// case its maximum must be Gdim(A); otherwise it should reach beyond B - 3
/// (a window heuristic, never fail).
template <class F>
CheckReport tachikawa_window(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("tachikawa", a, bound);
  auto dims = ext_table(coregular(a), regular_right(a), bound).dims;
  std::vector<std::size_t> set;
  for (std::size_t i = 1; i <= bound; ++i)
    if (dims[i] != 0) set.push_back(i);
  r.put("nonvanishing", dims_string(set));
  const bool si = is_selfinjective(a);
  r.put("first-tachikawa", si ? "selfinjective (excluded)" : set.empty() ? "not observed in window" : "observed");
  auto g = gorenstein_dim(a, bound);
  r.put("Gdim(A)", g.to_string());
  const std::size_t top = set.empty() ? 0 : set.back();
  if (g.is_finite()) {
    if (top == g.value) {
      r.status = CheckStatus::pass;
    } else {
      r.status = CheckStatus::fail;
      r.detail = "Gdim " + std::to_string(g.value) + " but largest nonvanishing degree " + std::to_string(top);
    }
    return r;
  }
  r.put("gate", "max > B - 3 (heuristic)");
  if (!set.empty() && top + 3 > bound) {
    r.status = CheckStatus::pass;
  } else {
    r.status = CheckStatus::inconclusive;
    r.detail = "vanishing tail inside the window";
  }
  return r;
}

/// Left and right injective dimensions of A agree when both are finite.
template <class F>
CheckReport symmetry_check(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("symmetry", a, bound);
  auto right = inj_dim_status(a, Side::right, bound);
  auto left = inj_dim_status(a, Side::left, bound);
  r.put("id(A_A)", right.to_string());
  r.put("id(_AA)", left.to_string());
  if (right.is_finite() && left.is_finite()) {
    r.status = right.value == left.value ? CheckStatus::pass : CheckStatus::fail;
    if (r.status == CheckStatus::fail) r.detail = "right " + right.to_string() + " != left " + left.to_string();
  } else {
    r.status = CheckStatus::inconclusive;
    r.detail = "not both sides certified finite";
  }
  return r;
}

/// Search among simples, indecomposable injectives, their first syzygies
/// and duals for a module stable through B that fails the GP test.
template <class F>
CheckReport nearly_gorenstein_witness(const AlgebraPtr<F>& a, std::size_t bound) {
  auto r = detail::start("nearly", a, bound);
  std::vector<Module<F>> cands;
  for (auto& s : simples(a)) cands.push_back(s);
  for (auto& i : indecomposable_injectives(a)) cands.push_back(i);
  const std::size_t base = cands.size();
  for (std::size_t k = 0; k < base; ++k) {
    auto om = syzygy(cands[k], 1);
    if (om.dim()) cands.push_back(om.with_label("omega^1(" + cands[k].label() + ")"));
  }
  std::size_t checked = 0;
  for (const auto& m : cands) {
    if (m.dim() == 0) continue;
    ++checked;
    if (!stable_status(m, bound).stable()) continue;
    auto cert = gp_certificate(m, bound);
    if (cert.verdict == GPVerdict::not_gp) {
      r.put("witness", m.label());
      r.put("certificate", cert.to_string());
      const auto g = gorenstein_dim(a, bound);
      if (g.is_finite()) {
        // Over a Gorenstein algebra stable modules are Gorenstein projective.
        r.status = CheckStatus::fail;
        r.detail = m.label() + " stable but " + cert.to_string() + " with Gdim " + g.to_string();
      } else {
        r.status = CheckStatus::inconclusive;
        r.detail = m.label() + " stable through " + std::to_string(bound) + " but " + cert.to_string();
      }
      return r;
    }
  }
  r.put("modules checked", std::to_string(checked));
  r.status = CheckStatus::pass;
  r.detail = "no stable non-GP module found";
  return r;
}

template <class F>
using Checker = std::function<CheckReport(const AlgebraPtr<F>&, std::size_t)>;

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"lemma",  "theorem",  "happel",   "selfinj",
                                                 "prop22", "tachikawa", "symmetry", "nearly"};
  return names;
}

template <class F>
Checker<F> checker(const std::string& name) {
  if (name == "lemma") return lemma_dim_match<F>;
  if (name == "theorem") return main_theorem_report<F>;
  if (name == "happel") return happel_check<F>;
  if (name == "selfinj") return selfinjective_gp_check<F>;
  if (name == "prop22") return syzygy_injective_check<F>;
  if (name == "tachikawa") return tachikawa_window<F>;
  if (name == "symmetry") return symmetry_check<F>;
  if (name == "nearly") return nearly_gorenstein_witness<F>;
  throw UnknownName("unknown check '" + name + "'");
}

/// Runs a check, turning an unmet precondition into a skipped report.
template <class F>
CheckReport run_check(const std::string& name, const AlgebraPtr<F>& a, std::size_t bound) {
  auto fn = checker<F>(name);
  try {
    return fn(a, bound);
  } catch (const PreconditionUnmet& e) {
    CheckReport r = detail::start(name.c_str(), a, bound);
    r.check = name;
    r.status = CheckStatus::skipped;
    r.detail = e.what();
    return r;
  }
}

}  // namespace gorhom

#endif  // GORHOM_VERIFY_HPP
