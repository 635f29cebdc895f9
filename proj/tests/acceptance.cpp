// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "gorhom/verify.hpp"

using namespace gtest_util;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Dims = std::vector<std::size_t>;

std::string join(const Dims& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<AlgebraPtr<GF>> builtins() {
  std::vector<AlgebraPtr<GF>> out;
  for (const auto& n : builtin_names()) out.push_back(builtin(n));
  return out;
}

Outcome env_dual_match() {
  for (const auto& a : builtins()) {
    auto r = lemma_dim_match(a, 6);
    if (r.status != CheckStatus::pass) return {false, a->name() + ": " + status_name(r.status) + " " + r.detail};
  }
  return {true, "7 builtins, degrees 1..6"};
}

Outcome bar_oracle() {
  std::size_t n = 0;
  for (const auto& a : corpus()) {
    if (a->dim() > 3) continue;
    auto bar = ext_env_bar_oracle(a, 4).dims;
    auto res = ext_table(bimodule_as_env_module(a), regular_right(enveloping(a)), 4).dims;
    if (bar != res) return {false, a->name() + ": bar [" + join(bar) + "] vs resolution [" + join(res) + "]"};
    ++n;
  }
  return {true, std::to_string(n) + " algebras of dim <= 3, B = 4"};
}

Outcome happel() {
  const GF f(2);
  std::string seen;
  for (const auto& a : {builtin("field"), builtin("A2-path"), nakayama({2, 1}, false, f), nakayama({2, 2, 1}, false, f)}) {
    auto gl = gldim_status(a, 10);
    auto gpd = gpd_status(bimodule_as_env_module(a), 10);
    if (!gl.is_finite() || !gpd.is_finite() || gl.value != gpd.value)
      return {false, a->name() + ": gldim " + gl.to_string() + ", Gpd " + gpd.to_string()};
    seen += " " + a->name() + "=" + std::to_string(gl.value);
  }
  return {true, "Gpd_Ae(A) = gldim:" + seen};
}

Outcome finite_gpd_infinite_pd() {
  for (const auto& a : {truncated_poly(GF(2), 2), truncated_poly(GF(3), 3)}) {
    auto s = simple_module(a, 0);
    auto pd = pd_status(s, 10);
    auto gpd = gpd_status(s, 10);
    if (!pd.is_infinite() || gpd.to_string() != "Finite(0)")
      return {false, a->name() + " over " + a->field().spec().to_string() + ": pd " + pd.to_string() + ", Gpd " +
                         gpd.to_string()};
  }
  return {true, "pd InfiniteCertified, Gpd Finite(0) over GF(2) n=2 and GF(3) n=3"};
}

Outcome four_way_equality() {
  const std::vector<std::pair<std::string, std::string>> want = {
      {"dual-numbers", "0"}, {"A2-path", "1"}, {"kupisch-22-cyclic", "0"}, {"A2-tensor-dual", ""}};
  std::string seen;
  for (const auto& [n, v] : want) {
    auto r = main_theorem_report(builtin(n), 10);
    const std::string* common = r.get("common");
    if (r.status != CheckStatus::pass || !common || (!v.empty() && *common != v))
      return {false, n + ": " + status_name(r.status) + " " + r.detail};
    seen += " " + n + "=" + *common;
  }
  return {true, "four-way equality:" + seen};
}

Outcome selfinjectivity() {
  for (const auto& n : {"dual-numbers", "trunc-p2", "kupisch-22-cyclic"}) {
    auto r = selfinjective_gp_check(builtin(n), 10);
    if (r.status != CheckStatus::pass) return {false, std::string(n) + ": " + status_name(r.status)};
  }
  auto r = selfinjective_gp_check(builtin("A2-path"), 10);
  const std::string* cert = r.get("A over A^e");
  if (r.status != CheckStatus::pass || !cert || cert->rfind("NotGP(", 0) != 0)
    return {false, "A2-path: " + std::string(status_name(r.status)) + " " + (cert ? *cert : "")};
  return {true, "A2-path " + *cert};
}

Outcome tachikawa() {
  auto a = builtin("kommutativ-33");
  auto dims = ext_table(coregular(a), regular_right(a), 10).dims;
  std::size_t top = 0;
  for (std::size_t i = 1; i <= 10; ++i)
    if (dims[i]) top = i;
  if (top <= 7) return {false, "largest nonvanishing degree " + std::to_string(top)};
  auto p = syzygy_injective_check(a, 6);
  if (p.status != CheckStatus::pass) return {false, "syzygies of injectives: " + std::string(status_name(p.status)) + " " + p.detail};
  return {true, "max nonvanishing degree " + std::to_string(top) + "; no certified GP syzygy through m = 6"};
}

Outcome gpd_sup_consistency() {
  std::mt19937_64 rng(settings().seed);
  std::size_t sampled = 0, finite = 0;
  try {
    for (const auto& a : corpus()) {
      for (const auto& m : sample_modules(a, rng, 20, 20)) {
        ++sampled;
        auto g = gpd_status(m, 6);
        if (!g.is_finite()) continue;
        ++finite;
        auto sup = sup_ext_nonvanishing(m, 6);
        if (sup.degree.value_or(0) != g.value)
          return {false, a->name() + " " + m.label() + ": Gpd " + g.to_string() + ", sup " + sup.to_string()};
      }
    }
  } catch (const InternalInconsistency& e) {
    return {false, std::string("internal inconsistency: ") + e.what()};
  }
  if (sampled < 200) return {false, "only " + std::to_string(sampled) + " modules sampled"};
  return {true, std::to_string(sampled) + " modules, " + std::to_string(finite) + " with finite Gpd, all equal sup"};
}

Outcome padded_independence() {
  std::mt19937_64 rng(settings().seed + 1);
  std::size_t pairs = 0;
  for (const auto& a : corpus()) {
    auto ms = sample_modules(a, rng, 12, 16);
    for (int t = 0; t < 50; ++t) {
      const auto& m = ms[rng() % ms.size()];
      const auto& n = ms[rng() % ms.size()];
      Resolution<GF> res(m);
      const std::size_t k = 1 + rng() % 4, j = rng() % a->num_idempotents();
      auto lhs = ext_table_from_complex(padded_complex(res, 6, k, j), n, 5);
      auto rhs = ext_table(m, n, 5);
      if (lhs != rhs)
        return {false, a->name() + " " + m.label() + " / " + n.label() + ": [" + join(lhs.dims) + "] vs [" +
                           join(rhs.dims) + "]"};
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome survey_determinism() {
  auto dir = std::filesystem::temp_directory_path() / ("gorhom_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "survey.json") << R"({"families": [
      {"family": "nakayama-cyclic", "max_vertices": 3, "max_entry": 4},
      {"family": "nakayama-linear", "max_vertices": 3, "max_entry": 3},
      {"family": "builtin"}],
    "checks": ["lemma", "theorem", "tachikawa"], "bound": 4, "seed": 7})";
  auto run = [&](int width, const std::string& out) {
    std::string cmd = std::string(GORHOM_CLI_PATH) + " survey --config " + (dir / "survey.json").string() +
                      " --width " + std::to_string(width) + " > " + (dir / out).string() + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  const int c1 = run(1, "w1.csv"), c4 = run(4, "w4.csv"), c4b = run(4, "w4b.csv");
  const std::string a = slurp(dir / "w1.csv"), b = slurp(dir / "w4.csv"), c = slurp(dir / "w4b.csv");
  std::filesystem::remove_all(dir);
  if (c1 != 0 || c4 != 0 || c4b != 0)
    return {false, "exit codes " + std::to_string(c1) + "/" + std::to_string(c4) + "/" + std::to_string(c4b)};
  if (a.empty() || a != b || b != c) return {false, "CSV output differs"};
  std::size_t rows = 0;
  for (char ch : a) rows += ch == '\n';
  return {true, std::to_string(rows - 1) + " rows identical across widths 1, 4 and a repeat"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Ext(D(A),A) vs Ext over A^e", env_dual_match},
      {"bar oracle", bar_oracle},
      {"Gpd of A over A^e equals gldim", happel},
      {"finite Gpd with infinite pd", finite_gpd_infinite_pd},
      {"Gdim equals Gpd of A over A^e", four_way_equality},
      {"selfinjectivity criterion", selfinjectivity},
      {"Ext(D(A), A) window on kommutativ-33", tachikawa},
      {"Gpd equals sup Ext", gpd_sup_consistency},
      {"minimal vs padded resolutions", padded_independence},
      {"survey determinism", survey_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
         << "): " << o.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
