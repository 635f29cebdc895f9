#ifndef GORHOM_CLI_HPP
#define GORHOM_CLI_HPP

// Command dispatch for the gorhom tool. Exit codes: 0 computed or passed,
// 1 a check failed, 2 usage, parse or input errors, 3 inconclusive under
// --strict.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gorhom/expr.hpp"
#include "gorhom/survey.hpp"

namespace gorhom {

namespace detail {

struct CliOptions {
  std::string file;
  std::string builtin_name;
  std::size_t bound = default_bound;
  std::string format = "human";
  std::string m_expr, n_expr;
  bool env = false;
  std::string checks;
  bool strict = false;
  std::string config;
  std::size_t width = 0;
};

inline AlgebraFile load_input(const CliOptions& o) {
  if (!o.builtin_name.empty() && !o.file.empty()) throw UsageError("give either FILE or --builtin, not both");
  if (!o.builtin_name.empty()) {
    AlgebraFile f;
    f.kind = AlgebraFile::Kind::builtin;
    f.builtin = o.builtin_name;
    f.field = FieldSpec::prime(2);
    return f;
  }
  if (o.file.empty()) throw UsageError("missing algebra FILE (or --builtin NAME)");
  return read_algebra_file(o.file);
}

inline std::string summands_string(const std::vector<std::size_t>& s) {
  if (s.empty()) return "0";
  std::vector<std::size_t> count;
  for (auto j : s) {
    if (count.size() <= j) count.resize(j + 1, 0);
    ++count[j];
  }
  std::string out;
  for (std::size_t j = 0; j < count.size(); ++j) {
    if (!count[j]) continue;
    if (!out.empty()) out += " + ";
    out += "P(" + std::to_string(j + 1) + ")";
    if (count[j] > 1) out += "^" + std::to_string(count[j]);
  }
  return out;
}

template <class F>
int cmd_info(const AlgebraPtr<F>& a, const CliOptions& o, std::ostream& out) {
  KeyValues kv;
  kv.emplace_back("name", a->name().empty() ? "-" : a->name());
  kv.emplace_back("field", a->field().spec().to_string());
  kv.emplace_back("dim", std::to_string(a->dim()));
  kv.emplace_back("vertices", std::to_string(a->num_idempotents()));
  kv.emplace_back("radical dim", std::to_string(a->radical().rows()));
  auto inv = module_invariants(regular_right(a));
  const std::size_t r = a->num_idempotents();
  std::size_t loewy = 0;
  for (std::size_t i = r; i + 1 < inv.size() && inv[i] != 0; ++i) ++loewy;
  kv.emplace_back("Loewy length", std::to_string(loewy + 1));
  kv.emplace_back("commutative", a->is_commutative() ? "yes" : "no");
  kv.emplace_back("validation", validate(*a).summary());
  for (const auto& w : a->warnings()) kv.emplace_back("warning", w);
  const bool si = is_selfinjective(a);
  kv.emplace_back("selfinjective", si ? "yes" : "no");
  auto gl = gldim_status(a, o.bound);
  kv.emplace_back("gldim", gl.to_string());
  auto g = gorenstein_dim(a, o.bound);
  kv.emplace_back("Gdim", g.to_string() + (g.note.empty() ? "" : "  [" + g.note + "]"));
  write_key_values(out, kv, parse_format(o.format));
  return 0;
}

template <class F>
struct Ambient {
  AlgebraPtr<F> amb;
  AlgebraPtr<F> base;  // set under --env
};

template <class F>
Ambient<F> ambient(const AlgebraPtr<F>& a, bool env) {
  if (!env) return {a, nullptr};
  return {enveloping(a), a};
}

template <class F>
int cmd_resolve(const AlgebraPtr<F>& a, const CliOptions& o, std::ostream& out) {
  if (o.m_expr.empty()) throw UsageError("resolve needs --m EXPR");
  auto amb = ambient(a, o.env);
  auto m = evaluate(*parse_module_expression(o.m_expr), amb.amb, amb.base);
  const Format f = parse_format(o.format);
  Resolution<F> res(m);
  if (f == Format::csv) out << "degree,generators,dim_P,dim_syzygy\n";
  for (std::size_t i = 0; i <= o.bound; ++i) {
    const auto& t = res.term(i);
    const std::size_t dp = detail::block_offsets(*res.algebra(), t.summands).back();
    const std::size_t ds = res.syzygy_dim(i + 1);
    switch (f) {
      case Format::human:
        out << "P_" << i << " = " << summands_string(t.summands) << "  (dim " << dp << "), dim Omega^" << i + 1
            << " = " << ds << "\n";
        break;
      case Format::csv:
        out << i << "," << csv_field(summands_string(t.summands)) << "," << dp << "," << ds << "\n";
        break;
      case Format::jsonl:
        out << json{{"degree", i}, {"generators", summands_string(t.summands)}, {"dim_P", dp}, {"dim_syzygy", ds}}.dump()
            << "\n";
        break;
    }
    if (ds == 0) break;
  }
  auto pd = pd_status(m, o.bound);
  if (f == Format::human) out << "pd = " << pd.to_string() << (pd.note.empty() ? "" : "  [" + pd.note + "]") << "\n";
  return 0;
}

template <class F>
int cmd_ext(const AlgebraPtr<F>& a, const CliOptions& o, std::ostream& out) {
  if (o.m_expr.empty() || o.n_expr.empty()) throw UsageError("ext needs --m EXPR and --n EXPR");
  auto amb = ambient(a, o.env);
  auto m = evaluate(*parse_module_expression(o.m_expr), amb.amb, amb.base);
  auto n = evaluate(*parse_module_expression(o.n_expr), amb.amb, amb.base);
  auto t = ext_table(m, n, o.bound);
  for (std::size_t i = 0; i <= o.bound; ++i) {
    switch (parse_format(o.format)) {
      case Format::human: out << "Ext^" << i << " = " << t.dims[i] << "\n"; break;
      case Format::csv: out << i << "," << t.dims[i] << "\n"; break;
      case Format::jsonl: out << json{{"degree", i}, {"dim", t.dims[i]}}.dump() << "\n"; break;
    }
  }
  return 0;
}

template <class F>
int cmd_gordim(const AlgebraPtr<F>& a, const CliOptions& o, std::ostream& out) {
  KeyValues kv;
  auto r = inj_dim_status(a, Side::right, o.bound);
  auto l = inj_dim_status(a, Side::left, o.bound);
  auto g = gorenstein_dim(a, o.bound);
  kv.emplace_back("id(A_A)", r.to_string());
  kv.emplace_back("id(_AA)", l.to_string());
  kv.emplace_back("Gdim", g.to_string());
  if (!g.note.empty()) kv.emplace_back("certificate", g.note);
  if (g.symmetry_violation) kv.emplace_back("symmetry", "VIOLATION");
  write_key_values(out, kv, parse_format(o.format));
  return g.symmetry_violation ? 1 : 0;
}

template <class F>
int cmd_envelope(const AlgebraPtr<F>& a, const FieldSpec& spec, std::ostream& out) {
  out << serialize_algebra_file(algebra_to_file(*enveloping(a), spec));
  return 0;
}

template <class F>
int cmd_verify(const AlgebraPtr<F>& a, const CliOptions& o, std::ostream& out) {
  std::vector<std::string> names;
  std::stringstream ss(o.checks.empty() ? std::string("lemma,theorem") : o.checks);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) names.push_back(item);
  for (const auto& n : names)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw UsageError("unknown check '" + n + "'");
  std::vector<CheckReport> reports;
  for (const auto& n : names) reports.push_back(run_check(n, a, o.bound));
  write_reports(out, reports, parse_format(o.format));
  bool fail = false, inconclusive = false;
  for (const auto& r : reports) {
    fail |= r.status == CheckStatus::fail;
    inconclusive |= r.status == CheckStatus::inconclusive;
  }
  if (fail) return 1;
  if (inconclusive && o.strict) return 3;
  return 0;
}

inline int cmd_survey(const CliOptions& o, std::ostream& out, std::ostream& err) {
  if (o.config.empty()) throw UsageError("survey needs --config FILE.json");
  std::ifstream in(o.config);
  if (!in) throw UsageError("cannot open '" + o.config + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  SurveyConfig c = parse_survey_config(ss.str());
  if (c.seed) settings().seed = *c.seed;
  auto res = survey_run(c, o.width ? o.width : c.width);
  if (c.output.empty()) {
    write_survey_csv(out, res);
    write_survey_summary(err, res);
  } else {
    std::ofstream f(c.output);
    if (!f) throw UsageError("cannot write '" + c.output + "'");
    write_survey_csv(f, res);
    write_survey_summary(out, res);
  }
  return res.count(CheckStatus::fail) ? 1 : 0;
}

}  // namespace detail

/// Entry point; never lets an exception escape.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (const char* s = std::getenv("GORHOM_SEED")) {
    try {
      settings().seed = std::stoull(s);
    } catch (const std::exception&) {
      err << "gorhom: GORHOM_SEED must be a nonnegative integer\n";
      return 2;
    }
  }
  detail::CliOptions o;
  CLI::App app{"gorhom: Ext, Gorenstein dimensions and Gorenstein projectivity for finite-dimensional algebras"};
  app.require_subcommand(1);
  auto add_alg = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "algebra file (JSON)");
    sub->add_option("--builtin", o.builtin_name, "named algebra instead of FILE");
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound,-B", o.bound, "degree bound")->check(CLI::Range(0, 64));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "human, csv or jsonl")->check(CLI::IsMember({"human", "csv", "jsonl"}));
  };
  auto* info = app.add_subcommand("info", "summary of an algebra");
  add_alg(info);
  add_bound(info);
  add_format(info);
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a module");
  add_alg(resolve);
  add_bound(resolve);
  add_format(resolve);
  resolve->add_option("--m", o.m_expr, "module expression")->required();
  resolve->add_flag("--env", o.env, "work over the enveloping algebra (enables Aee)");
  auto* ext = app.add_subcommand("ext", "dimensions of Ext^i(M, N)");
  add_alg(ext);
  add_bound(ext);
  add_format(ext);
  ext->add_option("--m", o.m_expr, "module expression")->required();
  ext->add_option("--n", o.n_expr, "module expression")->required();
  ext->add_flag("--env", o.env, "work over the enveloping algebra (enables Aee)");
  auto* gordim = app.add_subcommand("gordim", "injective and Gorenstein dimensions");
  add_alg(gordim);
  add_bound(gordim);
  add_format(gordim);
  auto* envelope = app.add_subcommand("envelope", "emit the enveloping algebra as an algebra file");
  add_alg(envelope);
  auto* verify = app.add_subcommand("verify", "run checks");
  add_alg(verify);
  add_bound(verify);
  add_format(verify);
  verify->add_option("--checks", o.checks, "comma-separated: lemma,theorem,happel,selfinj,prop22,tachikawa,symmetry,nearly");
  verify->add_flag("--strict", o.strict, "exit 3 when a check is inconclusive");
  auto* survey = app.add_subcommand("survey", "run checks over algebra families");
  survey->add_option("--config", o.config, "survey configuration (JSON)")->required();
  survey->add_option("--width", o.width, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gorhom: " << e.what() << "\n" << "run 'gorhom --help' for usage\n";
    return 2;
  }

  try {
    if (survey->parsed()) return detail::cmd_survey(o, out, err);
    AlgebraFile file = detail::load_input(o);
    return visit_field(file.field, [&](auto field) -> int {
      using F = decltype(field);
      auto a = build_algebra<F>(file, field);
      if (info->parsed()) return detail::cmd_info(a, o, out);
      if (resolve->parsed()) return detail::cmd_resolve(a, o, out);
      if (ext->parsed()) return detail::cmd_ext(a, o, out);
      if (gordim->parsed()) return detail::cmd_gordim(a, o, out);
      if (envelope->parsed()) return detail::cmd_envelope(a, file.field, out);
      return detail::cmd_verify(a, o, out);
    });
  } catch (const InternalInconsistency& e) {
    err << "gorhom: internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "gorhom: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "gorhom: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gorhom

#endif  // GORHOM_CLI_HPP
