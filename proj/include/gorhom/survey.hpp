#ifndef GORHOM_SURVEY_HPP
#define GORHOM_SURVEY_HPP

// Survey runner: enumerates family members, runs checks as independent jobs
// on a fixed number of threads and emits rows in enumeration order.

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "gorhom/io.hpp"
#include "gorhom/report.hpp"

namespace gorhom {

struct SurveyMember {
  std::string name;
  FieldSpec field;
  json family;  // family object for build_family, or {"family": "builtin", "name": ...}
};

struct SurveyConfig {
  std::vector<SurveyMember> members;
  std::size_t bound = default_bound;
  std::vector<std::string> checks;
  std::string output;  // empty: standard output
  std::size_t width = 1;
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline bool is_min_rotation(const std::vector<std::size_t>& s) {
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::vector<std::size_t> rot(s.begin() + static_cast<long>(r), s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(r));
    if (rot < s) return false;
  }
  return true;
}

inline std::string field_suffix(const FieldSpec& f) { return f == FieldSpec::prime(2) ? "" : "/" + f.to_string(); }

inline std::size_t positive(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) throw ParseError(where + "." + key, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline void expand_family(const json& spec, std::size_t idx, std::vector<SurveyMember>& out) {
  const std::string where = "families[" + std::to_string(idx) + "]";
  const std::string kind = need_string(need(spec, "family", where), where + ".family");
  const FieldSpec field = spec.contains("field") ? parse_field(spec["field"], where + ".field") : FieldSpec::prime(2);
  const std::string sfx = field_suffix(field);
  if (kind == "nakayama-linear" || kind == "nakayama-cyclic") {
    const bool cyclic = kind == "nakayama-cyclic";
    std::vector<std::vector<std::size_t>> all;
    if (spec.contains("series")) {
      for (const auto& s : spec["series"]) all.push_back(json_sizes(s, where + ".series"));
    } else {
      const std::size_t nv = positive(spec, "max_vertices", where);
      const std::size_t ce = positive(spec, "max_entry", where);
      for (std::size_t n = 1; n <= nv; ++n)
        for (auto& s : kupisch_series(n, ce, cyclic))
          if (!cyclic || is_min_rotation(s)) all.push_back(s);
    }
    for (const auto& s : all) {
      check_kupisch(s, cyclic);
      json fam = {{"family", kind}, {"series", s}};
      out.push_back({kind + "[" + join_series(s) + "]" + sfx, field, fam});
    }
  } else if (kind == "truncated-poly") {
    std::vector<std::size_t> ns;
    if (spec.contains("n")) {
      ns = spec["n"].is_array() ? json_sizes(spec["n"], where + ".n") : json_sizes(json::array({spec["n"]}), where + ".n");
    } else {
      for (std::size_t n = 1; n <= positive(spec, "max_n", where); ++n) ns.push_back(n);
    }
    for (auto n : ns) out.push_back({"trunc-" + std::to_string(n) + sfx, field, {{"family", kind}, {"n", n}}});
  } else if (kind == "monomial-local" || kind == "tensor-pair") {
    std::string name = spec.value("name", "");
    if (name.empty()) name = kind + "#" + std::to_string(idx);
    out.push_back({name, field, spec});
  } else if (kind == "builtin") {
    std::vector<std::string> names;
    if (spec.contains("names")) {
      for (const auto& n : spec["names"]) names.push_back(need_string(n, where + ".names"));
    } else {
      names = builtin_names();
    }
    for (const auto& n : names) {
      builtin(n);  // UnknownName early
      out.push_back({n, FieldSpec::prime(2), {{"family", "builtin"}, {"name", n}}});
    }
  } else {
    throw ParseError(where + ".family", "unknown family '" + kind + "'");
  }
}

}  // namespace detail

inline SurveyConfig parse_survey_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(detail::line_col(text, e.byte ? e.byte - 1 : 0), "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  SurveyConfig c;
  const json& fams = detail::need(doc, "families", "config");
  if (!fams.is_array() || fams.empty()) throw UsageError("survey needs a nonempty family list");
  for (std::size_t i = 0; i < fams.size(); ++i) detail::expand_family(fams[i], i, c.members);
  if (doc.contains("bound")) c.bound = detail::positive(doc, "bound", "config");
  const json& checks = detail::need(doc, "checks", "config");
  if (!checks.is_array() || checks.empty()) throw UsageError("survey needs a nonempty check list");
  for (const auto& ch : checks) {
    const std::string n = detail::need_string(ch, "config.checks");
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw ParseError("config.checks", "unknown check '" + n + "'");
    c.checks.push_back(n);
  }
  if (doc.contains("output")) c.output = detail::need_string(doc["output"], "config.output");
  if (doc.contains("width")) c.width = detail::positive(doc, "width", "config");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ParseError("config.seed", "expected a nonnegative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  return c;
}

namespace detail {

inline CheckReport run_survey_job(const SurveyMember& m, const std::string& check, std::size_t bound) {
  try {
    if (m.family.value("family", "") == "builtin") {
      auto a = builtin(m.family["name"].get<std::string>());
      return run_check(check, a, bound);
    }
    return visit_field(m.field, [&](auto field) {
      using F = decltype(field);
      auto a = build_family<F>(m.family, field, m.field, m.name);
      return run_check(check, a, bound);
    });
  } catch (const std::exception& e) {
    CheckReport r;
    r.check = check;
    r.algebra = m.name;
    r.bound = bound;
    r.status = CheckStatus::error;
    r.detail = e.what();
    return r;
  }
}

}  // namespace detail

struct SurveyResult {
  std::vector<CheckReport> rows;
  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const auto& r) { return r.status == s; }));
  }
};

/// Runs every (member, check) job; rows come back in enumeration order
/// regardless of the width.
inline SurveyResult survey_run(const SurveyConfig& c, std::size_t width) {
  struct Job {
    const SurveyMember* member;
    const std::string* check;
  };
  std::vector<Job> jobs;
  for (const auto& m : c.members)
    for (const auto& ch : c.checks) jobs.push_back({&m, &ch});
  SurveyResult res;
  res.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
      res.rows[i] = detail::run_survey_job(*jobs[i].member, *jobs[i].check, c.bound);
  };
  width = std::max<std::size_t>(1, std::min(width, jobs.size()));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return res;
}

inline void write_survey_csv(std::ostream& os, const SurveyResult& r) {
  os << csv_header() << "\n";
  for (const auto& row : r.rows) os << csv_row(row) << "\n";
}

inline void write_survey_summary(std::ostream& os, const SurveyResult& r) {
  os << "survey: " << r.rows.size() << " jobs, " << r.count(CheckStatus::pass) << " pass, "
     << r.count(CheckStatus::fail) << " fail, " << r.count(CheckStatus::inconclusive)
     << " inconclusive, " << r.count(CheckStatus::skipped) << " skipped, " << r.count(CheckStatus::error) << " errors\n";
  for (const auto& row : r.rows)
    if (row.status == CheckStatus::fail)
      os << "  FAIL " << row.check << " on " << row.algebra << ": " << row.detail
         << (row.check == "theorem" ? "  <-- potential counterexample to the four-way equality" : "") << "\n";
}

}  // namespace gorhom

#endif  // GORHOM_SURVEY_HPP
