#ifndef GORHOM_REPORT_HPP
#define GORHOM_REPORT_HPP

// Report emission: human table, CSV (algebra,check,bound,status,value) and
// JSON lines.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gorhom/verify.hpp"

namespace gorhom {

enum class Format { human, csv, jsonl };

inline Format parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "csv") return Format::csv;
  if (s == "jsonl") return Format::jsonl;
  throw UsageError("unknown format '" + s + "' (human, csv, jsonl)");
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline const std::string& csv_header() {
  static const std::string h = "algebra,check,bound,status,value";
  return h;
}

/// The value-or-witness column: the detail for non-pass reports, the
/// compared quantities otherwise.
inline std::string report_value(const CheckReport& r) {
  std::string data;
  for (const auto& [k, v] : r.data) data += (data.empty() ? "" : "; ") + k + "=" + v;
  if (r.status == CheckStatus::pass) return r.detail.empty() ? data : (data.empty() ? r.detail : data + "; " + r.detail);
  return r.detail.empty() ? data : r.detail;
}

inline std::string csv_row(const CheckReport& r) {
  return csv_field(r.algebra) + "," + csv_field(r.check) + "," + std::to_string(r.bound) + "," +
         status_name(r.status) + "," + csv_field(report_value(r));
}

inline nlohmann::json report_json(const CheckReport& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["check"] = r.check;
  j["bound"] = r.bound;
  j["status"] = status_name(r.status);
  j["detail"] = r.detail;
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [k, v] : r.data) d[k] = v;
  j["data"] = d;
  return j;
}

inline void write_human(std::ostream& os, const CheckReport& r) {
  os << "[" << status_name(r.status) << "] " << r.check << " on " << r.algebra << " (B=" << r.bound << ")\n";
  for (const auto& [k, v] : r.data) os << "    " << k << ": " << v << "\n";
  if (!r.detail.empty()) os << "    note: " << r.detail << "\n";
}

inline void write_reports(std::ostream& os, const std::vector<CheckReport>& reports, Format f) {
  if (f == Format::csv) os << csv_header() << "\n";
  for (const auto& r : reports) {
    switch (f) {
      case Format::human: write_human(os, r); break;
      case Format::csv: os << csv_row(r) << "\n"; break;
      case Format::jsonl: os << report_json(r).dump() << "\n"; break;
    }
  }
}

/// Key/value listing for info-style output.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

inline void write_key_values(std::ostream& os, const KeyValues& kv, Format f) {
  switch (f) {
    case Format::human: {
      std::size_t w = 0;
      for (const auto& [k, v] : kv) w = std::max(w, k.size());
      for (const auto& [k, v] : kv) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
      break;
    }
    case Format::csv:
      for (const auto& [k, v] : kv) os << csv_field(k) << "," << csv_field(v) << "\n";
      break;
    case Format::jsonl: {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [k, v] : kv) j[k] = v;
      os << j.dump() << "\n";
      break;
    }
  }
}

}  // namespace gorhom

#endif  // GORHOM_REPORT_HPP
