#ifndef GORHOM_IO_HPP
#define GORHOM_IO_HPP

// Algebra files: one JSON document per algebra.
//
//   {"name": ..., "field": {"kind": "prime", "p": 2} | {"kind": "rational"},
//    then exactly one of
//    "quiver":  {"vertices": [...], "arrows": [{"name","source","target"}],
//                "relations": ["x*y", [{"coeff": c, "path": "x*y"}, ...]],
//                "max_path_length": L}
//    "table":   {"basis": [...], "unit": {label: c}, "idempotents": [{label: c}],
//                "products": [{"left": l, "right": r, "result": {label: c}}]}
//    "builtin": NAME
//    "family":  {"family": "nakayama-linear" | "nakayama-cyclic" | "truncated-poly"
//                          | "monomial-local" | "tensor-pair", ...}}
//
// Prime-field coefficients are integers in [0, p); rational ones are strings
// "a/b" (or integers).

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gorhom/corpus.hpp"

namespace gorhom {

using json = nlohmann::json;

struct QuiverSpec {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::pair<std::string, std::vector<std::string>>>> relations;  // (coeff, path)
  int max_path_length = 2;
  bool operator==(const QuiverSpec&) const = default;
};

struct TableSpec {
  struct Product {
    std::string left, right;
    std::map<std::string, std::string> result;
    bool operator==(const Product&) const = default;
  };
  std::vector<std::string> basis;
  std::map<std::string, std::string> unit;
  std::vector<std::map<std::string, std::string>> idempotents;
  std::vector<Product> products;
  bool operator==(const TableSpec&) const = default;
};

struct AlgebraFile {
  enum class Kind { quiver, table, builtin, family };
  std::string name;
  FieldSpec field;
  Kind kind = Kind::quiver;
  QuiverSpec quiver;
  TableSpec table;
  std::string builtin;
  json family;  // family object, kept as given
  bool operator==(const AlgebraFile&) const = default;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const json& need(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, "missing key '" + key + "'");
  return *it;
}

inline std::string need_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

inline std::vector<std::string> split_path(const std::string& s, const std::string& where) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '*') {
      if (cur.empty()) throw ParseError(where, "empty arrow name in path '" + s + "'");
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (cur.empty()) throw ParseError(where, "empty arrow name in path '" + s + "'");
  out.push_back(cur);
  return out;
}

inline std::string join_path(const std::vector<std::string>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "*" : "") + p[i];
  return out;
}

/// Canonical text of a coefficient after checking it parses in the field.
inline std::string coeff_text(const json& v, const FieldSpec& f, const std::string& where) {
  if (f.kind == FieldKind::prime) {
    if (!v.is_number_integer()) throw ParseError(where, "prime-field coefficients must be integers");
    const auto c = v.get<long long>();
    if (c < 0 || c >= static_cast<long long>(f.p))
      throw ParseError(where, "coefficient " + std::to_string(c) + " is not a residue in [0, " + std::to_string(f.p) +
                                  ")");
    return std::to_string(c);
  }
  std::string s;
  if (v.is_number_integer()) {
    s = std::to_string(v.get<long long>());
  } else if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    throw ParseError(where, "rational coefficients must be strings \"a/b\" or integers");
  }
  try {
    return RationalField{}.from_string(s).get_str();
  } catch (const std::exception&) {
    throw ParseError(where, "invalid rational '" + s + "'");
  }
}

inline json coeff_json(const std::string& c, const FieldSpec& f) {
  if (f.kind == FieldKind::prime) return json(std::stoll(c));
  return json(c);
}

inline FieldSpec parse_field(const json& v, const std::string& where) {
  const std::string kind = need_string(need(v, "kind", where), where + ".kind");
  if (kind == "rational") return FieldSpec::rational();
  if (kind != "prime") throw ParseError(where + ".kind", "expected \"prime\" or \"rational\"");
  const json& p = need(v, "p", where);
  if (!p.is_number_integer() || p.get<long long>() < 2 || p.get<long long>() > 65521 ||
      !is_prime(static_cast<std::uint64_t>(p.get<long long>())))
    throw ParseError(where + ".p", "expected a prime below 65536");
  return FieldSpec::prime(static_cast<std::uint32_t>(p.get<long long>()));
}

inline json field_json(const FieldSpec& f) {
  if (f.kind == FieldKind::rational) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.p}};
}

inline std::map<std::string, std::string> parse_sparse(const json& v, const FieldSpec& f,
                                                      const std::vector<std::string>& basis,
                                                      const std::string& where) {
  if (!v.is_object()) throw ParseError(where, "expected an object {label: coefficient}");
  std::map<std::string, std::string> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (std::find(basis.begin(), basis.end(), it.key()) == basis.end())
      throw ParseError(where, "unknown basis label '" + it.key() + "'");
    out[it.key()] = coeff_text(it.value(), f, where + "." + it.key());
  }
  return out;
}

inline json sparse_json(const std::map<std::string, std::string>& m, const FieldSpec& f) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = coeff_json(v, f);
  return out;
}

inline QuiverSpec parse_quiver(const json& q, const FieldSpec& f) {
  QuiverSpec out;
  const json& vs = need(q, "vertices", "quiver");
  if (!vs.is_array() || vs.empty()) throw ParseError("quiver.vertices", "expected a nonempty array");
  for (std::size_t i = 0; i < vs.size(); ++i)
    out.vertices.push_back(need_string(vs[i], "quiver.vertices[" + std::to_string(i) + "]"));
  if (q.contains("arrows")) {
    const json& as = q["arrows"];
    if (!as.is_array()) throw ParseError("quiver.arrows", "expected an array");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string w = "quiver.arrows[" + std::to_string(i) + "]";
      out.arrows.push_back({need_string(need(as[i], "name", w), w + ".name"),
                            need_string(need(as[i], "source", w), w + ".source"),
                            need_string(need(as[i], "target", w), w + ".target")});
    }
  }
  if (q.contains("relations")) {
    const json& rs = q["relations"];
    if (!rs.is_array()) throw ParseError("quiver.relations", "expected an array");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string w = "quiver.relations[" + std::to_string(i) + "]";
      std::vector<std::pair<std::string, std::vector<std::string>>> rel;
      if (rs[i].is_string()) {
        rel.emplace_back("1", split_path(rs[i].get<std::string>(), w));
      } else if (rs[i].is_array() && !rs[i].empty()) {
        for (std::size_t t = 0; t < rs[i].size(); ++t) {
          const std::string wt = w + "[" + std::to_string(t) + "]";
          rel.emplace_back(coeff_text(need(rs[i][t], "coeff", wt), f, wt + ".coeff"),
                           split_path(need_string(need(rs[i][t], "path", wt), wt + ".path"), wt + ".path"));
        }
      } else {
        throw ParseError(w, "expected a path string or a nonempty array of terms");
      }
      out.relations.push_back(std::move(rel));
    }
  }
  if (q.contains("max_path_length")) {
    const json& l = q["max_path_length"];
    if (!l.is_number_integer() || l.get<long long>() < 1 || l.get<long long>() > 64)
      throw ParseError("quiver.max_path_length", "expected an integer in [1, 64]");
    out.max_path_length = static_cast<int>(l.get<long long>());
  }
  return out;
}

inline TableSpec parse_table(const json& t, const FieldSpec& f) {
  TableSpec out;
  const json& bs = need(t, "basis", "table");
  if (!bs.is_array() || bs.empty()) throw ParseError("table.basis", "expected a nonempty array");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    out.basis.push_back(need_string(bs[i], "table.basis[" + std::to_string(i) + "]"));
    if (std::count(out.basis.begin(), out.basis.end(), out.basis.back()) > 1)
      throw ParseError("table.basis[" + std::to_string(i) + "]", "duplicate label '" + out.basis.back() + "'");
  }
  out.unit = parse_sparse(need(t, "unit", "table"), f, out.basis, "table.unit");
  const json& is = need(t, "idempotents", "table");
  if (!is.is_array() || is.empty()) throw ParseError("table.idempotents", "expected a nonempty array");
  for (std::size_t i = 0; i < is.size(); ++i)
    out.idempotents.push_back(parse_sparse(is[i], f, out.basis, "table.idempotents[" + std::to_string(i) + "]"));
  const json& ps = need(t, "products", "table");
  if (!ps.is_array()) throw ParseError("table.products", "expected an array");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string w = "table.products[" + std::to_string(i) + "]";
    TableSpec::Product p;
    p.left = need_string(need(ps[i], "left", w), w + ".left");
    p.right = need_string(need(ps[i], "right", w), w + ".right");
    for (const auto* lab : {&p.left, &p.right})
      if (std::find(out.basis.begin(), out.basis.end(), *lab) == out.basis.end())
        throw ParseError(w, "unknown basis label '" + *lab + "'");
    p.result = parse_sparse(need(ps[i], "result", w), f, out.basis, w + ".result");
    out.products.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

inline AlgebraFile parse_algebra_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(detail::line_col(text, e.byte ? e.byte - 1 : 0), "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  AlgebraFile out;
  if (doc.contains("name")) out.name = detail::need_string(doc["name"], "name");
  out.field = doc.contains("field") ? detail::parse_field(doc["field"], "field") : FieldSpec::prime(2);
  int variants = 0;
  for (const char* k : {"quiver", "table", "builtin", "family"}) variants += doc.contains(k) ? 1 : 0;
  if (variants != 1)
    throw ParseError("document", "expected exactly one of \"quiver\", \"table\", \"builtin\", \"family\"");
  if (doc.contains("quiver")) {
    out.kind = AlgebraFile::Kind::quiver;
    out.quiver = detail::parse_quiver(doc["quiver"], out.field);
  } else if (doc.contains("table")) {
    out.kind = AlgebraFile::Kind::table;
    out.table = detail::parse_table(doc["table"], out.field);
  } else if (doc.contains("builtin")) {
    out.kind = AlgebraFile::Kind::builtin;
    out.builtin = detail::need_string(doc["builtin"], "builtin");
  } else {
    out.kind = AlgebraFile::Kind::family;
    out.family = doc["family"];
    if (!out.family.is_object()) throw ParseError("family", "expected an object");
    detail::need_string(detail::need(out.family, "family", "family"), "family.family");
  }
  return out;
}

inline json algebra_file_json(const AlgebraFile& f) {
  json doc;
  if (!f.name.empty()) doc["name"] = f.name;
  doc["field"] = detail::field_json(f.field);
  switch (f.kind) {
    case AlgebraFile::Kind::quiver: {
      json q;
      q["vertices"] = f.quiver.vertices;
      q["arrows"] = json::array();
      for (const auto& a : f.quiver.arrows) q["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
      q["relations"] = json::array();
      for (const auto& rel : f.quiver.relations) {
        json r = json::array();
        for (const auto& [c, p] : rel) r.push_back({{"coeff", detail::coeff_json(c, f.field)}, {"path", detail::join_path(p)}});
        q["relations"].push_back(r);
      }
      q["max_path_length"] = f.quiver.max_path_length;
      doc["quiver"] = q;
      break;
    }
    case AlgebraFile::Kind::table: {
      json t;
      t["basis"] = f.table.basis;
      t["unit"] = detail::sparse_json(f.table.unit, f.field);
      t["idempotents"] = json::array();
      for (const auto& e : f.table.idempotents) t["idempotents"].push_back(detail::sparse_json(e, f.field));
      t["products"] = json::array();
      for (const auto& p : f.table.products)
        t["products"].push_back({{"left", p.left}, {"right", p.right}, {"result", detail::sparse_json(p.result, f.field)}});
      doc["table"] = t;
      break;
    }
    case AlgebraFile::Kind::builtin: doc["builtin"] = f.builtin; break;
    case AlgebraFile::Kind::family: doc["family"] = f.family; break;
  }
  return doc;
}

inline std::string serialize_algebra_file(const AlgebraFile& f) { return algebra_file_json(f).dump(2) + "\n"; }

inline AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra_file(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.location(), std::string(e.what()).substr(e.location().size() + 2));
  }
}

namespace detail {

template <class F>
typename F::element coeff_value(const F& field, const std::string& c) {
  if constexpr (is_prime_field_v<F>) {
    return field.from_int(std::stoll(c));
  } else {
    return field.from_string(c);
  }
}

inline std::vector<std::size_t> json_sizes(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array of positive integers");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 1) throw ParseError(where, "expected positive integers");
    out.push_back(static_cast<std::size_t>(x.get<long long>()));
  }
  return out;
}

}  // namespace detail

/// Builds one family member described by a family object (see the header
/// comment); `name` overrides the generated name.
template <class F>
AlgebraPtr<F> build_family(const json& fam, const F& field, const FieldSpec& spec, const std::string& name) {
  const std::string kind = detail::need_string(detail::need(fam, "family", "family"), "family.family");
  if (kind == "nakayama-linear" || kind == "nakayama-cyclic")
    return nakayama(detail::json_sizes(detail::need(fam, "series", "family"), "family.series"),
                    kind == "nakayama-cyclic", field, name);
  if (kind == "truncated-poly") {
    const json& n = detail::need(fam, "n", "family");
    if (!n.is_number_integer() || n.get<long long>() < 1) throw ParseError("family.n", "expected a positive integer");
    return truncated_poly(field, static_cast<std::size_t>(n.get<long long>()), name);
  }
  if (kind == "monomial-local") {
    std::vector<std::string> gens;
    for (const auto& g : detail::need(fam, "generators", "family")) gens.push_back(detail::need_string(g, "family.generators"));
    std::vector<std::vector<std::string>> monos;
    for (const auto& m : detail::need(fam, "monomials", "family"))
      monos.push_back(detail::split_path(detail::need_string(m, "family.monomials"), "family.monomials"));
    const bool comm = fam.value("commutative", false);
    return monomial_local(field, gens, monos, comm, name.empty() ? "monomial-local" : name);
  }
  if (kind == "tensor-pair") {
    auto side = [&](const char* key) {
      const json& s = detail::need(fam, key, "family");
      if (s.is_string()) {
        if constexpr (is_prime_field_v<F>) {
          if (spec == FieldSpec::prime(2)) return builtin(s.get<std::string>());
        }
        throw ParseError(std::string("family.") + key, "builtin algebras are defined over GF(2) only");
      }
      return build_family(s, field, spec, "");
    };
    auto l = side("left");
    auto r = side("right");
    return tensor(l, r, name.empty() ? l->name() + "(x)" + r->name() : name);
  }
  throw ParseError("family.family", "unknown family '" + kind + "'");
}

/// The algebra described by a parsed file, over the concrete field F.
template <class F>
AlgebraPtr<F> build_algebra(const AlgebraFile& file, const F& field) {
  switch (file.kind) {
    case AlgebraFile::Kind::quiver: {
      QuiverPresentation<F> q;
      q.vertices = file.quiver.vertices;
      q.arrows = file.quiver.arrows;
      q.max_path_length = file.quiver.max_path_length;
      for (const auto& rel : file.quiver.relations) {
        Relation<F> r;
        for (const auto& [c, p] : rel) r.push_back({detail::coeff_value(field, c), p});
        q.relations.push_back(std::move(r));
      }
      return from_quiver(q, field, file.name);
    }
    case AlgebraFile::Kind::table: {
      const auto& t = file.table;
      const std::size_t n = t.basis.size();
      auto index = [&](const std::string& l) {
        return static_cast<std::size_t>(std::find(t.basis.begin(), t.basis.end(), l) - t.basis.begin());
      };
      auto dense = [&](const std::map<std::string, std::string>& m) {
        Vec<F> v = zero_vec(field, n);
        for (const auto& [k, c] : m) v[index(k)] = detail::coeff_value(field, c);
        return v;
      };
      std::vector<std::vector<Vec<F>>> products(n, std::vector<Vec<F>>(n, zero_vec(field, n)));
      for (const auto& p : t.products) products[index(p.left)][index(p.right)] = dense(p.result);
      std::vector<Vec<F>> idem;
      for (const auto& e : t.idempotents) idem.push_back(dense(e));
      return from_table(t.basis, dense(t.unit), products, idem, field, file.name);
    }
    case AlgebraFile::Kind::builtin: {
      if constexpr (is_prime_field_v<F>) {
        if (field.p() == 2) {
          auto a = builtin(file.builtin);
          return a;
        }
      }
      throw ParseError("field", "builtin algebras are defined over GF(2) only");
    }
    case AlgebraFile::Kind::family: return build_family(file.family, field, file.field, file.name);
  }
  throw InternalInconsistency("unreachable algebra file kind");
}

/// Table-form file of an algebra (used to emit enveloping algebras).
template <class F>
AlgebraFile algebra_to_file(const Algebra<F>& a, const FieldSpec& spec) {
  AlgebraFile out;
  out.name = a.name();
  out.field = spec;
  out.kind = AlgebraFile::Kind::table;
  const F& field = a.field();
  auto& t = out.table;
  t.basis = a.labels();
  auto sparse = [&](std::span<const typename F::element> v) {
    std::map<std::string, std::string> m;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!field.is_zero(v[k])) m[t.basis[k]] = field.to_string(v[k]);
    return m;
  };
  t.unit = sparse(a.unit());
  for (const auto& e : a.idempotents()) t.idempotents.push_back(sparse(e));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.product_terms(i, j).empty()) continue;
      t.products.push_back({t.basis[i], t.basis[j], sparse(a.right_mult(j).row(i))});
    }
  return out;
}

}  // namespace gorhom

#endif  // GORHOM_IO_HPP
