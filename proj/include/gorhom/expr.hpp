#ifndef GORHOM_EXPR_HPP
#define GORHOM_EXPR_HPP

// Module expressions:
//   Expr := A | D(A) | Aee | S(i) | P(i) | omega^r(Expr) | star(Expr) | dsum(Expr, Expr)
// Indices are 1-based; whitespace is ignored.

#include <cctype>
#include <memory>
#include <string>

#include "gorhom/modrep.hpp"

namespace gorhom {

struct ModuleExpr {
  enum class Kind { regular, dual, env, simple, projective, omega, star, dsum };
  Kind kind = Kind::regular;
  std::size_t n = 0;  // index for S/P, power for omega
  std::shared_ptr<const ModuleExpr> lhs, rhs;

  std::string to_string() const {
    switch (kind) {
      case Kind::regular: return "A";
      case Kind::dual: return "D(A)";
      case Kind::env: return "Aee";
      case Kind::simple: return "S(" + std::to_string(n) + ")";
      case Kind::projective: return "P(" + std::to_string(n) + ")";
      case Kind::omega: return "omega^" + std::to_string(n) + "(" + lhs->to_string() + ")";
      case Kind::star: return "star(" + lhs->to_string() + ")";
      case Kind::dsum: return "dsum(" + lhs->to_string() + "," + rhs->to_string() + ")";
    }
    return "?";
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_ += text[i];
        pos_map_.push_back(i);
      }
    pos_map_.push_back(text.size());
  }

  std::shared_ptr<const ModuleExpr> parse() {
    auto e = expr(0);
    if (i_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("position " + std::to_string(pos_map_[std::min(i_, s_.size())] + 1), what);
  }
  bool eat(const std::string& tok) {
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::size_t number() {
    const std::size_t start = i_;
    std::size_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (i_ - start >= 6) fail("number too large");
      v = v * 10 + static_cast<std::size_t>(s_[i_] - '0');
      ++i_;
    }
    if (i_ == start) fail("expected a number");
    return v;
  }
  std::shared_ptr<const ModuleExpr> node(ModuleExpr::Kind k, std::size_t n = 0,
                                         std::shared_ptr<const ModuleExpr> l = nullptr,
                                         std::shared_ptr<const ModuleExpr> r = nullptr) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = k;
    e->n = n;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }
  std::shared_ptr<const ModuleExpr> expr(int depth) {
    if (depth > 64) fail("expression nested too deeply");
    using K = ModuleExpr::Kind;
    if (eat("Aee")) return node(K::env);
    if (eat("A")) return node(K::regular);
    if (eat("D(")) {
      if (!eat("A")) fail("expected 'A' inside D(...)");
      expect(')');
      return node(K::dual);
    }
    if (eat("S(") || eat("P(")) {
      const bool simple = s_[i_ - 2] == 'S';
      const std::size_t n = number();
      expect(')');
      if (n == 0) fail("indices are 1-based");
      return node(simple ? K::simple : K::projective, n);
    }
    if (eat("omega^")) {
      const std::size_t r = number();
      expect('(');
      auto inner = expr(depth + 1);
      expect(')');
      return node(K::omega, r, inner);
    }
    if (eat("star(")) {
      auto inner = expr(depth + 1);
      expect(')');
      return node(K::star, 0, inner);
    }
    if (eat("dsum(")) {
      auto l = expr(depth + 1);
      expect(',');
      auto r = expr(depth + 1);
      expect(')');
      return node(K::dsum, 0, l, r);
    }
    fail("expected A, D(A), Aee, S(i), P(i), omega^r(...), star(...) or dsum(...,...)");
  }

  std::string s_;
  std::vector<std::size_t> pos_map_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline std::shared_ptr<const ModuleExpr> parse_module_expression(const std::string& text) {
  return detail::ExprParser(text).parse();
}

/// Evaluates over the ambient algebra `amb`. `base` is the algebra whose
/// enveloping algebra is `amb` when Aee is allowed (--env), else null.
template <class F>
Module<F> evaluate(const ModuleExpr& e, const AlgebraPtr<F>& amb, const AlgebraPtr<F>& base = nullptr) {
  using K = ModuleExpr::Kind;
  auto index = [&](std::size_t n) {
    if (n == 0 || n > amb->num_idempotents())
      throw IndexError("index " + std::to_string(n) + " out of range 1.." + std::to_string(amb->num_idempotents()));
    return n - 1;
  };
  switch (e.kind) {
    case K::regular: return regular_right(amb);
    case K::dual: return coregular(amb);
    case K::env:
      if (!base) throw UsageError("Aee requires --env");
      return bimodule_as_env_module(base);
    case K::simple: return simple_module(amb, index(e.n));
    case K::projective: return projective_module(amb, index(e.n));
    case K::omega: {
      auto m = evaluate(*e.lhs, amb, base);
      return syzygy(m, e.n).with_label(e.to_string());
    }
    case K::star: {
      // the inner expression may live over the opposite algebra already
      auto m = evaluate(*e.lhs, amb, base);
      return star_dual(m).with_label(e.to_string());
    }
    case K::dsum: {
      auto l = evaluate(*e.lhs, amb, base);
      auto r = evaluate(*e.rhs, amb, base);
      if (l.algebra() != r.algebra())
        throw AlgebraMismatch("dsum operands live over different algebras (one side is a star dual)");
      return dsum(l, r).with_label(e.to_string());
    }
  }
  throw InternalInconsistency("unreachable expression kind");
}

}  // namespace gorhom

#endif  // GORHOM_EXPR_HPP
