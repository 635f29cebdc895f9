#ifndef GORHOM_ALGEBRA_HPP
#define GORHOM_ALGEBRA_HPP

// Finite-dimensional associative unital algebras given by structure
// constants, together with a complete set of primitive orthogonal idempotents
// and a basis of the Jacobson radical.
//
// Conventions (fixed once for the whole library):
//   * b_i * b_j = sum_k c(i,j,k) b_k.
//   * A path [a, b] in a quiver means "a then b"; the product of paths p*q is
//     the concatenation when target(p) == source(q) and zero otherwise.
//   * Modules are right modules, so e_v A is spanned by paths starting at v.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gorhom/linalg.hpp"

namespace gorhom {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
  bool operator==(const Arrow&) const = default;
};

template <class F>
struct RelationTerm {
  typename F::element coeff;
  std::vector<std::string> path;  // arrow names, composed left to right
  bool operator==(const RelationTerm&) const = default;
};

template <class F>
using Relation = std::vector<RelationTerm<F>>;

template <class F>
struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation<F>> relations;
  int max_path_length = 2;
  bool operator==(const QuiverPresentation&) const = default;
};

/// Outcome of checking every Algebra invariant; never throws.
struct AlgebraValidationReport {
  bool associativity_ok = true;
  std::string associativity_witness;
  bool unit_ok = true;
  std::string unit_witness;
  bool idempotents_ok = true;
  std::string idempotents_witness;
  bool primitivity_unverified = false;
  bool radical_ok = true;
  std::string radical_witness;

  bool all_ok() const { return associativity_ok && unit_ok && idempotents_ok && radical_ok; }

  std::string summary() const {
    std::ostringstream os;
    os << "associativity=" << (associativity_ok ? "ok" : "FAIL " + associativity_witness)
       << " unit=" << (unit_ok ? "ok" : "FAIL " + unit_witness)
       << " idempotents=" << (idempotents_ok ? "ok" : "FAIL " + idempotents_witness)
       << (primitivity_unverified ? " (primitivity unverified)" : "")
       << " radical=" << (radical_ok ? "ok" : "FAIL " + radical_witness);
    return os.str();
  }
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(AlgebraValidationReport report)
      : Error("algebra validation failed: " + report.summary()), report_(std::move(report)) {}
  const AlgebraValidationReport& report() const noexcept { return report_; }

 private:
  AlgebraValidationReport report_;
};

/// Right action of the algebra on an indecomposable projective e_j A, in the
/// coordinates of an RREF basis of e_j A.
template <class F>
struct ProjectiveData {
  Matrix<F> basis;                  // rows: elements of A spanning e_j A
  std::vector<std::size_t> pivots;  // pivot columns of `basis`
  std::vector<Matrix<F>> action;    // action[b] : local right multiplication by b_b
  std::size_t top_dim = 0;          // dim e_j A / e_j J
};

template <class F>
class Algebra;

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <class F>
class Algebra : public std::enable_shared_from_this<Algebra<F>> {
 public:
  using element = typename F::element;

  struct Parts {
    explicit Parts(const F& field) : radical(field, 0, 0) {}
    std::string name;
    std::vector<std::string> labels;
    std::vector<Matrix<F>> right_mult;  // right_mult[j].row(i) = b_i * b_j
    Vec<F> unit;
    std::vector<Vec<F>> idempotents;
    Matrix<F> radical;  // rows span J
    std::optional<QuiverPresentation<F>> quiver;
  };

  /// Assembles derived data (left multiplication, projectives, generators).
  /// Performs no validation; see validate().
  static AlgebraPtr<F> assemble(F field, Parts parts) {
    return std::shared_ptr<Algebra>(new Algebra(std::move(field), std::move(parts)));
  }

  const F& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return parts_.labels.size(); }
  const std::string& name() const noexcept { return parts_.name; }
  const std::vector<std::string>& labels() const noexcept { return parts_.labels; }
  const Vec<F>& unit() const noexcept { return parts_.unit; }
  const std::vector<Vec<F>>& idempotents() const noexcept { return parts_.idempotents; }
  std::size_t num_idempotents() const noexcept { return parts_.idempotents.size(); }
  const Matrix<F>& radical() const noexcept { return parts_.radical; }
  const std::optional<QuiverPresentation<F>>& quiver() const noexcept { return parts_.quiver; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// x -> x * b_j as a matrix acting on row vectors.
  const Matrix<F>& right_mult(std::size_t j) const { return parts_.right_mult.at(j); }
  /// x -> b_i * x as a matrix acting on row vectors.
  const Matrix<F>& left_mult(std::size_t i) const { return left_mult_.at(i); }
  const std::vector<Matrix<F>>& right_mult_all() const noexcept { return parts_.right_mult; }

  element c(std::size_t i, std::size_t j, std::size_t k) const { return parts_.right_mult[j].at(i, k); }

  /// Nonzero (k, c(i,j,k)) pairs of b_i * b_j.
  const std::vector<std::pair<std::size_t, element>>& product_terms(std::size_t i, std::size_t j) const {
    return sparse_[i * dim() + j];
  }

  Vec<F> basis_vector(std::size_t i) const {
    Vec<F> v = zero_vec(field_, dim());
    v.at(i) = field_.one();
    return v;
  }

  Vec<F> multiply(std::span<const element> x, std::span<const element> y) const {
    Vec<F> out = zero_vec(field_, dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (!field_.is_zero(y[j])) axpy<F>(field_, out, y[j], vec_mul(field_, x, parts_.right_mult[j]));
    return out;
  }

  /// Matrix of x -> x * y for an arbitrary element y.
  Matrix<F> right_mult_by(std::span<const element> y) const {
    Matrix<F> out(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (!field_.is_zero(y[j])) out = out + parts_.right_mult[j].scaled(y[j]);
    return out;
  }

  /// Matrix of x -> y * x for an arbitrary element y.
  Matrix<F> left_mult_by(std::span<const element> y) const {
    Matrix<F> out(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!field_.is_zero(y[i])) out = out + left_mult_[i].scaled(y[i]);
    return out;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (parts_.right_mult[j].row_vec(i) != parts_.right_mult[i].row_vec(j)) return false;
    return true;
  }

  const ProjectiveData<F>& projective(std::size_t j) const { return projectives_.at(j); }

  /// Lifts of a basis of J / J^2; they generate J as a non-unital algebra.
  const Matrix<F>& radical_generators() const noexcept { return radical_generators_; }
  /// A generating set of A as a unital algebra.
  const Matrix<F>& generators() const noexcept { return generators_; }

  /// Structural equality of the multiplication tables.
  bool same_table(const Algebra& o) const {
    return field_ == o.field_ && dim() == o.dim() && parts_.right_mult == o.parts_.right_mult;
  }

  // Caches: opposite and enveloping constructions, local actions (cover.hpp)
  // and homological facts (gorenstein.hpp).
  mutable std::mutex cache_mutex_;
  mutable AlgebraPtr<F> opposite_cache_;
  mutable std::weak_ptr<const Algebra<F>> opposite_origin_;
  mutable AlgebraPtr<F> enveloping_cache_;
  mutable std::shared_ptr<const void> local_cache_;
  mutable std::shared_ptr<void> facts_cache_;

 private:
  Algebra(F field, Parts parts) : field_(std::move(field)), parts_(std::move(parts)) {
    const std::size_t n = dim();
    if (parts_.right_mult.size() != n) throw DimensionMismatch("structure constants do not match basis size");
    left_mult_.assign(n, Matrix<F>(field_, n, n));
    sparse_.resize(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const auto& v = parts_.right_mult[j].at(i, k);
          if (field_.is_zero(v)) continue;
          left_mult_[i].at(j, k) = v;
          sparse_[i * n + j].emplace_back(k, v);
        }
    build_generators();
    build_projectives();
    check_connected();
  }

  void build_generators() {
    const std::size_t n = dim();
    const Matrix<F>& J = parts_.radical;
    EchelonBasis<F> square(field_, n);
    for (std::size_t x = 0; x < J.rows(); ++x)
      for (std::size_t y = 0; y < J.rows(); ++y) square.add(multiply(J.row(x), J.row(y)));
    radical_generators_ = Matrix<F>(field_, 0, n);
    for (std::size_t x = 0; x < J.rows(); ++x)
      if (square.add(J.row(x))) radical_generators_.append_row(J.row(x));

    generators_ = Matrix<F>(field_, 0, n);
    EchelonBasis<F> span(field_, n);
    for (std::size_t x = 0; x < J.rows(); ++x) span.add(J.row(x));
    for (const auto& e : parts_.idempotents)
      if (!is_zero_vec<F>(field_, e)) {
        generators_.append_row(e);
        span.add(e);
      }
    for (std::size_t i = 0; i < n; ++i) {
      auto b = basis_vector(i);
      if (span.add(b)) generators_.append_row(b);
    }
    for (std::size_t x = 0; x < radical_generators_.rows(); ++x) generators_.append_row(radical_generators_.row(x));
  }

  void build_projectives() {
    const std::size_t n = dim();
    EchelonBasis<F> jbasis(field_, n);
    for (std::size_t x = 0; x < parts_.radical.rows(); ++x) jbasis.add(parts_.radical.row(x));
    for (const auto& e : parts_.idempotents) {
      EchelonBasis<F> span(field_, n);
      for (std::size_t k = 0; k < n; ++k) span.add(vec_mul(field_, std::span<const element>(e), parts_.right_mult[k]));
      ProjectiveData<F> pd{span.matrix(), {}, {}, 0};
      auto rr = rref(pd.basis);
      pd.pivots = rr.pivots;
      const std::size_t d = pd.basis.rows();
      for (std::size_t b = 0; b < n; ++b) {
        Matrix<F> act(field_, d, d);
        for (std::size_t l = 0; l < d; ++l) {
          auto img = vec_mul(field_, pd.basis.row(l), parts_.right_mult[b]);
          for (std::size_t m = 0; m < d; ++m) act.at(l, m) = img[pd.pivots[m]];
        }
        pd.action.push_back(std::move(act));
      }
      // top dimension: dim e A - dim (e A intersect J)
      EchelonBasis<F> both = jbasis;
      std::size_t added = 0;
      for (std::size_t l = 0; l < d; ++l)
        if (both.add(pd.basis.row(l))) ++added;
      pd.top_dim = added;
      projectives_.push_back(std::move(pd));
    }
  }

  void check_connected() {
    const std::size_t r = parts_.idempotents.size();
    if (r <= 1) return;
    std::vector<std::size_t> comp(r);
    for (std::size_t i = 0; i < r; ++i) comp[i] = i;
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        // e_i A e_j != 0 ?
        const auto& pi = projectives_[i].basis;
        bool nonzero = false;
        for (std::size_t l = 0; l < pi.rows() && !nonzero; ++l)
          nonzero = !is_zero_vec<F>(field_, multiply(pi.row(l), parts_.idempotents[j]));
        if (nonzero) comp[find(i)] = find(j);
      }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < r; ++i) roots.insert(find(i));
    if (roots.size() > 1)
      warnings_.push_back("algebra is not connected (" + std::to_string(roots.size()) + " blocks)");
  }

  F field_;
  Parts parts_;
  std::vector<Matrix<F>> left_mult_;
  std::vector<std::vector<std::pair<std::size_t, element>>> sparse_;
  Matrix<F> radical_generators_{field_, 0, 0};
  Matrix<F> generators_{field_, 0, 0};
  std::vector<ProjectiveData<F>> projectives_;
  std::vector<std::string> warnings_;
};

// ---------------------------------------------------------------------------
// Radical via trace forms

namespace detail {

/// p-power trace functional on integer lifts: (Tr(Z^(p^i)) mod p^(i+1)) / p^i.
inline std::uint32_t power_trace(const std::vector<std::uint64_t>& z, std::size_t n, std::uint32_t p, int i) {
  using u128 = unsigned __int128;
  std::uint64_t mod = p;
  std::uint64_t pi = 1;
  for (int k = 0; k < i; ++k) {
    mod *= p;
    pi *= p;
  }
  std::vector<std::uint64_t> cur = z, next(n * n);
  // Z^(p^i): raise to the p-th power i times.
  for (int step = 0; step < i; ++step) {
    std::vector<std::uint64_t> acc = cur;
    for (std::uint32_t e = 1; e < p; ++e) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          u128 s = 0;
          for (std::size_t k = 0; k < n; ++k) s += static_cast<u128>(acc[r * n + k]) * cur[k * n + c];
          next[r * n + c] = static_cast<std::uint64_t>(s % mod);
        }
      acc.swap(next);
    }
    cur.swap(acc);
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + cur[r * n + r]) % mod;
  return static_cast<std::uint32_t>((tr / pi) % p);
}

}  // namespace detail

/// Jacobson radical from structure constants alone. Characteristic 0 (and
/// p > dim) uses the trace form; small characteristic uses the iterated
/// p-power trace refinement.
template <class F>
Matrix<F> radical_from_table(const F& field, const std::vector<Matrix<F>>& right_mult) {
  const std::size_t n = right_mult.size();
  auto rep_of = [&](std::span<const typename F::element> z) {
    Matrix<F> m(field, n, n);
    for (std::size_t k = 0; k < n; ++k)
      if (!field.is_zero(z[k])) m = m + right_mult[k].scaled(z[k]);
    return m;
  };
  auto product = [&](std::span<const typename F::element> x, std::size_t j) {
    return vec_mul(field, x, right_mult[j]);
  };
  Matrix<F> current = Matrix<F>::identity(field, n);
  int levels = 0;
  if constexpr (is_prime_field_v<F>) {
    std::uint64_t pw = field.p();
    while (pw <= n) {
      ++levels;
      pw *= field.p();
    }
  }
  for (int i = 0; i <= levels; ++i) {
    Matrix<F> g(field, current.rows(), n);
    for (std::size_t r = 0; r < current.rows(); ++r)
      for (std::size_t j = 0; j < n; ++j) {
        auto z = product(current.row(r), j);
        auto rep = rep_of(z);
        if constexpr (is_prime_field_v<F>) {
          std::vector<std::uint64_t> lift(n * n);
          for (std::size_t k = 0; k < n * n; ++k) lift[k] = rep.data()[k];
          g.at(r, j) = detail::power_trace(lift, n, field.p(), i);
        } else {
          typename F::element tr = field.zero();
          for (std::size_t k = 0; k < n; ++k) tr = field.add(tr, rep.at(k, k));
          g.at(r, j) = tr;
        }
      }
    auto coeffs = left_kernel(g);
    current = coeffs * current;
    if (current.rows() == 0) break;
  }
  return rref(current).reduced;
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

template <class F>
std::string vec_to_string(const F& field, std::span<const typename F::element> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + field.to_string(v[i]);
  return s + "]";
}

/// Quotient algebra A/I for a two-sided ideal I; returns its right
/// multiplication matrices on the complement basis of non-pivot coordinates.
template <class F>
std::vector<Matrix<F>> quotient_table(const Algebra<F>& a, const Matrix<F>& ideal) {
  const F& field = a.field();
  EchelonBasis<F> span(field, a.dim());
  for (std::size_t r = 0; r < ideal.rows(); ++r) span.add(ideal.row(r));
  std::vector<char> is_pivot(a.dim(), 0);
  for (auto c : span.pivots()) is_pivot[c] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < a.dim(); ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const std::size_t q = keep.size();
  std::vector<Matrix<F>> out(q, Matrix<F>(field, q, q));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      auto prod = span.reduce(a.right_mult(keep[y]).row(keep[x]));
      for (std::size_t z = 0; z < q; ++z) out[y].at(x, z) = prod[keep[z]];
    }
  return out;
}

/// Whether e A e / e J e is a division ring. Over GF(p) this is decided
/// exactly: the quotient is semisimple, so it is a division ring iff it is
/// commutative with a one-dimensional space of Frobenius-fixed points.
template <class F>
std::optional<bool> corner_is_local(const Algebra<F>& a, std::span<const typename F::element> e) {
  const F& field = a.field();
  const std::size_t n = a.dim();
  EchelonBasis<F> corner(field, n), corner_rad(field, n);
  for (std::size_t k = 0; k < n; ++k) corner.add(a.multiply(a.multiply(e, a.basis_vector(k)), e));
  for (std::size_t r = 0; r < a.radical().rows(); ++r) corner_rad.add(a.multiply(a.multiply(e, a.radical().row(r)), e));
  std::vector<Vec<F>> top;
  EchelonBasis<F> both = corner_rad;
  auto cm = corner.matrix();
  for (std::size_t r = 0; r < cm.rows(); ++r)
    if (both.add(cm.row(r))) top.push_back(cm.row_vec(r));
  const std::size_t d = top.size();
  if (d == 0) return false;
  if (d == 1) return true;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y) {
      auto xy = a.multiply(top[x], top[y]);
      auto yx = a.multiply(top[y], top[x]);
      Vec<F> diff(n);
      for (std::size_t k = 0; k < n; ++k) diff[k] = field.sub(xy[k], yx[k]);
      if (!corner_rad.contains(diff)) {
        if constexpr (is_prime_field_v<F>) return false;
        else return std::nullopt;
      }
    }
  if constexpr (is_prime_field_v<F>) {
    // Frobenius x -> x^p - x is linear on the commutative quotient.
    Matrix<F> frob(field, d, d);
    for (std::size_t x = 0; x < d; ++x) {
      Vec<F> pw = top[x];
      for (std::uint32_t k = 1; k < field.p(); ++k) pw = a.multiply(pw, top[x]);
      for (std::size_t c = 0; c < n; ++c) pw[c] = field.sub(pw[c], top[x][c]);
      auto red = corner_rad.reduce(pw);
      // Express red in terms of `top` by solving a small system.
      Matrix<F> sys(field, d, n);
      for (std::size_t y = 0; y < d; ++y) {
        auto ty = corner_rad.reduce(top[y]);
        std::copy(ty.begin(), ty.end(), sys.row(y).begin());
      }
      Matrix<F> rhs(field, n, 1);
      for (std::size_t c = 0; c < n; ++c) rhs.at(c, 0) = red[c];
      auto sol = solve(sys.transpose(), rhs);
      if (!sol) return std::nullopt;
      for (std::size_t y = 0; y < d; ++y) frob.at(x, y) = sol->at(y, 0);
    }
    const std::size_t fixed = d - rank(frob);
    return fixed == 1;
  } else {
    return std::nullopt;
  }
}

}  // namespace detail

/// Checks every Algebra invariant and reports the first failure witnesses.
template <class F>
AlgebraValidationReport validate(const Algebra<F>& a) {
  AlgebraValidationReport rep;
  const F& field = a.field();
  const std::size_t n = a.dim();

  // Associativity: R_j R_k == sum_m c(j,k,m) R_m row by row.
  for (std::size_t j = 0; j < n && rep.associativity_ok; ++j)
    for (std::size_t k = 0; k < n && rep.associativity_ok; ++k) {
      Matrix<F> lhs = a.right_mult(j) * a.right_mult(k);
      Matrix<F> rhs(field, n, n);
      for (const auto& [m, v] : a.product_terms(j, k)) rhs = rhs + a.right_mult(m).scaled(v);
      if (lhs == rhs) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (lhs.row_vec(i) != rhs.row_vec(i)) {
          rep.associativity_ok = false;
          rep.associativity_witness = "(b" + std::to_string(i) + "*b" + std::to_string(j) + ")*b" +
                                      std::to_string(k) + " != b" + std::to_string(i) + "*(b" +
                                      std::to_string(j) + "*b" + std::to_string(k) + ")";
          break;
        }
    }

  // Unit law.
  const auto& u = a.unit();
  if (u.size() != n) {
    rep.unit_ok = false;
    rep.unit_witness = "unit has wrong length";
  }
  for (std::size_t j = 0; j < n && rep.unit_ok; ++j) {
    auto b = a.basis_vector(j);
    if (a.multiply(u, b) != b || a.multiply(b, u) != b) {
      rep.unit_ok = false;
      rep.unit_witness = "unit fails on basis element " + a.labels()[j];
    }
  }

  // Idempotents: orthogonal, complete, primitive.
  const auto& es = a.idempotents();
  Vec<F> sum = zero_vec(field, n);
  for (std::size_t i = 0; i < es.size() && rep.idempotents_ok; ++i) {
    if (es[i].size() != n) {
      rep.idempotents_ok = false;
      rep.idempotents_witness = "idempotent " + std::to_string(i + 1) + " has wrong length";
      break;
    }
    for (std::size_t k = 0; k < n; ++k) sum[k] = field.add(sum[k], es[i][k]);
    for (std::size_t j = 0; j < es.size(); ++j) {
      auto prod = a.multiply(es[i], es[j]);
      const Vec<F> expect = i == j ? es[i] : zero_vec(field, n);
      if (prod != expect) {
        rep.idempotents_ok = false;
        rep.idempotents_witness = "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                                  (i == j ? " != e" + std::to_string(i + 1) : " != 0");
        break;
      }
    }
  }
  if (rep.idempotents_ok && rep.unit_ok && sum != u) {
    rep.idempotents_ok = false;
    rep.idempotents_witness = "idempotents do not sum to the unit";
  }
  for (std::size_t i = 0; i < es.size() && rep.idempotents_ok; ++i) {
    auto local = detail::corner_is_local(a, es[i]);
    if (!local) {
      rep.primitivity_unverified = true;
    } else if (!*local) {
      rep.idempotents_ok = false;
      rep.idempotents_witness = "e" + std::to_string(i + 1) + " is not primitive";
    }
  }

  // Radical: two-sided ideal, nilpotent, semisimple quotient.
  const Matrix<F>& J = a.radical();
  EchelonBasis<F> jspan(field, n);
  for (std::size_t r = 0; r < J.rows(); ++r) jspan.add(J.row(r));
  for (std::size_t r = 0; r < J.rows() && rep.radical_ok; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      auto b = a.basis_vector(k);
      if (!jspan.contains(a.multiply(J.row(r), b)) || !jspan.contains(a.multiply(b, J.row(r)))) {
        rep.radical_ok = false;
        rep.radical_witness = "radical is not a two-sided ideal (row " + std::to_string(r) + ", " + a.labels()[k] + ")";
        break;
      }
    }
  if (rep.radical_ok) {
    Matrix<F> power = J;
    std::size_t steps = 0;
    while (power.rows() > 0 && steps <= n) {
      EchelonBasis<F> next(field, n);
      for (std::size_t x = 0; x < power.rows(); ++x)
        for (std::size_t y = 0; y < J.rows(); ++y) next.add(a.multiply(power.row(x), J.row(y)));
      power = next.matrix();
      ++steps;
    }
    if (power.rows() > 0) {
      rep.radical_ok = false;
      rep.radical_witness = "radical is not nilpotent";
    }
  }
  if (rep.radical_ok) {
    auto q = detail::quotient_table(a, J);
    if (!q.empty() && radical_from_table(field, q).rows() != 0) {
      rep.radical_ok = false;
      rep.radical_witness = "quotient by the radical is not semisimple";
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

struct PathInfo {
  std::vector<int> arrows;
  int source = 0;
  int target = 0;
  std::size_t length() const { return arrows.size(); }
};

}  // namespace detail

/// kQ/I by bounded linear closure of the relations up to path length L.
template <class F>
AlgebraPtr<F> from_quiver(const QuiverPresentation<F>& pres, const F& field, std::string name = "") {
  using detail::PathInfo;
  const int L = pres.max_path_length;
  if (L < 2) throw InvalidPresentation("max_path_length must be at least 2");
  if (pres.vertices.empty()) throw InvalidPresentation("quiver has no vertices");
  std::map<std::string, int> vindex, aindex;
  for (std::size_t v = 0; v < pres.vertices.size(); ++v)
    if (!vindex.emplace(pres.vertices[v], static_cast<int>(v)).second)
      throw InvalidPresentation("duplicate vertex '" + pres.vertices[v] + "'");
  std::vector<std::pair<int, int>> ends;
  for (std::size_t x = 0; x < pres.arrows.size(); ++x) {
    const auto& ar = pres.arrows[x];
    auto s = vindex.find(ar.source), t = vindex.find(ar.target);
    if (s == vindex.end() || t == vindex.end())
      throw InvalidPresentation("arrow '" + ar.name + "' has an undeclared endpoint");
    if (vindex.count(ar.name) || !aindex.emplace(ar.name, static_cast<int>(x)).second)
      throw InvalidPresentation("duplicate or clashing arrow name '" + ar.name + "'");
    ends.emplace_back(s->second, t->second);
  }

  // Enumerate all paths of length <= L.
  std::vector<PathInfo> paths;
  std::map<std::vector<int>, std::size_t> vertex_path_index;  // unused key for vertices
  std::map<std::pair<int, std::vector<int>>, std::size_t> index;
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    index[{static_cast<int>(v), {}}] = paths.size();
    paths.push_back({{}, static_cast<int>(v), static_cast<int>(v)});
  }
  std::size_t frontier_begin = 0, frontier_end = paths.size();
  for (int len = 1; len <= L; ++len) {
    for (std::size_t p = frontier_begin; p < frontier_end; ++p)
      for (std::size_t x = 0; x < ends.size(); ++x) {
        if (ends[x].first != paths[p].target) continue;
        PathInfo q = paths[p];
        q.arrows.push_back(static_cast<int>(x));
        q.target = ends[x].second;
        if (paths.size() > 200000) throw TooLarge("too many paths below the length bound");
        index[{q.source, q.arrows}] = paths.size();
        paths.push_back(std::move(q));
      }
    frontier_begin = frontier_end;
    frontier_end = paths.size();
  }
  auto find_path = [&](int source, const std::vector<int>& arrows) -> std::optional<std::size_t> {
    auto it = index.find({source, arrows});
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  // Column order: longest paths first so pivots land on long paths.
  std::vector<std::size_t> order(paths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    if (paths[x].length() != paths[y].length()) return paths[x].length() > paths[y].length();
    return paths[x].arrows < paths[y].arrows;
  });
  std::vector<std::size_t> column(paths.size());
  for (std::size_t c = 0; c < order.size(); ++c) column[order[c]] = c;
  const std::size_t P = paths.size();

  // Parse relations into (path index, coeff) lists.
  struct ParsedTerm {
    std::vector<int> arrows;
    typename F::element coeff;
  };
  std::vector<std::vector<ParsedTerm>> rels;
  std::vector<std::pair<int, int>> rel_ends;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    std::vector<ParsedTerm> terms;
    std::optional<std::pair<int, int>> st;
    for (const auto& term : pres.relations[r]) {
      if (term.path.empty()) throw InvalidPresentation("relation " + std::to_string(r + 1) + " has an empty path");
      std::vector<int> arr;
      for (const auto& nm : term.path) {
        auto it = aindex.find(nm);
        if (it == aindex.end())
          throw InvalidPresentation("relation " + std::to_string(r + 1) + " uses unknown arrow '" + nm + "'");
        if (!arr.empty() && ends[arr.back()].second != ends[it->second].first)
          throw InvalidPresentation("relation " + std::to_string(r + 1) + " has a non-composable path");
        arr.push_back(it->second);
      }
      std::pair<int, int> e{ends[arr.front()].first, ends[arr.back()].second};
      if (st && *st != e)
        throw InhomogeneousRelation("relation " + std::to_string(r + 1) + " mixes sources or targets");
      st = e;
      if (arr.size() < 2 && !field.is_zero(term.coeff))
        throw NotAdmissible("relation " + std::to_string(r + 1) + " has a term of length 1");
      if (!field.is_zero(term.coeff)) terms.push_back({std::move(arr), term.coeff});
    }
    if (!terms.empty()) {
      rels.push_back(std::move(terms));
      rel_ends.push_back(*st);
    }
  }

  // Span of u * r * v truncated at length L.
  EchelonBasis<F> ideal(field, P);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::size_t minlen = static_cast<std::size_t>(-1);
    for (const auto& t : rels[r]) minlen = std::min(minlen, t.arrows.size());
    for (std::size_t u = 0; u < P; ++u) {
      if (paths[u].target != rel_ends[r].first) continue;
      if (paths[u].length() + minlen > static_cast<std::size_t>(L)) continue;
      for (std::size_t v = 0; v < P; ++v) {
        if (paths[v].source != rel_ends[r].second) continue;
        if (paths[u].length() + minlen + paths[v].length() > static_cast<std::size_t>(L)) continue;
        Vec<F> vec = zero_vec(field, P);
        for (const auto& t : rels[r]) {
          std::vector<int> arr = paths[u].arrows;
          arr.insert(arr.end(), t.arrows.begin(), t.arrows.end());
          arr.insert(arr.end(), paths[v].arrows.begin(), paths[v].arrows.end());
          if (arr.size() > static_cast<std::size_t>(L)) continue;
          auto idx = find_path(paths[u].source, arr);
          if (!idx) continue;
          auto& slot = vec[column[*idx]];
          slot = field.add(slot, t.coeff);
        }
        ideal.add(vec);
      }
    }
  }

  // Admissibility within the bound: every length-L path must vanish.
  for (std::size_t p = 0; p < P; ++p) {
    if (paths[p].length() != static_cast<std::size_t>(L)) continue;
    Vec<F> e = zero_vec(field, P);
    e[column[p]] = field.one();
    if (!ideal.contains(e)) {
      std::string label;
      for (auto x : paths[p].arrows) label += (label.empty() ? "" : "*") + pres.arrows[x].name;
      throw NotAdmissible("path " + label + " of length " + std::to_string(L) +
                          " is nonzero modulo the relations; raise max_path_length or add relations");
    }
  }

  // Standard paths: non-pivot columns. Basis order: vertices, then by length.
  std::vector<char> pivot(P, 0);
  for (auto c : ideal.pivots()) pivot[c] = 1;
  std::vector<std::size_t> basis_paths;
  for (std::size_t p = 0; p < P; ++p)
    if (!pivot[column[p]]) basis_paths.push_back(p);
  std::stable_sort(basis_paths.begin(), basis_paths.end(), [&](auto x, auto y) {
    if (paths[x].length() != paths[y].length()) return paths[x].length() < paths[y].length();
    if (paths[x].length() == 0) return paths[x].source < paths[y].source;
    return paths[x].arrows < paths[y].arrows;
  });
  const std::size_t n = basis_paths.size();
  std::vector<std::size_t> basis_pos(P, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) basis_pos[column[basis_paths[i]]] = i;

  auto normal_form = [&](std::size_t p) {
    Vec<F> e = zero_vec(field, P);
    e[column[p]] = field.one();
    auto red = ideal.reduce(e);
    Vec<F> out = zero_vec(field, n);
    for (std::size_t c = 0; c < P; ++c)
      if (!field.is_zero(red[c])) out[basis_pos[c]] = red[c];
    return out;
  };

  typename Algebra<F>::Parts parts(field);
  parts.name = name;
  for (auto p : basis_paths) {
    if (paths[p].length() == 0) {
      parts.labels.push_back("e" + pres.vertices[paths[p].source]);
    } else {
      std::string label;
      for (auto x : paths[p].arrows) label += (label.empty() ? "" : "*") + pres.arrows[x].name;
      parts.labels.push_back(label);
    }
  }
  parts.right_mult.assign(n, Matrix<F>(field, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = paths[basis_paths[i]];
      const auto& q = paths[basis_paths[j]];
      if (p.target != q.source) continue;
      std::vector<int> arr = p.arrows;
      arr.insert(arr.end(), q.arrows.begin(), q.arrows.end());
      if (arr.size() > static_cast<std::size_t>(L)) continue;
      auto idx = find_path(p.source, arr);
      if (!idx) continue;
      auto nf = normal_form(*idx);
      std::copy(nf.begin(), nf.end(), parts.right_mult[j].row(i).begin());
    }
  parts.unit = zero_vec(field, n);
  parts.radical = Matrix<F>(field, 0, n);
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    Vec<F> e = zero_vec(field, n);
    for (std::size_t i = 0; i < n; ++i)
      if (paths[basis_paths[i]].length() == 0 && paths[basis_paths[i]].source == static_cast<int>(v)) {
        e[i] = field.one();
        parts.unit[i] = field.one();
      }
    parts.idempotents.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (paths[basis_paths[i]].length() > 0) parts.radical.append_row(zero_vec(field, n)), parts.radical.at(parts.radical.rows() - 1, i) = field.one();
  parts.quiver = pres;
  return Algebra<F>::assemble(field, std::move(parts));
}

/// Algebra from a multiplication table; products[i][j] is the coefficient
/// vector of b_i * b_j. The radical is computed, and the idempotents are
/// checked for orthogonality, completeness and primitivity.
template <class F>
AlgebraPtr<F> from_table(const std::vector<std::string>& basis, const Vec<F>& unit,
                         const std::vector<std::vector<Vec<F>>>& products, const std::vector<Vec<F>>& idempotents,
                         const F& field, std::string name = "") {
  const std::size_t n = basis.size();
  if (products.size() != n) throw DimensionMismatch("products table must have one row per basis element");
  typename Algebra<F>::Parts parts(field);
  parts.name = std::move(name);
  parts.labels = basis;
  parts.right_mult.assign(n, Matrix<F>(field, n, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (products[i].size() != n) throw DimensionMismatch("products row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (products[i][j].size() != n) throw DimensionMismatch("product vector has wrong length");
      std::copy(products[i][j].begin(), products[i][j].end(), parts.right_mult[j].row(i).begin());
    }
  }
  parts.unit = unit;
  parts.idempotents = idempotents;
  parts.radical = Matrix<F>(field, 0, n);
  // Radical only makes sense for associative tables; check first.
  auto probe = Algebra<F>::assemble(field, parts);
  AlgebraValidationReport pre = validate(*probe);
  if (!pre.associativity_ok || !pre.unit_ok) throw ValidationFailed(pre);
  parts.radical = radical_from_table(field, parts.right_mult);
  auto alg = Algebra<F>::assemble(field, std::move(parts));
  AlgebraValidationReport rep = validate(*alg);
  if (!rep.all_ok()) throw ValidationFailed(rep);
  return alg;
}

/// Recomputes the radical of `a` from its structure constants alone.
template <class F>
Matrix<F> radical_basis(const Algebra<F>& a) {
  return radical_from_table(a.field(), a.right_mult_all());
}

/// A^op: same basis, c_op(i,j,k) = c(j,i,k). opposite(opposite(a)) returns a.
template <class F>
AlgebraPtr<F> opposite(const AlgebraPtr<F>& a) {
  if (auto origin = a->opposite_origin_.lock()) return origin;
  std::lock_guard<std::mutex> lock(a->cache_mutex_);
  if (a->opposite_cache_) return a->opposite_cache_;
  typename Algebra<F>::Parts parts(a->field());
  parts.name = a->name().empty() ? "" : a->name() + "^op";
  parts.labels = a->labels();
  for (std::size_t j = 0; j < a->dim(); ++j) parts.right_mult.push_back(a->left_mult(j));
  parts.unit = a->unit();
  parts.idempotents = a->idempotents();
  parts.radical = a->radical();
  auto op = Algebra<F>::assemble(a->field(), std::move(parts));
  op->opposite_origin_ = a;
  a->opposite_cache_ = op;
  return op;
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& x, const Matrix<F>& y) {
  Matrix<F> out(x.field(), x.rows() * y.rows(), x.cols() * y.cols());
  const F& field = x.field();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (field.is_zero(x.at(i, k))) continue;
      for (std::size_t j = 0; j < y.rows(); ++j)
        for (std::size_t l = 0; l < y.cols(); ++l)
          if (!field.is_zero(y.at(j, l)))
            out.at(i * y.rows() + j, k * y.cols() + l) = field.mul(x.at(i, k), y.at(j, l));
    }
  return out;
}

template <class F>
Vec<F> kron_vec(const F& field, std::span<const typename F::element> x, std::span<const typename F::element> y) {
  Vec<F> out = zero_vec(field, x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!field.is_zero(x[i]))
      for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = field.mul(x[i], y[j]);
  return out;
}

/// A (x) B with basis b_i (x) b'_j in lexicographic order.
template <class F>
AlgebraPtr<F> tensor(const AlgebraPtr<F>& a, const AlgebraPtr<F>& b, std::string name = "") {
  if (a->field() != b->field()) throw FieldMismatch("tensor: algebras over different fields");
  const F& field = a->field();
  const std::size_t n = a->dim(), m = b->dim();
  typename Algebra<F>::Parts parts(field);
  parts.name = name.empty() ? "(" + a->name() + ")x(" + b->name() + ")" : std::move(name);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) parts.labels.push_back(a->labels()[i] + "|" + b->labels()[j]);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < m; ++l) parts.right_mult.push_back(kronecker(a->right_mult(k), b->right_mult(l)));
  parts.unit = kron_vec(field, std::span<const typename F::element>(a->unit()), std::span<const typename F::element>(b->unit()));
  for (const auto& e : a->idempotents())
    for (const auto& f : b->idempotents())
      parts.idempotents.push_back(kron_vec(field, std::span<const typename F::element>(e), std::span<const typename F::element>(f)));
  EchelonBasis<F> rad(field, n * m);
  for (std::size_t r = 0; r < a->radical().rows(); ++r)
    for (std::size_t j = 0; j < m; ++j) rad.add(kron_vec(field, a->radical().row(r), b->basis_vector(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < b->radical().rows(); ++r) rad.add(kron_vec(field, a->basis_vector(i), b->radical().row(r)));
  parts.radical = rad.matrix();
  return Algebra<F>::assemble(field, std::move(parts));
}

/// A^e = A^op (x) A. Cached on the algebra.
template <class F>
AlgebraPtr<F> enveloping(const AlgebraPtr<F>& a) {
  {
    std::lock_guard<std::mutex> lock(a->cache_mutex_);
    if (a->enveloping_cache_) return a->enveloping_cache_;
  }
  auto env = tensor(opposite(a), a, a->name().empty() ? "" : a->name() + "^e");
  std::lock_guard<std::mutex> lock(a->cache_mutex_);
  if (!a->enveloping_cache_) a->enveloping_cache_ = env;
  return a->enveloping_cache_;
}

/// Algebras are interchangeable when they are the same object or have equal
/// multiplication tables.
template <class F>
bool same_algebra(const AlgebraPtr<F>& a, const AlgebraPtr<F>& b) {
  return a == b || a->same_table(*b);
}

}  // namespace gorhom

#endif  // GORHOM_ALGEBRA_HPP
