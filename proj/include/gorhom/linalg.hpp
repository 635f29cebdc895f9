#ifndef GORHOM_LINALG_HPP
#define GORHOM_LINALG_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "gorhom/matrix.hpp"

namespace gorhom {

namespace detail {

/// Bit-packed GF(2) rows. Elimination over GF(2) is the hot path of every
/// large resolution, so it gets its own representation.
class BitRows {
 public:
  explicit BitRows(std::size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t rows() const noexcept { return words_ ? data_.size() / words_ : rows_no_words_; }

  template <class It>
  void push_back_dense(It first, It last) {
    const std::size_t base = data_.size();
    data_.resize(base + words_, 0);
    std::size_t c = 0;
    for (It it = first; it != last; ++it, ++c)
      if (*it) data_[base + c / 64] |= std::uint64_t{1} << (c % 64);
    if (!words_) ++rows_no_words_;
  }

  void push_back_row(const std::uint64_t* src) {
    data_.insert(data_.end(), src, src + words_);
    if (!words_) ++rows_no_words_;
  }

  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

  static bool get(const std::uint64_t* row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1u; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + words_, row(b));
  }

  static void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t from, std::size_t to) {
    for (std::size_t w = from; w < to; ++w) dst[w] ^= src[w];
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    const std::size_t nrows = rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < nrows; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t pr = r;
      while (pr < nrows && !(row(pr)[w] & bit)) ++pr;
      if (pr == nrows) continue;
      swap_rows(r, pr);
      const std::uint64_t* src = row(r);
      for (std::size_t i = 0; i < nrows; ++i)
        if (i != r && (row(i)[w] & bit)) xor_into(row(i), src, w, words_);
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  /// First set bit of a row, or cols() if the row is zero.
  std::size_t leading(const std::uint64_t* row) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    return cols_;
  }

 private:
  std::size_t cols_;
  std::size_t words_;
  std::size_t rows_no_words_ = 0;
  std::vector<std::uint64_t> data_;
};

template <class F>
bool is_gf2(const F& field) {
  if constexpr (is_prime_field_v<F>)
    return field.p() == 2;
  else
    return false;
}

template <class F>
BitRows to_bits(const Matrix<F>& m) {
  BitRows b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.push_back_dense(m.row(r).begin(), m.row(r).end());
  return b;
}

template <class F>
Matrix<F> from_bits(const F& field, const BitRows& b, std::size_t nrows) {
  Matrix<F> m(field, nrows, b.cols());
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (BitRows::get(b.row(r), c)) m.at(r, c) = field.one();
  return m;
}

/// Generic in-place Gauss-Jordan; pivot = first nonzero entry in column order.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && field.is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(pr).begin());
    auto pivot_row = m.row(r);
    const auto inv = field.inv(pivot_row[c]);
    if (!field.is_one(pivot_row[c]))
      for (std::size_t k = c; k < m.cols(); ++k) pivot_row[k] = field.mul(inv, pivot_row[k]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m.at(i, c))) continue;
      const auto factor = field.neg(m.at(i, c));
      axpy<F>(field, m.row(i).subspan(c), factor, pivot_row.subspan(c));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form (same shape as the input; zero rows last).
template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  if (detail::is_gf2(m.field())) {
    auto bits = detail::to_bits(m);
    auto pivots = bits.rref();
    auto reduced = detail::from_bits(m.field(), bits, m.rows());
    const std::size_t rank = pivots.size();
    return {std::move(reduced), rank, std::move(pivots)};
  }
  Matrix<F> reduced = m;
  auto pivots = detail::rref_in_place(reduced);
  const std::size_t rank = pivots.size();
  return {std::move(reduced), rank, std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  if (detail::is_gf2(m.field())) {
    auto bits = detail::to_bits(m.rows() <= m.cols() ? m : m.transpose());
    return bits.rref().size();
  }
  Matrix<F> copy = m;
  return detail::rref_in_place(copy).size();
}

/// Rows form a basis of the right kernel {v : m * v^T = 0}.
template <class F>
Matrix<F> nullspace_basis(const Matrix<F>& m) {
  const F& field = m.field();
  auto [reduced, rk, pivots] = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix<F> out(field, m.cols() - rk, m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = field.one();
    for (std::size_t r = 0; r < rk; ++r) out.at(k, pivots[r]) = field.neg(reduced.at(r, free));
    ++k;
  }
  return out;
}

/// Rows form a basis of the left kernel {v : v * m = 0}.
template <class F>
Matrix<F> left_kernel(const Matrix<F>& m) {
  return nullspace_basis(m.transpose());
}

/// Some x with m * x = rhs, free variables set to zero; nullopt when the
/// system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& rhs) {
  if (m.rows() != rhs.rows())
    throw DimensionMismatch("solve: rhs has " + std::to_string(rhs.rows()) + " rows, matrix has " +
                            std::to_string(m.rows()));
  if (m.field() != rhs.field()) throw FieldMismatch("solve: field mismatch");
  const F& field = m.field();
  auto [reduced, rk, pivots] = rref(hstack(m, rhs));
  Matrix<F> x(field, m.cols(), rhs.cols());
  for (std::size_t r = 0; r < rk; ++r) {
    if (pivots[r] >= m.cols()) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols(); ++c) x.at(pivots[r], c) = reduced.at(r, m.cols() + c);
  }
  return x;
}

/// Incrementally maintained basis in reduced row echelon form. Used to build
/// spans one vector at a time, test membership and read coordinates. GF(2)
/// spans are stored bit-packed.
template <class F>
class EchelonBasis {
 public:
  using element = typename F::element;

  EchelonBasis(F field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), gf2_(detail::is_gf2(field_)), bits_(cols) {}

  const F& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v if it is independent of the current span. Returns true if added.
  bool add(std::span<const element> v) {
    if (v.size() != cols_) throw DimensionMismatch("EchelonBasis: vector length mismatch");
    if (gf2_) {
      scratch_.assign(bits_.words(), 0);
      for (std::size_t c = 0; c < cols_; ++c)
        if (v[c]) scratch_[c / 64] |= std::uint64_t{1} << (c % 64);
      return add_bits(scratch_.data());
    }
    Vec<F> w = reduce(v);
    std::size_t lead = 0;
    while (lead < cols_ && field_.is_zero(w[lead])) ++lead;
    if (lead == cols_) return false;
    const auto inv = field_.inv(w[lead]);
    for (auto& x : w) x = field_.mul(inv, x);
    for (auto& row : rows_)
      if (!field_.is_zero(row[lead])) axpy<F>(field_, row, field_.neg(row[lead]), w);
    insert_pivot(lead);
    rows_.push_back(std::move(w));
    return true;
  }

  /// v minus its projection onto the span along pivot coordinates.
  Vec<F> reduce(std::span<const element> v) const {
    if (v.size() != cols_) throw DimensionMismatch("EchelonBasis: vector length mismatch");
    if (gf2_) {
      std::vector<std::uint64_t> w(bits_.words(), 0);
      for (std::size_t c = 0; c < cols_; ++c)
        if (v[c]) w[c / 64] |= std::uint64_t{1} << (c % 64);
      reduce_bits(w.data());
      Vec<F> out = zero_vec(field_, cols_);
      for (std::size_t c = 0; c < cols_; ++c)
        if (detail::BitRows::get(w.data(), c)) out[c] = 1;
      return out;
    }
    Vec<F> w(v.begin(), v.end());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const auto coef = v[pivots_[k]];
      if (!field_.is_zero(coef)) axpy<F>(field_, w, field_.neg(coef), rows_[k]);
    }
    return w;
  }

  bool contains(std::span<const element> v) const { return is_zero_vec<F>(field_, reduce(v)); }

  /// Coordinates of v (assumed in the span) against basis rows in order.
  Vec<F> coordinates(std::span<const element> v) const {
    Vec<F> out;
    out.reserve(pivots_.size());
    for (auto c : pivots_) out.push_back(v[c]);
    return out;
  }

  Vec<F> basis_row(std::size_t k) const {
    if (gf2_) {
      Vec<F> out = zero_vec(field_, cols_);
      for (std::size_t c = 0; c < cols_; ++c)
        if (detail::BitRows::get(bits_.row(k), c)) out[c] = 1;
      return out;
    }
    return rows_[k];
  }

  /// Basis as matrix rows, sorted by pivot column (i.e. the RREF of the span).
  Matrix<F> matrix() const {
    std::vector<std::size_t> order(pivots_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Matrix<F> out(field_, pivots_.size(), cols_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto row = basis_row(order[i]);
      std::copy(row.begin(), row.end(), out.row(i).begin());
    }
    return out;
  }

 private:
  void reduce_bits(std::uint64_t* w) const {
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      if (detail::BitRows::get(w, pivots_[k])) detail::BitRows::xor_into(w, bits_.row(k), 0, bits_.words());
  }

  bool add_bits(std::uint64_t* w) {
    reduce_bits(w);
    const std::size_t lead = bits_.leading(w);
    if (lead == cols_) return false;
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      if (detail::BitRows::get(bits_.row(k), lead))
        detail::BitRows::xor_into(bits_.row(k), w, 0, bits_.words());
    insert_pivot(lead);
    bits_.push_back_row(w);
    return true;
  }

  void insert_pivot(std::size_t lead) {
    pivots_.push_back(lead);
  }

  F field_;
  std::size_t cols_;
  bool gf2_;
  detail::BitRows bits_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> scratch_;
};

/// Rank of a matrix supplied row by row, without materializing it.
template <class F>
class RankAccumulator {
 public:
  RankAccumulator(F field, std::size_t cols) : basis_(std::move(field), cols) {}
  void add_row(std::span<const typename F::element> v) { basis_.add(v); }
  std::size_t rank() const { return basis_.size(); }

 private:
  EchelonBasis<F> basis_;
};

}  // namespace gorhom

#endif  // GORHOM_LINALG_HPP
