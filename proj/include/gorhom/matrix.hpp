#ifndef GORHOM_MATRIX_HPP
#define GORHOM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gorhom/errors.hpp"
#include "gorhom/field.hpp"

namespace gorhom {

template <class F>
using Vec = std::vector<typename F::element>;

template <class F>
Vec<F> zero_vec(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <class F>
bool is_zero_vec(const F& field, std::span<const typename F::element> v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

/// y += a * x, entrywise.
template <class F>
void axpy(const F& field, std::span<typename F::element> y, const typename F::element& a,
          std::span<const typename F::element> x) {
  if (field.is_zero(a)) return;
  if constexpr (is_prime_field_v<F>) {
    const std::uint64_t p = field.p();
    if (p == 2) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] ^= x[i];
      return;
    }
    const std::uint64_t m = a;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (x[i]) y[i] = static_cast<std::uint32_t>((y[i] + m * x[i]) % p);
  } else {
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!field.is_zero(x[i])) y[i] += a * x[i];
  }
}

/// Dense row-major matrix over a field. Zero-row and zero-column shapes are
/// legal. All entries are canonical field elements.
template <class F>
class Matrix {
 public:
  using element = typename F::element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec<F> row_vec(std::size_t r) const { return Vec<F>(row(r).begin(), row(r).end()); }

  std::vector<Vec<F>> row_list() const {
    std::vector<Vec<F>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
  }

  void append_row(std::span<const element> v) {
    if (v.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool is_zero() const { return is_zero_vec<F>(field_, data_); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    require_same_field(o);
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) axpy<F>(field_, out.row(r), at(r, k), o.row(k));
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
    return out;
  }

  Matrix scaled(const element& a) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = field_.mul(a, x);
    return out;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  const std::vector<element>& data() const noexcept { return data_; }

 private:
  void require_same_field(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrices over different fields");
  }
  void require_same_shape(const Matrix& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<element> data_;
};

/// Row vector times matrix (the row-vector action convention used throughout).
template <class F>
Vec<F> vec_mul(const F& field, std::span<const typename F::element> v, const Matrix<F>& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix shape mismatch");
  Vec<F> out = zero_vec(field, m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) axpy<F>(field, out, v[k], m.row(k));
  return out;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix<F> out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r)
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(a.rows() + r).begin());
  return out;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + a.cols());
  }
  return out;
}

/// Block-diagonal sum.
template <class F>
Matrix<F> block_diag(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

}  // namespace gorhom

#endif  // GORHOM_MATRIX_HPP
