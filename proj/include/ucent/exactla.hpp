#pragma once

// Exact integer and rational linear algebra on GMP scalars.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucent {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix. Empty shapes (0 x k, k x 0) are valid values.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix: entry count mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("matrix: ragged initializer");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          tmp = aik * b(k, j);
          out(i, j) += tmp;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Nontrivial invariant factors (all >= 2), each dividing the next.
struct InvariantFactors {
  std::vector<Integer> factors;

  bool trivial() const { return factors.empty(); }
  /// Order of the torsion group, 1 when trivial.
  Integer order() const;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

struct SmithForm {
  InvariantFactors invariants;
  /// Columns form a Z-basis of {x in Z^cols : m x = 0}, in Hermite normal form.
  IntMatrix kernel;
  std::size_t rank = 0;
};

/// Smith normal form of an integer matrix with the integer kernel.
SmithForm snf(const IntMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Each row scaled by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Inverse of a nonsingular square rational matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

/// k-th compound matrix: entry (I, J) is the minor det(m[I, J]) over lexicographically
/// ordered k-subsets. This is the matrix of the k-th exterior power of m.
RatMatrix compound(const RatMatrix& m, std::size_t k);

std::string to_string(const IntMatrix& m);
std::string to_string(const RatMatrix& m);

}  // namespace ucent
