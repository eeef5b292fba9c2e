#pragma once

#include <cstddef>
#include <vector>

#include "schemeforge/errors.hpp"
#include "schemeforge/rational.hpp"

namespace schemeforge {

/// Dense matrix with exact rational entries, row-major storage.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static ExactMatrix ones(std::size_t n) {
    ExactMatrix m(n, n);
    for (auto& x : m.a_) x = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<Rational>& flat() const { return a_; }
  std::vector<Rational> take_flat() && { return std::move(a_); }

  static ExactMatrix from_flat(std::size_t rows, std::size_t cols, std::vector<Rational> entries) {
    if (entries.size() != rows * cols) throw Error("from_flat: shape mismatch");
    ExactMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.a_ = std::move(entries);
    return m;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  ExactMatrix transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix add: shape mismatch");
    ExactMatrix m = x;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += y.a_[i];
    return m;
  }

  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix sub: shape mismatch");
    ExactMatrix m = x;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= y.a_[i];
    return m;
  }

  friend ExactMatrix operator*(const Rational& c, const ExactMatrix& x) {
    ExactMatrix m = x;
    for (auto& v : m.a_) v *= c;
    return m;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Exact product, skipping zero entries. Scheme matrices are sparse (valency
/// at most 2 in the quasi-thin cases), so this dominates closure runtime.
inline ExactMatrix mat_mul(const ExactMatrix& A, const ExactMatrix& B) {
  if (A.cols() != B.rows()) throw Error("mat_mul: inner dimensions disagree");
  ExactMatrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const Rational& x = A.at(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) {
        const Rational& y = B.at(k, j);
        if (!is_zero(y)) C.at(i, j) += x * y;
      }
    }
  return C;
}

}  // namespace schemeforge
