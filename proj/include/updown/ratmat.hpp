#ifndef UPDOWN_RATMAT_HPP
#define UPDOWN_RATMAT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "updown/rational.hpp"

namespace updown {

// Dense matrix with exact rational entries.  Sized for the small state
// spaces of this library (tens of rows); elimination is plain Gaussian
// elimination over the rationals, which is exact.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const RatMat& o) const = default;

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMat: shape mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Rat trace() const {
    Rat t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  // Inverse by Gauss-Jordan elimination; throws std::domain_error when the
  // matrix is singular.
  RatMat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: not square");
    RatMat a = *this;
    RatMat inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && a(piv, col) == 0) ++piv;
      if (piv == rows_) throw std::domain_error("RatMat: singular matrix");
      if (piv != col) {
        for (std::size_t j = 0; j < cols_; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      Rat d = a(col, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rat f = a(i, col);
        for (std::size_t j = 0; j < cols_; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace updown

#endif  // UPDOWN_RATMAT_HPP
