#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qbench {

using cdouble = std::complex<double>;

// Row-major dense complex matrix, only used for small operators
// (unitary extraction and transpiler verification, dim <= 1024).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cdouble& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cdouble& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix adjoint() const;

  double max_abs_diff(const Matrix& other) const;
  bool approx_equal(const Matrix& other, double tol) const {
    return max_abs_diff(other) <= tol;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<cdouble> data_;
};

}  // namespace qbench
