#include "qbench/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbench {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      cdouble a = at(i, k);
      if (a == cdouble{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  }
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

double Matrix::max_abs_diff(const Matrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

}  // namespace qbench
