// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/linalg.hpp"

namespace ltoeplitz {

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) return {};
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues();
}

double sigma_max(const Matrix& a) {
  const auto s = singular_values(a);
  return s.size() ? s(0) : 0.0;
}

double sigma_min(const Matrix& a) {
  const auto s = singular_values(a);
  return s.size() ? s(s.size() - 1) : 0.0;
}

Matrix matrix_power(const Matrix& a, unsigned k) {
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix base = a;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace ltoeplitz
