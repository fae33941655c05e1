// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ltoeplitz {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Singular values in decreasing order (divide-and-conquer SVD, values only).
[[nodiscard]] Eigen::VectorXd singular_values(const Matrix& a);
[[nodiscard]] double sigma_max(const Matrix& a);
[[nodiscard]] double sigma_min(const Matrix& a);

/// a^k by repeated squaring; k >= 0.
[[nodiscard]] Matrix matrix_power(const Matrix& a, unsigned k);

}  // namespace ltoeplitz
