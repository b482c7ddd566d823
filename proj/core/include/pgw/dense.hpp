#pragma once

#include <Eigen/Dense>

#include "pgw/diagonal_group.hpp"
#include "pgw/pauli_operator.hpp"

namespace pgw {

// Dense 2^n x 2^n forms built from the basis action (n <= 14).
Eigen::MatrixXcd to_dense(const PauliString& p);
Eigen::MatrixXcd to_dense(const PauliOperator& op);
Eigen::MatrixXd to_dense_real(const PauliOperator& op);

// +-1 diagonal of Z_z.
Eigen::VectorXd z_diagonal(const BitVec& z);

double lambda_max(const PauliOperator& op);
double operator_norm(const PauliOperator& op);

}  // namespace pgw
