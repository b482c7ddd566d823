#include "pgw/dense.hpp"

#include <stdexcept>

namespace pgw {

namespace {

void check_n(std::size_t n) {
  if (n > 14) throw std::invalid_argument("dense form refused for n > 14");
}

}  // namespace

Eigen::MatrixXcd to_dense(const PauliString& p) {
  check_n(p.n());
  const std::uint64_t d = std::uint64_t{1} << p.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::uint64_t b = 0; b < d; ++b) {
    auto img = apply_to_basis(p, b);
    m(img.index, b) = img.phase.value();
  }
  return m;
}

Eigen::MatrixXcd to_dense(const PauliOperator& op) {
  check_n(op.n());
  const std::uint64_t d = std::uint64_t{1} << op.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& t : op.terms())
    for (std::uint64_t b = 0; b < d; ++b) {
      auto img = apply_to_basis(t.pauli, b);
      m(img.index, b) += t.coeff * img.phase.value();
    }
  return m;
}

Eigen::MatrixXd to_dense_real(const PauliOperator& op) {
  if (!op.is_real_symmetric()) throw std::invalid_argument("operator has odd-Y terms");
  return to_dense(op).real();
}

Eigen::VectorXd z_diagonal(const BitVec& z) {
  check_n(z.size());
  const std::uint64_t d = std::uint64_t{1} << z.size();
  const std::uint64_t zm = z.to_index();
  Eigen::VectorXd v(d);
  for (std::uint64_t b = 0; b < d; ++b) v[b] = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
  return v;
}

double lambda_max(const PauliOperator& op) {
  if (op.is_real_symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense_real(op), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(op), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double operator_norm(const PauliOperator& op) {
  Eigen::VectorXd ev;
  if (op.is_real_symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense_real(op), Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(op), Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  }
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

}  // namespace pgw
