#pragma once

#include <Eigen/Dense>

#include "pgw/gibbs.hpp"

namespace pgw {

// Exact: eigendecomposition of the 2^n x 2^n exponent. Uses real arithmetic
// when every term is real.
class DenseBackend final : public GibbsBackend {
 public:
  DenseBackend(const Instance& inst, const ConstraintSet& s);

  BackendKind kind() const override { return BackendKind::dense; }
  ExpectationResult expectations(const GibbsParams& lam, std::span<const Observable> obs,
                                 int accuracy_level = 0) const override;
  double log_partition(const GibbsParams& lam) const override;
  std::complex<double> amplitude(const GibbsParams& lam, std::uint64_t bra,
                                 const ProductState& ket) const override;
  std::vector<std::complex<double>> amplitudes(const GibbsParams& lam,
                                               std::span<const std::uint64_t> bras,
                                               const ProductState& ket) const override;

  // exp(E(lam)) applied to v, exactly.
  Eigen::VectorXcd apply_exp(const GibbsParams& lam, const Eigen::VectorXcd& v) const;
  // Full density matrix sigma(lam).
  Eigen::MatrixXcd density(const GibbsParams& lam) const;

 private:
  bool real_ = true;
  Eigen::MatrixXd c_real_;
  Eigen::MatrixXcd c_complex_;
  std::vector<Eigen::VectorXd> z_diag_;
};

Eigen::VectorXcd product_state_vector(const ProductState& s);

}  // namespace pgw
