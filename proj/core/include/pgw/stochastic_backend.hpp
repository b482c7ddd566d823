#pragma once

#include <Eigen/Dense>

#include "pgw/gibbs.hpp"

namespace pgw {

// Matrix-free: Gaussian Hutchinson probes pushed through a fragmented Taylor
// series of exp(E/2). Real vectors when all terms are real.
class StochasticBackend final : public GibbsBackend {
 public:
  StochasticBackend(const Instance& inst, const ConstraintSet& s, StochasticConfig cfg = {});

  BackendKind kind() const override { return BackendKind::stochastic; }
  ExpectationResult expectations(const GibbsParams& lam, std::span<const Observable> obs,
                                 int accuracy_level = 0) const override;
  double log_partition(const GibbsParams& lam) const override;
  int max_accuracy_level() const override;
  std::complex<double> amplitude(const GibbsParams& lam, std::uint64_t bra,
                                 const ProductState& ket) const override;
  std::vector<std::complex<double>> amplitudes(const GibbsParams& lam,
                                               std::span<const std::uint64_t> bras,
                                               const ProductState& ket) const override;

  // exp(t E(lam)) v by fragmented Taylor; returns the vector scaled by
  // exp(-log_scale), with log_scale written out.
  Eigen::VectorXcd apply_exp(const GibbsParams& lam, double t, const Eigen::VectorXcd& v,
                             double* log_scale) const;
  Eigen::VectorXcd apply_exp_half(const GibbsParams& lam, const Eigen::VectorXcd& v) const;

  // Hutchinson estimate of tr(exp(E)) for a given probe count, as
  // (log mean, per-probe values scaled by exp(-log mean)).
  struct TraceEstimate {
    double log_mean = 0.0;
    std::vector<double> relative;
  };
  TraceEstimate trace_estimate(const GibbsParams& lam, int probes) const;

  int fragments(const GibbsParams& lam, double t) const;
  int taylor_degree(const GibbsParams& lam) const;
  const StochasticConfig& config() const { return cfg_; }

 private:
  template <class S>
  struct Kernel;

  Eigen::VectorXd exponent_diagonal(const GibbsParams& lam) const;
  Eigen::VectorXcd exp_ket(const GibbsParams& lam, const ProductState& ket, double* log_scale) const;

  StochasticConfig cfg_;
  bool real_ = true;
  struct OffDiag {
    std::uint64_t x, z;
    double coeff;     // includes the real part of i^{|x&z|}
    bool imaginary;   // i^{|x&z|} = +-i
  };
  std::vector<OffDiag> offdiag_;
  Eigen::VectorXd objective_diag_;
  std::vector<std::uint64_t> z_masks_;
};

}  // namespace pgw
