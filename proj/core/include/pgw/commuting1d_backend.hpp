#pragma once

#include <Eigen/Dense>

#include "pgw/gibbs.hpp"

namespace pgw {

// Exact contraction for exponents that split into mutually commuting blocks
// of local support. exp(E) is a product of per-block MPOs; traces and
// amplitudes are computed by sweeping a boundary vector over the sites.
//
// Exponent atoms are the objective's term blocks (shared group id) and the
// individual constraints. Atoms that fail to commute are merged into one
// block, which is exponentiated densely on its window.
class Commuting1dBackend final : public GibbsBackend {
 public:
  Commuting1dBackend(const Instance& inst, const ConstraintSet& s, Commuting1dConfig cfg = {});
  ~Commuting1dBackend() override;

  BackendKind kind() const override { return BackendKind::commuting1d; }
  ExpectationResult expectations(const GibbsParams& lam, std::span<const Observable> obs,
                                 int accuracy_level = 0) const override;
  double log_partition(const GibbsParams& lam) const override;
  std::complex<double> amplitude(const GibbsParams& lam, std::uint64_t bra,
                                 const ProductState& ket) const override;
  std::vector<std::complex<double>> amplitudes(const GibbsParams& lam,
                                               std::span<const std::uint64_t> bras,
                                               const ProductState& ket) const override;

  // Widest window of a merged block and the largest boundary dimension seen
  // by the last contraction setup (diagnostics).
  int max_block_width() const { return max_width_; }
  std::size_t block_count() const;
  std::size_t max_boundary_dim(const GibbsParams& lam) const;

  const Commuting1dConfig& config() const { return cfg_; }

 private:
  struct Prepared;
  struct Block;

  Prepared prepare(const GibbsParams& lam) const;
  double pauli_expect(const Prepared& p, const PauliString& q) const;
  double observable(const Prepared& p, const Observable& o) const;
  double fd_derivative(const GibbsParams& lam, int param) const;

  Commuting1dConfig cfg_;
  std::vector<Block> blocks_;
  int max_width_ = 0;
};

}  // namespace pgw
