#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pgw/instances.hpp"
#include "pgw/rng.hpp"

namespace pgw {

struct Draw {
  PauliString pauli;
  int sign = 1;
};

// Draws P with probability |c_P| / l1.
class TermSampler {
 public:
  virtual ~TermSampler() = default;
  virtual std::size_t n() const = 0;
  virtual double l1() const = 0;
  virtual Draw draw(Rng& rng) const = 0;
};

// Categorical sampling over an explicit term list.
class ExplicitSampler final : public TermSampler {
 public:
  explicit ExplicitSampler(PauliOperator op);
  std::size_t n() const override { return op_.n(); }
  double l1() const override { return op_.pauli_l1(); }
  Draw draw(Rng& rng) const override;

 private:
  PauliOperator op_;
  std::vector<double> cdf_;
};

// Independent draws per Kronecker factor, concatenated.
class KroneckerSampler final : public TermSampler {
 public:
  explicit KroneckerSampler(KroneckerInstance ki);
  std::size_t n() const override { return static_cast<std::size_t>(ki_.total_qubits); }
  double l1() const override { return ki_.l1; }
  Draw draw(Rng& rng) const override;

  // factor index and term index of one draw, exposed for marginal checks
  std::vector<std::size_t> draw_term_indices(Rng& rng) const;

 private:
  KroneckerInstance ki_;
  std::vector<ExplicitSampler> factor_samplers_;
};

std::unique_ptr<TermSampler> kron_sampler(const KroneckerSpec& spec);

// floor(2 k l1^2 eps^-2 / 1.5), k the total qubit count.
std::uint64_t sample_count(int k_qubits, double l1, double eps);

// m draws merged into coefficients count*sign*l1/m.
PauliOperator sparsify(const TermSampler& s, std::uint64_t m, std::uint64_t seed);

PauliOperator renormalize_sparsified(const PauliOperator& op);

}  // namespace pgw
