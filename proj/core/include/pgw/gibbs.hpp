#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgw/diagonal_group.hpp"
#include "pgw/instances.hpp"

namespace pgw {

enum class BackendKind { automatic, dense, stochastic, commuting1d };
enum class ExpectationMode { insertion, finite_difference };

std::string to_string(BackendKind k);
BackendKind backend_kind_from_string(const std::string& s);

struct StochasticConfig {
  int num_probes = 50;
  int max_probes = 3200;    // escalation ceiling
  int taylor_degree = 0;    // 0: max(8, ceil(log2(|E| / taylor_target)) + 8)
  double taylor_target = 1e-10;
  double fragment_norm_cap = 1.0;
  int max_qubits = 24;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Commuting1dConfig {
  int bond_cap = 64;
  ExpectationMode mode = ExpectationMode::insertion;
  double fd_step = 1e-4;
  int max_block_width = 8;
};

struct BackendConfig {
  BackendKind kind = BackendKind::automatic;
  int dense_max_n = 10;
  StochasticConfig stochastic;
  Commuting1dConfig commuting1d;
};

// lambda_a[i] multiplies Z of constraints[i] of the backend's ConstraintSet.
struct GibbsParams {
  double lambda_c = 0.0;
  std::vector<double> lambda_a;

  GibbsParams() = default;
  explicit GibbsParams(std::size_t m) : lambda_a(m, 0.0) {}

  double l1() const;
  GibbsParams scaled(double t) const;
  friend bool operator==(const GibbsParams&, const GibbsParams&) = default;
};

struct Observable {
  enum class Kind { objective, z_string, op };
  Kind kind = Kind::objective;
  BitVec z;
  PauliOperator op;

  static Observable objective() { return {}; }
  static Observable z_string(BitVec z) { return {Kind::z_string, std::move(z), {}}; }
  static Observable pauli(PauliOperator op) { return {Kind::op, {}, std::move(op)}; }
};

struct ExpectationResult {
  std::vector<double> values;
  std::vector<double> std_err;  // zero for exact backends
  double log_partition = 0.0;

  double max_std_err() const;
};

// Single-qubit factors of a product state, qubit 1 first.
using ProductState = std::vector<std::array<std::complex<double>, 2>>;
ProductState basis_product_state(std::uint64_t b, std::size_t n);

class BondCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gibbs states sigma(lambda) ~ exp(E), E = lambda_c C/|C| + sum lambda_a Z_a.
// Immutable after construction; const methods are thread-safe.
class GibbsBackend {
 public:
  GibbsBackend(const Instance& inst, const ConstraintSet& s);
  virtual ~GibbsBackend() = default;

  virtual BackendKind kind() const = 0;

  // accuracy_level > 0 asks stochastic backends for 2^level times more probes.
  virtual ExpectationResult expectations(const GibbsParams& lam, std::span<const Observable> obs,
                                         int accuracy_level = 0) const = 0;
  virtual double log_partition(const GibbsParams& lam) const = 0;
  virtual int max_accuracy_level() const { return 0; }

  double purity(const GibbsParams& lam) const;

  // <bra| exp(E(lam)) |ket>, unnormalized.
  virtual std::complex<double> amplitude(const GibbsParams& lam, std::uint64_t bra,
                                         const ProductState& ket) const = 0;
  // Same amplitudes up to one common positive factor (avoids overflow and
  // lets backends reuse work across bras).
  virtual std::vector<std::complex<double>> amplitudes(const GibbsParams& lam,
                                                       std::span<const std::uint64_t> bras,
                                                       const ProductState& ket) const;

  std::size_t n() const { return n_; }
  const Instance& instance() const { return inst_; }
  const PauliOperator& objective() const { return objective_; }
  const ConstraintSet& constraints() const { return constraints_; }
  double norm() const { return norm_; }

 protected:
  void check_params(const GibbsParams& lam) const;

  Instance inst_;
  ConstraintSet constraints_;
  PauliOperator objective_;  // C / norm_upper_bound
  double norm_ = 1.0;
  std::size_t n_ = 0;
};

BackendKind select_backend(const Instance& inst, const BackendConfig& cfg);
std::unique_ptr<GibbsBackend> make_backend(const Instance& inst, const ConstraintSet& s,
                                           const BackendConfig& cfg);

}  // namespace pgw
