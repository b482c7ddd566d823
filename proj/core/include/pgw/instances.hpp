#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pgw/pauli_operator.hpp"

namespace pgw {

struct InstanceFlags {
  bool real_symmetric = false;
  bool commuting_1d = false;
  std::optional<int> window_width;

  friend bool operator==(const InstanceFlags&, const InstanceFlags&) = default;
};

struct Instance {
  PauliOperator op;
  InstanceFlags flags;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> metadata;

  std::size_t n() const { return op.n(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const Instance& inst);

enum class HammingMode { hypercube, hamming_k, complete };

Instance gen_hamming_family(int n, int k, HammingMode mode);
Instance gen_cluster1d(int n, std::uint64_t seed);
Instance gen_commuting4();
// m distinct non-identity Paulis with an even number of Y sites and
// standard-normal coefficients.
Instance gen_random_pauli(int n, int m, std::uint64_t seed);

// Exact Pauli expansion c_P = tr(P a) / 2^k of a real symmetric matrix, k <= 6.
PauliOperator decompose_dense(const Eigen::MatrixXd& a);

struct KroneckerSpec {
  std::vector<Eigen::MatrixXd> factors;
  int repetitions = 1;
  // divide every factor by its spectral norm
  bool normalize = true;
};

Eigen::MatrixXd default_initiator();

// Implicit product form C = (f_1 (x) ... (x) f_r)^{(x) repetitions}.
struct KroneckerInstance {
  KroneckerSpec spec;
  std::vector<PauliOperator> factor_ops;  // one per factor, normalized
  std::vector<int> factor_qubits;
  int total_qubits = 0;
  double l1 = 0.0;

  // Ordered factor list with repetitions unrolled.
  std::vector<std::size_t> sequence() const;
  // Full term list (product of factor expansions); total_qubits <= 12.
  PauliOperator explicit_operator() const;
  Eigen::MatrixXd dense() const;
};

KroneckerInstance gen_kronecker(const KroneckerSpec& spec);

struct StructureReport {
  bool walk_regular = false;
  bool connected = false;
  bool fully_commuting = false;
};

StructureReport structure_report(const Instance& inst, int kmax);

std::string to_string(HammingMode m);

}  // namespace pgw
