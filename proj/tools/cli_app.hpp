#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgw/report_io.hpp"
#include "pgw/sparsifier.hpp"

namespace pgw::cli {

// Exit code 1: the instance (or a constraint file) could not be read or is invalid.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResolvedConstraints {
  ConstraintSet set;
  std::string mode;  // as given on the command line
  std::vector<std::string> notes;
  bool truncated = false;
};

// auto | krylov:K | none | file:PATH
ResolvedConstraints resolve_constraints(const Instance& inst, const std::string& mode,
                                        std::uint64_t enumeration_cap = kDefaultEnumerationCap);

Instance load_instance_any(const std::filesystem::path& path);

struct GenArgs {
  std::string model = "cluster1d";
  int n = 10;
  int k = 1;  // hamming distance or Kronecker repetitions
  int m = 0;  // random model term count
  std::uint64_t seed = 0;
};
// Instance JSON, or a Kronecker spec JSON for model = kronecker.
std::string run_gen(const GenArgs& a);

struct SolveArgs {
  std::string constraints = "auto";
  double eps = 0.1;
  std::string backend = "auto";
  std::uint64_t seed = 0;
  int probes = 50;
  int bond_cap = 64;
  std::string policy = "fixed";
  long max_iterations = 0;
  int threads = 1;
  bool timing = false;
  bool exact_norm = false;
  std::vector<std::string> certify;  // xi, stability, purity, brute
};

struct SolveOutput {
  Json json;
  SolveReport report;
  ResolvedConstraints constraints;
};

SolveOutput run_solve(const Instance& inst, const SolveArgs& a);

struct RoundArgs {
  double eps = 0.5;
  double delta = 1.0 / 3.0;
  std::uint64_t seed = 0;
  bool explicit_vector = false;
  bool emit_vector = false;
  int haar_l_prime = 0;  // 0: skip the heuristic
  int threads = 1;
};

// Adds "rounding" and a sandwich certificate to a solve report JSON.
Json run_round(const Instance& inst, const Json& solve_report, const SolveArgs& solve_args, const RoundArgs& a);

struct SparsifyArgs {
  double eps = 0.5;
  std::uint64_t m = 0;  // 0: sample_count(k, l1, eps)
  std::uint64_t seed = 0;
};
Instance run_sparsify(const KroneckerSpec& spec, const SparsifyArgs& a);

struct CertifyArgs {
  std::string kind = "xi";
  std::string constraints = "auto";
  double v = 1.0;
  double eps = 0.1;
  int cap = 12;
  double delta = 0.05;
  std::vector<double> scales{1.0, 4.0, 16.0, 64.0, 256.0};
  int threads = 1;
};
Json run_certify(const Instance& inst, const CertifyArgs& a);

struct BenchArgs {
  std::string model = "cluster1d";  // cluster1d | kronecker
  int n_lo = 7, n_hi = 12;          // qubits, or Kronecker repetitions
  int reps = 5;
  double eps = 0.1;
  double round_eps = 0.5;
  double sparsify_eps = 0.5;
  std::vector<std::string> modes;  // default per model
  std::uint64_t seed = 0;
  int threads = 1;
  bool timing = false;
  SolveArgs solve;
};
std::vector<BenchRow> run_bench(const BenchArgs& a);

int main(int argc, char** argv);

}  // namespace pgw::cli
