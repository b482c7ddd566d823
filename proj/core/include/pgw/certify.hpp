#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pgw/gibbs.hpp"
#include "pgw/hu_solver.hpp"
#include "pgw/rounding.hpp"

namespace pgw {

enum class CertKind { sandwich, xi_bound, purity, stability_diag };
std::string to_string(CertKind k);

struct Certificate {
  CertKind kind = CertKind::sandwich;
  bool pass = false;
  std::vector<std::pair<std::string, double>> values;
  std::vector<double> trace;
  std::string summary;

  double value(const std::string& key) const;
};

struct QuboResult {
  double value = 0.0;
  std::vector<std::int8_t> argmax;
};

// Exact max of <x|C|x> over x in {+-1}^(2^n). Sign vectors are visited in
// lexicographic order with +1 before -1; the first maximizer wins.
QuboResult brute_force_qubo(const PauliOperator& c, int cap_n = 4);

struct XiResult {
  double xi = 0.0;
  bool unbounded = false;
  std::uint64_t pattern_count = 0;
  std::uint64_t lp_count = 0;
};

// sup |xi|_1 subject to sum_i xi_i Z_{A_i} >= -v I.
XiResult xi_lp(const ConstraintSet& s, double v, int cap_m = 12, int threads = 1);

// (2^k - 1)^{1/6} eps^{1/3} |C|, a scaling diagnostic without the constant.
double stability_diag(int k, double eps, double norm_c);
Certificate stability_certificate(int k, double eps, double norm_c);

// Purity of sigma(t * lam) for each t; passes iff some purity >= 1/4 + delta.
Certificate purity_uniqueness(const GibbsBackend& backend, const GibbsParams& lam,
                              const std::vector<double>& scales, double delta);

// QUBO / (2^n |C|) in [rounded - stderr, gw_upper + eps].
Certificate sandwich_report(const SolveReport& gw, const RoundedSolution& rounded);

}  // namespace pgw
