#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pgw/gibbs.hpp"

namespace pgw {

// Per-qubit angles (phi, omega, theta) of R = RZ(omega) RY(theta) RZ(phi).
struct RotationSpec {
  std::uint64_t seed = 0;
  std::vector<std::array<double, 3>> angles;

  std::size_t n() const { return angles.size(); }
  // R_j |0> for every qubit
  ProductState ket() const;
};

RotationSpec sample_rotation(std::size_t n, std::uint64_t seed);

struct RoundedSolution {
  enum class Mode { explicit_vector, implicit };
  Mode mode = Mode::implicit;
  std::vector<std::int8_t> x;  // explicit mode only
  GibbsParams lambda_half;
  RotationSpec rotation;
  double energy_density = 0.0;
  double energy_stderr = 0.0;
  double hoeffding_halfwidth = 0.0;  // implicit mode, at the requested delta
  double max_abs_sample = 0.0;
  std::uint64_t samples_used = 0;
  double eps = 0.0;
  double delta = 0.0;
};

// x_i = sign(Re <i| exp(E(lam/2)) U |0>), sign(0) = +1.
RoundedSolution round_explicit(const GibbsBackend& backend, const GibbsParams& lam, const RotationSpec& rot,
                               int max_n = 24);

// 2^-n <x|C|x> by per-term basis action.
double energy_density_exact(const std::vector<std::int8_t>& x, const PauliOperator& c);

// Monte Carlo estimate of the rounded vector's energy density against the
// backend's normalized objective. N = ceil(2 |alpha|_1^2 ln(2/delta) / eps^2).
RoundedSolution energy_density_mc(const GibbsBackend& backend, const GibbsParams& lam, const RotationSpec& rot,
                                  double eps, double delta = 1.0 / 3.0, std::uint64_t seed = 0,
                                  int threads = 1);

std::uint64_t mc_sample_count(double alpha_l1, double eps, double delta);

struct HaarRoundResult {
  double value = 0.0;
  double std_err = 0.0;
};

// Random Gaussian states rounded entrywise to +-2^{-n/2}, pushed through
// exp(E/2); returns sum <u|C'|u> / sum <u|u>.
HaarRoundResult haar_round_heuristic(const Instance& inst, const ConstraintSet& s, const GibbsParams& lam,
                                     int l_prime = 50, std::uint64_t seed = 0);

}  // namespace pgw
