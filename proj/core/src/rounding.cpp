#include "pgw/rounding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pgw/parallel.hpp"
#include "pgw/rng.hpp"
#include "pgw/stochastic_backend.hpp"

namespace pgw {

namespace {

std::int8_t sign_of(double v) { return v < 0.0 ? -1 : 1; }

}  // namespace

ProductState RotationSpec::ket() const {
  ProductState k(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const auto [phi, omega, theta] = angles[j];
    k[j][0] = std::polar(std::cos(theta / 2), -(phi + omega) / 2);
    k[j][1] = std::polar(std::sin(theta / 2), -(phi - omega) / 2);
  }
  return k;
}

RotationSpec sample_rotation(std::size_t n, std::uint64_t seed) {
  RotationSpec r;
  r.seed = seed;
  Rng rng(seed);
  const double tau = 2.0 * std::numbers::pi;
  for (std::size_t j = 0; j < n; ++j) {
    const double phi = tau * rng.uniform();
    const double omega = tau * rng.uniform();
    const double theta = tau * rng.uniform();
    r.angles.push_back({phi, omega, theta});
  }
  return r;
}

RoundedSolution round_explicit(const GibbsBackend& backend, const GibbsParams& lam, const RotationSpec& rot,
                               int max_n) {
  const std::size_t n = backend.n();
  if (static_cast<int>(n) > max_n) throw std::invalid_argument("explicit rounding refused above the n cap");
  if (rot.n() != n) throw std::invalid_argument("rotation size differs from n");
  RoundedSolution r;
  r.mode = RoundedSolution::Mode::explicit_vector;
  r.lambda_half = lam.scaled(0.5);
  r.rotation = rot;
  const std::uint64_t d = std::uint64_t{1} << n;
  std::vector<std::uint64_t> bras(d);
  for (std::uint64_t b = 0; b < d; ++b) bras[b] = b;
  const auto amps = backend.amplitudes(r.lambda_half, bras, rot.ket());
  r.x.resize(d);
  for (std::uint64_t b = 0; b < d; ++b) r.x[b] = sign_of(amps[b].real());
  r.energy_density = energy_density_exact(r.x, backend.objective());
  r.samples_used = d;
  return r;
}

double energy_density_exact(const std::vector<std::int8_t>& x, const PauliOperator& c) {
  const std::uint64_t d = std::uint64_t{1} << c.n();
  if (c.n() > 24 || x.size() != d) throw std::invalid_argument("sign vector length must be 2^n, n <= 24");
  double total = 0.0;
  for (const auto& t : c.terms()) {
    const PauliMasks m(t.pauli);
    const double ph = Phase{m.y_phase}.value().real();
    if (ph == 0.0) continue;  // imaginary-phase terms cancel in <x|P|x> for real x
    double acc = 0.0;
    for (std::uint64_t b = 0; b < d; ++b) acc += m.zsign(b) * x[b ^ m.x] * x[b];
    total += t.coeff * ph * acc;
  }
  return std::ldexp(total, -static_cast<int>(c.n()));
}

std::uint64_t mc_sample_count(double alpha_l1, double eps, double delta) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(2.0 * alpha_l1 * alpha_l1 * std::log(2.0 / delta) / (eps * eps)));
}

RoundedSolution energy_density_mc(const GibbsBackend& backend, const GibbsParams& lam, const RotationSpec& rot,
                                  double eps, double delta, std::uint64_t seed, int threads) {
  const std::size_t n = backend.n();
  if (rot.n() != n) throw std::invalid_argument("rotation size differs from n");
  if (n > 63) throw std::invalid_argument("basis indices need n <= 63");
  const auto& c = backend.objective();
  const double alpha = c.pauli_l1();
  const std::uint64_t N = mc_sample_count(alpha, eps, delta);

  RoundedSolution r;
  r.mode = RoundedSolution::Mode::implicit;
  r.lambda_half = lam.scaled(0.5);
  r.rotation = rot;
  r.eps = eps;
  r.delta = delta;
  r.samples_used = N;

  std::vector<PauliMasks> masks;
  for (const auto& t : c.terms()) masks.emplace_back(t.pauli);
  const ProductState ket = rot.ket();
  const std::size_t m = masks.size();

  std::vector<double> samples(N);
  parallel_for(N, threads, [&](std::size_t s) {
    Rng rng(derive_seed(seed, s));
    const std::uint64_t i = rng.next_u64() >> (64 - n);
    std::vector<std::uint64_t> bras{i};
    for (const auto& mk : masks) bras.push_back(i ^ mk.x);
    const auto amps = backend.amplitudes(r.lambda_half, bras, ket);
    const double xi = sign_of(amps[0].real());
    double X = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      // <k|P|i> = i^{y} (-1)^{z.i}
      const double ph = Phase{masks[j].y_phase}.value().real() * masks[j].zsign(i);
      X += c[j].coeff * ph * sign_of(amps[j + 1].real());
    }
    X *= xi;
    if (std::abs(X) > alpha * (1.0 + 1e-12)) throw std::logic_error("Monte Carlo sample exceeds |alpha|_1");
    samples[s] = X;
  });

  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(N);
  double var = 0.0;
  for (double v : samples) {
    var += (v - mean) * (v - mean);
    r.max_abs_sample = std::max(r.max_abs_sample, std::abs(v));
  }
  var = N > 1 ? var / static_cast<double>(N - 1) : 0.0;
  r.energy_density = mean;
  r.energy_stderr = std::sqrt(var / static_cast<double>(N));
  r.hoeffding_halfwidth = alpha * std::sqrt(2.0 * std::log(2.0 / delta) / static_cast<double>(N));
  return r;
}

HaarRoundResult haar_round_heuristic(const Instance& inst, const ConstraintSet& s, const GibbsParams& lam,
                                     int l_prime, std::uint64_t seed) {
  if (l_prime < 1) throw std::invalid_argument("L' must be >= 1");
  StochasticBackend be(inst, s);
  const std::size_t n = inst.n();
  const std::uint64_t d = std::uint64_t{1} << n;
  const double amp = std::ldexp(1.0, -static_cast<int>(n)) > 0 ? std::pow(2.0, -0.5 * static_cast<double>(n)) : 0.0;
  std::vector<double> num(static_cast<std::size_t>(l_prime)), den(static_cast<std::size_t>(l_prime));
  for (int l = 0; l < l_prime; ++l) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(l)));
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
    for (std::uint64_t b = 0; b < d; ++b) v[static_cast<Eigen::Index>(b)] = rng.normal() < 0.0 ? -amp : amp;
    const Eigen::VectorXcd u = be.apply_exp_half(lam, v);
    std::complex<double> q = 0.0;
    for (const auto& t : be.objective().terms()) {
      const PauliMasks m(t.pauli);
      const auto ph = Phase{m.y_phase}.value();
      std::complex<double> acc = 0.0;
      for (std::uint64_t b = 0; b < d; ++b)
        acc += std::conj(u[static_cast<Eigen::Index>(b ^ m.x)]) * m.zsign(b) * u[static_cast<Eigen::Index>(b)];
      q += t.coeff * ph * acc;
    }
    num[static_cast<std::size_t>(l)] = q.real();
    den[static_cast<std::size_t>(l)] = u.squaredNorm();
  }
  double N = 0.0, D = 0.0;
  for (int l = 0; l < l_prime; ++l) {
    N += num[static_cast<std::size_t>(l)];
    D += den[static_cast<std::size_t>(l)];
  }
  HaarRoundResult r;
  r.value = N / D;
  if (l_prime > 1) {
    double mean = 0.0, acc = 0.0;
    std::vector<double> loo(static_cast<std::size_t>(l_prime));
    for (int l = 0; l < l_prime; ++l) {
      loo[static_cast<std::size_t>(l)] = (N - num[static_cast<std::size_t>(l)]) / (D - den[static_cast<std::size_t>(l)]);
      mean += loo[static_cast<std::size_t>(l)];
    }
    mean /= l_prime;
    for (double x : loo) acc += (x - mean) * (x - mean);
    r.std_err = std::sqrt(acc * (l_prime - 1) / l_prime);
  }
  return r;
}

}  // namespace pgw
