#include "pgw/stochastic_backend.hpp"

#include <bit>
#include <cmath>

#include "pgw/parallel.hpp"
#include "pgw/rng.hpp"

namespace pgw {

namespace {

inline double zsign(std::uint64_t z, std::uint64_t b) { return (std::popcount(z & b) & 1) ? -1.0 : 1.0; }

double exponent_l1(const GibbsBackend& be, const GibbsParams& lam) {
  double s = std::abs(lam.lambda_c) * be.objective().pauli_l1();
  for (double v : lam.lambda_a) s += std::abs(v);
  return s;
}

}  // namespace

template <class S>
struct StochasticBackend::Kernel {
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

  static S phase_factor(const OffDiag& t) {
    if constexpr (std::is_same_v<S, double>) {
      return t.coeff;
    } else {
      return t.imaginary ? S(0.0, t.coeff) : S(t.coeff, 0.0);
    }
  }

  // out = (diag + lc * offdiag) v
  static void apply(const StochasticBackend& be, const Eigen::VectorXd& diag, double lc, const Vec& v,
                    Vec& out) {
    out = (diag.array().template cast<S>() * v.array()).matrix();
    if (lc == 0.0) return;
    const std::uint64_t d = static_cast<std::uint64_t>(v.size());
    for (const auto& t : be.offdiag_) {
      const S w = lc * phase_factor(t);
      for (std::uint64_t b = 0; b < d; ++b)
        out[static_cast<Eigen::Index>(b ^ t.x)] += (w * zsign(t.z, b)) * v[static_cast<Eigen::Index>(b)];
    }
  }

  // exp(t E) v with per-fragment renormalization
  static Vec exp_apply(const StochasticBackend& be, const GibbsParams& lam, double t, Vec v,
                       double* log_scale) {
    const Eigen::VectorXd diag = be.exponent_diagonal(lam);
    const int r = be.fragments(lam, t);
    const int kappa = be.taylor_degree(lam);
    const double h = t / r;
    const Eigen::VectorXd dh = h * diag;
    *log_scale = 0.0;
    Vec term, next;
    for (int f = 0; f < r; ++f) {
      Vec acc = v;
      term = v;
      for (int k = 1; k <= kappa; ++k) {
        apply(be, dh, h * lam.lambda_c, term, next);
        term = next / static_cast<double>(k);
        acc += term;
        if (term.template lpNorm<Eigen::Infinity>() <= 1e-17 * acc.template lpNorm<Eigen::Infinity>()) break;
      }
      const double nrm = acc.norm();
      if (!(nrm > 0.0) || !std::isfinite(nrm)) throw std::runtime_error("Taylor fragment lost the vector");
      v = acc / nrm;
      *log_scale += std::log(nrm);
    }
    return v;
  }

  static Vec probe(const StochasticBackend& be, std::uint64_t i) {
    Rng rng(derive_seed(be.cfg_.seed, i));
    Vec g(static_cast<Eigen::Index>(std::uint64_t{1} << be.n_));
    for (Eigen::Index b = 0; b < g.size(); ++b) g[b] = rng.normal();
    return g;
  }

  static double pauli_expect(const Vec& u, const PauliString& p) {
    const PauliMasks m(p);
    const std::complex<double> ph = Phase{m.y_phase}.value();
    std::complex<double> acc = 0.0;
    const std::uint64_t d = static_cast<std::uint64_t>(u.size());
    for (std::uint64_t b = 0; b < d; ++b)
      acc += std::conj(std::complex<double>(u[static_cast<Eigen::Index>(b ^ m.x)])) * m.zsign(b) *
             std::complex<double>(u[static_cast<Eigen::Index>(b)]);
    return (ph * acc).real();
  }

  static double quadratic(const StochasticBackend& be, const Vec& u, const Observable& o) {
    switch (o.kind) {
      case Observable::Kind::objective: {
        Vec cu;
        apply(be, be.objective_diag_, 1.0, u, cu);
        return std::real(std::complex<double>(u.dot(cu)));
      }
      case Observable::Kind::z_string: {
        const std::uint64_t zm = o.z.to_index();
        double acc = 0.0;
        for (Eigen::Index b = 0; b < u.size(); ++b)
          acc += std::norm(std::complex<double>(u[b])) * zsign(zm, static_cast<std::uint64_t>(b));
        return acc;
      }
      case Observable::Kind::op: {
        double acc = 0.0;
        for (const auto& t : o.op.terms()) acc += t.coeff * pauli_expect(u, t.pauli);
        return acc;
      }
    }
    return 0.0;
  }

  static ExpectationResult expectations(const StochasticBackend& be, const GibbsParams& lam,
                                        std::span<const Observable> obs, int probes) {
    const std::size_t L = static_cast<std::size_t>(probes);
    std::vector<double> ls(L), w(L);
    std::vector<std::vector<double>> v(L);
    parallel_for(L, be.cfg_.threads, [&](std::size_t i) {
      double s = 0.0;
      const Vec u = exp_apply(be, lam, 0.5, probe(be, i), &s);
      ls[i] = 2.0 * s;
      w[i] = u.squaredNorm();
      for (const auto& o : obs) v[i].push_back(quadratic(be, u, o));
    });
    double mx = ls[0];
    for (double x : ls) mx = std::max(mx, x);
    double W = 0.0;
    std::vector<double> V(obs.size(), 0.0);
    for (std::size_t i = 0; i < L; ++i) {
      const double f = std::exp(ls[i] - mx);
      w[i] *= f;
      W += w[i];
      for (std::size_t b = 0; b < obs.size(); ++b) {
        v[i][b] *= f;
        V[b] += v[i][b];
      }
    }
    ExpectationResult r;
    r.log_partition = mx + std::log(W / static_cast<double>(L));
    for (std::size_t b = 0; b < obs.size(); ++b) {
      r.values.push_back(V[b] / W);
      double err = 0.0;
      if (L > 1) {
        // jackknife over leave-one-out ratio estimates
        std::vector<double> loo(L);
        double mean = 0.0;
        for (std::size_t i = 0; i < L; ++i) {
          loo[i] = (V[b] - v[i][b]) / (W - w[i]);
          mean += loo[i];
        }
        mean /= static_cast<double>(L);
        for (double x : loo) err += (x - mean) * (x - mean);
        err = std::sqrt(err * static_cast<double>(L - 1) / static_cast<double>(L));
      }
      r.std_err.push_back(err);
    }
    return r;
  }
};

StochasticBackend::StochasticBackend(const Instance& inst, const ConstraintSet& s, StochasticConfig cfg)
    : GibbsBackend(inst, s), cfg_(cfg) {
  if (static_cast<int>(n_) > cfg_.max_qubits)
    throw BackendMismatch("stochastic backend cap is " + std::to_string(cfg_.max_qubits) + " qubits");
  if (cfg_.num_probes < 1 || cfg_.fragment_norm_cap <= 0.0 || cfg_.taylor_degree < 0)
    throw std::invalid_argument("invalid stochastic configuration");
  real_ = objective_.is_real_symmetric();
  const std::uint64_t d = std::uint64_t{1} << n_;
  objective_diag_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
  for (const auto& t : objective_.terms()) {
    const PauliMasks m(t.pauli);
    if (m.x == 0) {
      for (std::uint64_t b = 0; b < d; ++b) objective_diag_[static_cast<Eigen::Index>(b)] += t.coeff * zsign(m.z, b);
      continue;
    }
    const double sgn = (m.y_phase & 2) ? -1.0 : 1.0;
    offdiag_.push_back({m.x, m.z, sgn * t.coeff, (m.y_phase & 1) != 0});
  }
  for (const auto& z : constraints_.z_strings()) z_masks_.push_back(z.to_index());
}

Eigen::VectorXd StochasticBackend::exponent_diagonal(const GibbsParams& lam) const {
  Eigen::VectorXd d = lam.lambda_c * objective_diag_;
  for (std::size_t a = 0; a < z_masks_.size(); ++a) {
    if (lam.lambda_a[a] == 0.0) continue;
    for (Eigen::Index b = 0; b < d.size(); ++b)
      d[b] += lam.lambda_a[a] * zsign(z_masks_[a], static_cast<std::uint64_t>(b));
  }
  return d;
}

int StochasticBackend::fragments(const GibbsParams& lam, double t) const {
  return std::max(1, static_cast<int>(std::ceil(std::abs(t) * exponent_l1(*this, lam) / cfg_.fragment_norm_cap)));
}

int StochasticBackend::taylor_degree(const GibbsParams& lam) const {
  if (cfg_.taylor_degree > 0) return cfg_.taylor_degree;
  const double e = std::max(exponent_l1(*this, lam), 1e-300);
  return std::max(8, static_cast<int>(std::ceil(std::log2(e / cfg_.taylor_target))) + 8);
}

int StochasticBackend::max_accuracy_level() const {
  int lvl = 0;
  while ((cfg_.num_probes << (lvl + 1)) <= cfg_.max_probes) ++lvl;
  return lvl;
}

ExpectationResult StochasticBackend::expectations(const GibbsParams& lam, std::span<const Observable> obs,
                                                  int accuracy_level) const {
  check_params(lam);
  const int probes = cfg_.num_probes << std::clamp(accuracy_level, 0, max_accuracy_level());
  return real_ ? Kernel<double>::expectations(*this, lam, obs, probes)
               : Kernel<std::complex<double>>::expectations(*this, lam, obs, probes);
}

StochasticBackend::TraceEstimate StochasticBackend::trace_estimate(const GibbsParams& lam, int probes) const {
  check_params(lam);
  const std::size_t L = static_cast<std::size_t>(probes);
  std::vector<double> lw(L);
  parallel_for(L, cfg_.threads, [&](std::size_t i) {
    double s = 0.0;
    if (real_) {
      const auto u = Kernel<double>::exp_apply(*this, lam, 0.5, Kernel<double>::probe(*this, i), &s);
      lw[i] = 2.0 * s + std::log(u.squaredNorm());
    } else {
      using K = Kernel<std::complex<double>>;
      const auto u = K::exp_apply(*this, lam, 0.5, K::probe(*this, i), &s);
      lw[i] = 2.0 * s + std::log(u.squaredNorm());
    }
  });
  double mx = lw[0];
  for (double x : lw) mx = std::max(mx, x);
  double acc = 0.0;
  for (double x : lw) acc += std::exp(x - mx);
  TraceEstimate t;
  t.log_mean = mx + std::log(acc / static_cast<double>(L));
  for (double x : lw) t.relative.push_back(std::exp(x - t.log_mean));
  return t;
}

double StochasticBackend::log_partition(const GibbsParams& lam) const {
  return trace_estimate(lam, cfg_.num_probes).log_mean;
}

Eigen::VectorXcd StochasticBackend::apply_exp(const GibbsParams& lam, double t, const Eigen::VectorXcd& v,
                                              double* log_scale) const {
  check_params(lam);
  if (v.size() != static_cast<Eigen::Index>(std::uint64_t{1} << n_))
    throw std::invalid_argument("state vector length must be 2^n");
  return Kernel<std::complex<double>>::exp_apply(*this, lam, t, v, log_scale);
}

Eigen::VectorXcd StochasticBackend::apply_exp_half(const GibbsParams& lam, const Eigen::VectorXcd& v) const {
  double s = 0.0;
  const double nrm = v.norm();
  if (nrm == 0.0) return v;
  Eigen::VectorXcd u = apply_exp(lam, 0.5, v / nrm, &s);
  return u * (nrm * std::exp(s));
}

Eigen::VectorXcd StochasticBackend::exp_ket(const GibbsParams& lam, const ProductState& ket,
                                            double* log_scale) const {
  Eigen::VectorXcd k(static_cast<Eigen::Index>(std::uint64_t{1} << n_));
  // product state expansion, qubit 1 most significant
  for (Eigen::Index b = 0; b < k.size(); ++b) {
    std::complex<double> a = 1.0;
    for (std::size_t q = 0; q < n_; ++q) a *= ket[q][(static_cast<std::uint64_t>(b) >> (n_ - 1 - q)) & 1u];
    k[b] = a;
  }
  return apply_exp(lam, 1.0, k, log_scale);
}

std::complex<double> StochasticBackend::amplitude(const GibbsParams& lam, std::uint64_t bra,
                                                  const ProductState& ket) const {
  double s = 0.0;
  const Eigen::VectorXcd u = exp_ket(lam, ket, &s);
  return u[static_cast<Eigen::Index>(bra)] * std::exp(s);
}

std::vector<std::complex<double>> StochasticBackend::amplitudes(const GibbsParams& lam,
                                                                std::span<const std::uint64_t> bras,
                                                                const ProductState& ket) const {
  double s = 0.0;
  const Eigen::VectorXcd u = exp_ket(lam, ket, &s);
  std::vector<std::complex<double>> out;
  for (auto b : bras) out.push_back(u[static_cast<Eigen::Index>(b)]);
  return out;
}

}  // namespace pgw
