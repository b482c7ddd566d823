#include "pgw/gibbs.hpp"

#include <cmath>

#include "pgw/commuting1d_backend.hpp"
#include "pgw/dense_backend.hpp"
#include "pgw/stochastic_backend.hpp"

namespace pgw {

std::string to_string(BackendKind k) {
  switch (k) {
    case BackendKind::automatic: return "auto";
    case BackendKind::dense: return "dense";
    case BackendKind::stochastic: return "stochastic";
    case BackendKind::commuting1d: return "commuting1d";
  }
  return "?";
}

BackendKind backend_kind_from_string(const std::string& s) {
  if (s == "auto") return BackendKind::automatic;
  if (s == "dense") return BackendKind::dense;
  if (s == "stochastic") return BackendKind::stochastic;
  if (s == "commuting1d") return BackendKind::commuting1d;
  throw std::invalid_argument("unknown backend '" + s + "'");
}

double GibbsParams::l1() const {
  double s = std::abs(lambda_c);
  for (double v : lambda_a) s += std::abs(v);
  return s;
}

GibbsParams GibbsParams::scaled(double t) const {
  GibbsParams r = *this;
  r.lambda_c *= t;
  for (double& v : r.lambda_a) v *= t;
  return r;
}

double ExpectationResult::max_std_err() const {
  double m = 0.0;
  for (double e : std_err) m = std::max(m, e);
  return m;
}

ProductState basis_product_state(std::uint64_t b, std::size_t n) {
  ProductState s(n);
  for (std::size_t q = 0; q < n; ++q) {
    const bool one = (b >> (n - 1 - q)) & 1u;
    s[q] = {one ? 0.0 : 1.0, one ? 1.0 : 0.0};
  }
  return s;
}

GibbsBackend::GibbsBackend(const Instance& inst, const ConstraintSet& s)
    : inst_(inst), constraints_(s), n_(inst.n()) {
  if (s.n() != inst.n() && !s.empty())
    throw std::invalid_argument("constraint set qubit count differs from instance");
  if (constraints_.n() != n_) constraints_ = ConstraintSet(n_);
  norm_ = inst.op.norm_upper_bound();
  if (!(norm_ > 0.0)) throw std::invalid_argument("objective has zero norm bound");
  objective_ = PauliOperator(n_);
  for (const auto& t : inst.op.terms()) objective_.add(t.pauli, t.coeff / norm_, t.group);
}

void GibbsBackend::check_params(const GibbsParams& lam) const {
  if (lam.lambda_a.size() != constraints_.size())
    throw std::invalid_argument("GibbsParams size does not match the constraint set");
  if (!std::isfinite(lam.l1())) throw std::invalid_argument("non-finite GibbsParams");
}

double GibbsBackend::purity(const GibbsParams& lam) const {
  return std::exp(log_partition(lam.scaled(2.0)) - 2.0 * log_partition(lam));
}

std::vector<std::complex<double>> GibbsBackend::amplitudes(const GibbsParams& lam,
                                                           std::span<const std::uint64_t> bras,
                                                           const ProductState& ket) const {
  std::vector<std::complex<double>> out;
  out.reserve(bras.size());
  for (auto b : bras) out.push_back(amplitude(lam, b, ket));
  return out;
}

BackendKind select_backend(const Instance& inst, const BackendConfig& cfg) {
  if (cfg.kind != BackendKind::automatic) return cfg.kind;
  if (inst.flags.commuting_1d) return BackendKind::commuting1d;
  if (static_cast<int>(inst.n()) <= cfg.dense_max_n) return BackendKind::dense;
  if (static_cast<int>(inst.n()) <= cfg.stochastic.max_qubits) return BackendKind::stochastic;
  throw BackendMismatch("no backend handles n = " + std::to_string(inst.n()) +
                        " without the commuting_1d structure");
}

std::unique_ptr<GibbsBackend> make_backend(const Instance& inst, const ConstraintSet& s,
                                           const BackendConfig& cfg) {
  switch (select_backend(inst, cfg)) {
    case BackendKind::dense: return std::make_unique<DenseBackend>(inst, s);
    case BackendKind::stochastic: return std::make_unique<StochasticBackend>(inst, s, cfg.stochastic);
    case BackendKind::commuting1d:
      return std::make_unique<Commuting1dBackend>(inst, s, cfg.commuting1d);
    case BackendKind::automatic: break;
  }
  throw std::logic_error("unreachable backend kind");
}

}  // namespace pgw
