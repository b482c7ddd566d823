#include "pgw/dense_backend.hpp"

#include <cmath>

#include "pgw/dense.hpp"

namespace pgw {

namespace {

template <class Mat>
struct Spectrum {
  Mat vectors;
  Eigen::VectorXd values;
  double shift = 0.0;  // max eigenvalue
};

template <class Mat>
Spectrum<Mat> decompose(const Mat& c, const std::vector<Eigen::VectorXd>& zd, const GibbsParams& lam) {
  Mat e = lam.lambda_c * c;
  for (std::size_t a = 0; a < zd.size(); ++a)
    if (lam.lambda_a[a] != 0.0) e.diagonal() += (lam.lambda_a[a] * zd[a]).template cast<typename Mat::Scalar>();
  Eigen::SelfAdjointEigenSolver<Mat> es(e);
  Spectrum<Mat> s{es.eigenvectors(), es.eigenvalues(), es.eigenvalues().maxCoeff()};
  return s;
}

template <class Mat>
Mat density_from(const Spectrum<Mat>& sp, double* log_z) {
  const Eigen::VectorXd p = (sp.values.array() - sp.shift).exp();
  const double z = p.sum();
  if (log_z) *log_z = sp.shift + std::log(z);
  return sp.vectors * (p / z).asDiagonal() * sp.vectors.adjoint();
}

template <class Mat>
double pauli_trace(const Mat& sigma, const PauliString& p) {
  // tr(P sigma) = sum_c phase(c) sigma(c, c xor x)
  const PauliMasks m(p);
  const std::complex<double> ph = Phase{m.y_phase}.value();
  std::complex<double> acc = 0.0;
  for (Eigen::Index c = 0; c < sigma.rows(); ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    acc += m.zsign(uc) * std::complex<double>(sigma(c, static_cast<Eigen::Index>(uc ^ m.x)));
  }
  return (ph * acc).real();
}

template <class Mat>
double op_trace(const Mat& sigma, const PauliOperator& op) {
  double v = 0.0;
  for (const auto& t : op.terms()) v += t.coeff * pauli_trace(sigma, t.pauli);
  return v;
}

template <class Mat>
ExpectationResult evaluate(const Mat& c, const std::vector<Eigen::VectorXd>& zd, const GibbsParams& lam, std::span<const Observable> obs) {
  ExpectationResult r;
  const auto sigma = density_from(decompose(c, zd, lam), &r.log_partition);
  for (const auto& o : obs) {
    double v = 0.0;
    switch (o.kind) {
      case Observable::Kind::objective:
        v = std::real((c.array() * sigma.transpose().array()).sum());
        break;
      case Observable::Kind::z_string:
        v = std::real((sigma.diagonal().array() *
                       z_diagonal(o.z).array().template cast<typename Mat::Scalar>()).sum());
        break;
      case Observable::Kind::op:
        v = op_trace(sigma, o.op);
        break;
    }
    r.values.push_back(v);
    r.std_err.push_back(0.0);
  }
  return r;
}

template <class Mat>
Eigen::VectorXcd apply_exp_impl(const Spectrum<Mat>& sp, const Eigen::VectorXcd& v, double* log_scale) {
  const Eigen::VectorXd p = (sp.values.array() - sp.shift).exp();
  const Eigen::MatrixXcd vecs = sp.vectors.template cast<std::complex<double>>();
  *log_scale = sp.shift;
  return vecs * (p.cast<std::complex<double>>().asDiagonal() * (vecs.adjoint() * v));
}

}  // namespace

Eigen::VectorXcd product_state_vector(const ProductState& s) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (const auto& q : s) {
    Eigen::VectorXcd w(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      w[2 * i] = v[i] * q[0];
      w[2 * i + 1] = v[i] * q[1];
    }
    v = std::move(w);
  }
  return v;
}

DenseBackend::DenseBackend(const Instance& inst, const ConstraintSet& s) : GibbsBackend(inst, s) {
  if (n_ > 14) throw BackendMismatch("dense backend refused for n > 14");
  real_ = objective_.is_real_symmetric();
  if (real_)
    c_real_ = to_dense_real(objective_);
  else
    c_complex_ = to_dense(objective_);
  for (const auto& z : constraints_.z_strings()) z_diag_.push_back(z_diagonal(z));
}

ExpectationResult DenseBackend::expectations(const GibbsParams& lam, std::span<const Observable> obs,
                                             int) const {
  check_params(lam);
  return real_ ? evaluate(c_real_, z_diag_, lam, obs)
               : evaluate(c_complex_, z_diag_, lam, obs);
}

double DenseBackend::log_partition(const GibbsParams& lam) const {
  check_params(lam);
  auto lz = [](const Eigen::VectorXd& w) {
    const double m = w.maxCoeff();
    return m + std::log((w.array() - m).exp().sum());
  };
  auto eig = [&](const auto& c) {
    auto e = (lam.lambda_c * c).eval();
    for (std::size_t a = 0; a < z_diag_.size(); ++a)
      e.diagonal() += (lam.lambda_a[a] * z_diag_[a]).template cast<typename decltype(e)::Scalar>();
    Eigen::SelfAdjointEigenSolver<decltype(e)> es(e, Eigen::EigenvaluesOnly);
    return lz(es.eigenvalues());
  };
  return real_ ? eig(c_real_) : eig(c_complex_);
}

Eigen::MatrixXcd DenseBackend::density(const GibbsParams& lam) const {
  check_params(lam);
  if (real_) return density_from(decompose(c_real_, z_diag_, lam), nullptr).cast<std::complex<double>>();
  return density_from(decompose(c_complex_, z_diag_, lam), nullptr);
}

Eigen::VectorXcd DenseBackend::apply_exp(const GibbsParams& lam, const Eigen::VectorXcd& v) const {
  check_params(lam);
  double ls = 0.0;
  Eigen::VectorXcd r = real_ ? apply_exp_impl(decompose(c_real_, z_diag_, lam), v, &ls)
                             : apply_exp_impl(decompose(c_complex_, z_diag_, lam), v, &ls);
  return r * std::exp(ls);
}

std::complex<double> DenseBackend::amplitude(const GibbsParams& lam, std::uint64_t bra,
                                             const ProductState& ket) const {
  return apply_exp(lam, product_state_vector(ket))[static_cast<Eigen::Index>(bra)];
}

std::vector<std::complex<double>> DenseBackend::amplitudes(const GibbsParams& lam,
                                                           std::span<const std::uint64_t> bras,
                                                           const ProductState& ket) const {
  check_params(lam);
  double ls = 0.0;
  const Eigen::VectorXcd k = product_state_vector(ket);
  const Eigen::VectorXcd r = real_ ? apply_exp_impl(decompose(c_real_, z_diag_, lam), k, &ls)
                                   : apply_exp_impl(decompose(c_complex_, z_diag_, lam), k, &ls);
  std::vector<std::complex<double>> out;
  for (auto b : bras) out.push_back(r[static_cast<Eigen::Index>(b)]);
  return out;
}

}  // namespace pgw
