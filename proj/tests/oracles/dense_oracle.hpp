#pragma once

// Reference matrices built from 2x2 Kronecker products, independent of the
// bit-mask Pauli code under test.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat single(char c) {
  Mat m(2, 2);
  const cd i(0, 1);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

// Leftmost letter acts on the most significant bit.
inline Mat pauli(const std::string& label) {
  Mat r = Mat::Identity(1, 1);
  for (char c : label) r = kron(r, single(c));
  return r;
}

inline Mat op(const std::vector<std::pair<std::string, double>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty operator");
  const auto d = Eigen::Index{1} << terms[0].first.size();
  Mat r = Mat::Zero(d, d);
  for (const auto& [l, c] : terms) r += c * pauli(l);
  return r;
}

inline std::string z_label(const std::string& bits) {
  std::string s;
  for (char b : bits) s.push_back(b == '1' ? 'Z' : 'I');
  return s;
}

// exp(h) / tr exp(h) for Hermitian h.
inline Mat gibbs(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  Eigen::VectorXd w = (ev.array() - top).exp();
  w /= w.sum();
  return es.eigenvectors() * w.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

inline double log_partition(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  return top + std::log((ev.array() - top).exp().sum());
}

inline Mat expm_hermitian(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  return es.eigenvectors() * es.eigenvalues().array().exp().matrix().cast<cd>().asDiagonal() *
         es.eigenvectors().adjoint();
}

inline double expect(const Mat& rho, const Mat& o) { return (rho * o).trace().real(); }

inline double lambda_max(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace oracle
