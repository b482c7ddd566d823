#include "pgw/sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pgw {

ExplicitSampler::ExplicitSampler(PauliOperator op) : op_(std::move(op)) {
  if (op_.empty()) throw std::invalid_argument("cannot sample from an empty operator");
  double acc = 0.0;
  for (const auto& t : op_.terms()) {
    acc += std::abs(t.coeff);
    cdf_.push_back(acc);
  }
}

Draw ExplicitSampler::draw(Rng& rng) const {
  const double u = rng.uniform() * cdf_.back();
  auto i = static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
  i = std::min(i, cdf_.size() - 1);
  const auto& t = op_[i];
  return {t.pauli, t.coeff < 0 ? -1 : 1};
}

KroneckerSampler::KroneckerSampler(KroneckerInstance ki) : ki_(std::move(ki)) {
  for (const auto& f : ki_.factor_ops) factor_samplers_.emplace_back(f);
}

Draw KroneckerSampler::draw(Rng& rng) const {
  PauliString p(n());
  int sign = 1;
  std::size_t offset = 0;
  for (auto f : ki_.sequence()) {
    const Draw d = factor_samplers_[f].draw(rng);
    for (std::size_t j = 0; j < d.pauli.n(); ++j) p.set_site(offset + j, d.pauli.site(j));
    sign *= d.sign;
    offset += d.pauli.n();
  }
  return {std::move(p), sign};
}

std::vector<std::size_t> KroneckerSampler::draw_term_indices(Rng& rng) const {
  std::vector<std::size_t> idx;
  for (auto f : ki_.sequence()) {
    const Draw d = factor_samplers_[f].draw(rng);
    const auto& terms = ki_.factor_ops[f].terms();
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].pauli == d.pauli) idx.push_back(i);
  }
  return idx;
}

std::unique_ptr<TermSampler> kron_sampler(const KroneckerSpec& spec) {
  return std::make_unique<KroneckerSampler>(gen_kronecker(spec));
}

std::uint64_t sample_count(int k_qubits, double l1, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  return static_cast<std::uint64_t>(std::floor(2.0 * k_qubits * l1 * l1 / (eps * eps) / 1.5));
}

PauliOperator sparsify(const TermSampler& s, std::uint64_t m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("sample count must be >= 1");
  Rng rng(seed);
  // ordered map keeps the merged term order independent of hash layout
  std::map<PauliString, long long> counts;
  for (std::uint64_t i = 0; i < m; ++i) {
    Draw d = s.draw(rng);
    counts[d.pauli] += d.sign;
  }
  PauliOperator op(s.n());
  const double w = s.l1() / static_cast<double>(m);
  for (const auto& [p, c] : counts)
    if (c != 0) op.add(p, static_cast<double>(c) * w);
  return op;
}

PauliOperator renormalize_sparsified(const PauliOperator& op) {
  if (!(op.pauli_l1() > 0.0)) throw std::invalid_argument("cannot renormalize a zero operator");
  PauliOperator r(op.n());
  const double l1 = op.pauli_l1();
  for (const auto& t : op.terms()) r.add(t.pauli, t.coeff / l1, t.group);
  return r;
}

}  // namespace pgw
