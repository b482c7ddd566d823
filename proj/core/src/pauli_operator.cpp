#include "pgw/pauli_operator.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace pgw {

void PauliOperator::add(const PauliString& p, double c, std::optional<int> group) {
  if (p.n() != n_) throw std::invalid_argument("term qubit count does not match operator");
  if (c == 0.0) return;
  if (auto it = index_.find(p); it != index_.end()) {
    Term& t = terms_[it->second];
    l1_ -= std::abs(t.coeff);
    t.coeff += c;
    l1_ += std::abs(t.coeff);
    if (group && !t.group) t.group = group;
    if (t.coeff == 0.0) {
      const std::size_t i = it->second;
      index_.erase(it);
      terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& [k, v] : index_)
        if (v > i) --v;
      recompute_l1();
    }
  } else {
    index_.emplace(p, terms_.size());
    terms_.push_back({p, c, group});
    l1_ += std::abs(c);
  }
}

double PauliOperator::coeff(const PauliString& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? 0.0 : terms_[it->second].coeff;
}

bool PauliOperator::is_real_symmetric() const {
  for (const auto& t : terms_)
    if (!t.pauli.is_real()) return false;
  return true;
}

bool PauliOperator::has_groups() const {
  for (const auto& t : terms_)
    if (t.group) return true;
  return false;
}

PauliOperator PauliOperator::scaled(double s) const {
  PauliOperator r(n_);
  if (s == 0.0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= s;
  r.index_ = index_;
  r.recompute_l1();
  if (norm_override_) r.norm_override_ = *norm_override_ * std::abs(s);
  return r;
}

void PauliOperator::prune(double tol) {
  std::vector<Term> kept;
  for (auto& t : terms_)
    if (std::abs(t.coeff) > tol) kept.push_back(std::move(t));
  terms_ = std::move(kept);
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i].pauli, i);
  recompute_l1();
}

void PauliOperator::recompute_l1() {
  l1_ = 0.0;
  for (const auto& t : terms_) l1_ += std::abs(t.coeff);
}

bool operator==(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.norm_override_ != b.norm_override_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (!(s.pauli == t.pauli) || s.coeff != t.coeff || s.group != t.group) return false;
  }
  return true;
}

double pauli_l1(const PauliOperator& op) { return op.pauli_l1(); }

std::vector<std::vector<std::size_t>> term_blocks(const PauliOperator& op) {
  std::vector<std::vector<std::size_t>> blocks;
  std::map<int, std::size_t> by_group;
  for (std::size_t i = 0; i < op.size(); ++i) {
    const auto& g = op[i].group;
    if (!g) {
      blocks.push_back({i});
      continue;
    }
    auto [it, fresh] = by_group.emplace(*g, blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

bool blocks_commute(const std::vector<Term>& a, const std::vector<Term>& b, double tol) {
  // [A,B] = sum over anticommuting pairs of 2 c d P Q
  std::unordered_map<PauliString, std::complex<double>, PauliHash> acc;
  double scale = 0.0;
  for (const auto& s : a)
    for (const auto& t : b) {
      if (commutes(s.pauli, t.pauli)) continue;
      auto prod = pauli_mul(s.pauli, t.pauli);
      const double w = 2.0 * s.coeff * t.coeff;
      acc[prod.pauli] += w * prod.phase.value();
      scale = std::max(scale, std::abs(w));
    }
  for (const auto& [p, v] : acc)
    if (std::abs(v) > tol * std::max(1.0, scale)) return false;
  return true;
}

CommutationReport commutation_report(const PauliOperator& op) {
  CommutationReport r;
  const auto& t = op.terms();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!commutes(t[i].pauli, t[j].pauli)) ++r.anticommuting_pair_count;
  r.fully_commuting = r.anticommuting_pair_count == 0;

  const auto blocks = term_blocks(op);
  std::vector<std::vector<Term>> bt;
  for (const auto& b : blocks) {
    bt.emplace_back();
    for (auto i : b) bt.back().push_back(t[i]);
  }
  for (std::size_t i = 0; i < bt.size(); ++i)
    for (std::size_t j = i + 1; j < bt.size(); ++j)
      if (!blocks_commute(bt[i], bt[j])) ++r.anticommuting_block_pairs;
  r.block_commuting = r.anticommuting_block_pairs == 0;
  return r;
}

}  // namespace pgw
