#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "pgw/pauli.hpp"

namespace pgw {

struct Term {
  PauliString pauli;
  double coeff = 0.0;
  std::optional<int> group;  // terms sharing a group form one exponent block
};

// Real linear combination of Pauli strings. Keys are unique and no stored
// coefficient is zero.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  // Adds c*P, merging with an existing key. A merged coefficient that becomes
  // exactly zero removes the term.
  void add(const PauliString& p, double c, std::optional<int> group = std::nullopt);
  void add(std::string_view label, double c) { add(PauliString::from_label(label), c); }

  double coeff(const PauliString& p) const;
  bool contains(const PauliString& p) const { return index_.count(p) != 0; }

  double pauli_l1() const { return l1_; }
  double norm_upper_bound() const { return norm_override_ ? *norm_override_ : l1_; }
  std::optional<double> norm_override() const { return norm_override_; }
  void set_norm_upper_bound(std::optional<double> v) { norm_override_ = v; }

  bool is_real_symmetric() const;
  bool has_groups() const;

  PauliOperator scaled(double s) const;
  // Drops terms with |c| <= tol.
  void prune(double tol);

  friend bool operator==(const PauliOperator& a, const PauliOperator& b);

 private:
  void recompute_l1();

  std::size_t n_ = 0;
  std::vector<Term> terms_;
  std::unordered_map<PauliString, std::size_t, PauliHash> index_;
  double l1_ = 0.0;
  std::optional<double> norm_override_;
};

double pauli_l1(const PauliOperator& op);

struct CommutationReport {
  bool fully_commuting = true;
  long anticommuting_pair_count = 0;
  // Terms sharing a group id (or ungrouped singletons) treated as blocks.
  bool block_commuting = true;
  long anticommuting_block_pairs = 0;
};

CommutationReport commutation_report(const PauliOperator& op);

// Exponent blocks: indices of terms grouped by group id; ungrouped terms are
// singleton blocks. Ordered by first term index.
std::vector<std::vector<std::size_t>> term_blocks(const PauliOperator& op);

// [A,B] == 0 checked symbolically on the Pauli expansion.
bool blocks_commute(const std::vector<Term>& a, const std::vector<Term>& b, double tol = 1e-12);

}  // namespace pgw
