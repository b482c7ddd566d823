#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dense_oracle.hpp"
#include "pgw/pauli_operator.hpp"
#include "pgw/rng.hpp"

namespace testing_support {

inline std::vector<std::pair<std::string, double>> terms_of(const pgw::PauliOperator& op) {
  std::vector<std::pair<std::string, double>> t;
  for (const auto& term : op.terms()) t.emplace_back(term.pauli.label(), term.coeff);
  return t;
}

inline oracle::Mat oracle_matrix(const pgw::PauliOperator& op) { return oracle::op(terms_of(op)); }

inline std::string random_label(pgw::Rng& rng, std::size_t n) {
  static const char letters[] = "IXYZ";
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(letters[rng.below(4)]);
  return s;
}

}  // namespace testing_support
