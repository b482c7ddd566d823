#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "pgw/pauli_operator.hpp"

namespace pgw {

// Deduplicated, nonzero Z-strings. Signs are not stored.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t size() const { return z_.size(); }
  bool empty() const { return z_.empty(); }
  const std::vector<BitVec>& z_strings() const { return z_; }
  const BitVec& operator[](std::size_t i) const { return z_[i]; }

  // Returns false if z was already present. Throws on zero or wrong length.
  bool add(const BitVec& z);
  bool contains(const BitVec& z) const { return seen_.count(z) != 0; }
  std::optional<std::size_t> find(const BitVec& z) const;

  // Sorted by serialized string.
  ConstraintSet sorted() const;

  // All nonzero Z-strings on n qubits (2^n - 1 of them).
  static ConstraintSet all_z_strings(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<BitVec> z_;
  std::unordered_set<BitVec, BitVecHash> seen_;
};

struct DiagonalGroup {
  std::size_t n = 0;
  std::vector<BitVec> generators;  // GF(2)-independent, reduced row echelon

  std::size_t rank() const { return generators.size(); }
  // 2^rank; saturates at UINT64_MAX for rank >= 64.
  std::uint64_t order() const;
  bool trivial() const { return generators.empty(); }
  // GF(2) membership test.
  bool contains(const BitVec& z) const;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

DiagonalGroup diagonal_group(const PauliOperator& op);

// All 2^k - 1 traceless members; throws CapExceeded if that count exceeds cap.
ConstraintSet enumerate_traceless(const DiagonalGroup& g,
                                  std::uint64_t cap = kDefaultEnumerationCap);

struct KrylovResult {
  ConstraintSet constraints;
  bool truncated = false;
  std::uint64_t combinations_visited = 0;
};

// Diagonal products of at most k distinct support Paulis. The combination
// budget `cap` bounds the search; hitting it sets `truncated`.
KrylovResult krylov_constraints(const PauliOperator& op, int k,
                                std::uint64_t cap = std::uint64_t{1} << 26);

// Reduced row echelon form over GF(2); returns the nonzero rows.
std::vector<BitVec> gf2_rref(std::vector<BitVec> rows);

}  // namespace pgw
