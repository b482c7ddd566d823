#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "pgw/bitvec.hpp"

namespace pgw {

// P_(x,z) = prod_j i^{x_j z_j} X_j^{x_j} Z_j^{z_j}; Hermitian, squares to I.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}
  PauliString(BitVec x, BitVec z);

  static PauliString identity(std::size_t n) { return PauliString(n); }
  // "XIZY" style label, qubit 1 first.
  static PauliString from_label(std::string_view label);
  std::string label() const;

  std::size_t n() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }

  char site(std::size_t q) const;
  void set_site(std::size_t q, char op);

  int weight() const { return (x_ | z_).popcount(); }
  int y_count() const { return BitVec::and_popcount(x_, z_); }
  bool is_identity() const { return x_.none() && z_.none(); }
  bool is_diagonal() const { return x_.none(); }
  // Real matrix iff the number of Y sites is even.
  bool is_real() const { return y_count() % 2 == 0; }

  // First and last non-identity qubit, or -1 for the identity.
  int support_lo() const;
  int support_hi() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (!(a.x_ == b.x_)) return a.x_ < b.x_;
    return a.z_ < b.z_;
  }
  std::size_t hash() const { return x_.hash() * 31 + z_.hash(); }

 private:
  BitVec x_, z_;
};

struct PauliHash {
  std::size_t operator()(const PauliString& p) const { return p.hash(); }
};

// Phase i^k, k in {0,1,2,3}.
struct Phase {
  int k = 0;
  std::complex<double> value() const;
  Phase operator*(Phase o) const { return Phase{(k + o.k) & 3}; }
  friend bool operator==(Phase, Phase) = default;
};

struct SignedPauli {
  PauliString pauli;
  Phase phase;
};

SignedPauli pauli_mul(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);

struct BasisImage {
  std::uint64_t index;
  Phase phase;
};

// P|b> = phase |b'> with b' = b xor x. Requires n <= 63.
BasisImage apply_to_basis(const PauliString& p, std::uint64_t b);

// Index-form masks for hot loops over basis states (n <= 63).
struct PauliMasks {
  std::uint64_t x = 0, z = 0;
  int y_phase = 0;  // i^{|x&z|} exponent mod 4

  explicit PauliMasks(const PauliString& p);
  PauliMasks() = default;

  // sign (+1/-1) of (-1)^{z.b}; the full phase is i^{y_phase} times this.
  double zsign(std::uint64_t b) const {
    return (std::popcount(z & b) & 1) ? -1.0 : 1.0;
  }
};

}  // namespace pgw
