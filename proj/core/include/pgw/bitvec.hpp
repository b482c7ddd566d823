#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pgw {

// Fixed-length bit vector. Position 0 is qubit 1, the leftmost character of
// the serialized form.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVec from_string(std::string_view s);
  std::string to_string() const;

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  int popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  BitVec operator~() const;

  // popcount(a & b) without materializing the intersection
  static int and_popcount(const BitVec& a, const BitVec& b) {
    int c = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      c += std::popcount(a.words_[k] & b.words_[k]);
    return c;
  }

  // Index of the lowest / highest set position, or -1.
  int first() const;
  int last() const;

  // Basis-index image: qubit 1 is the most significant bit. Requires n <= 63.
  std::uint64_t to_index() const;
  static BitVec from_index(std::uint64_t b, std::size_t n);

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  // Lexicographic on the serialized string.
  friend bool operator<(const BitVec& a, const BitVec& b);

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace pgw
