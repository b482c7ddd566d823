#include "pgw/bitvec.hpp"

#include <stdexcept>

namespace pgw {

BitVec BitVec::from_string(std::string_view s) {
  BitVec b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      b.set(i);
    else if (s[i] != '0')
      throw std::invalid_argument("bit string must contain only 0/1: " + std::string(s));
  }
  return b;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVec BitVec::operator~() const {
  BitVec r(*this);
  for (auto& w : r.words_) w = ~w;
  if (n_ % 64) r.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return r;
}

int BitVec::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
  return -1;
}

int BitVec::last() const {
  for (std::size_t k = words_.size(); k-- > 0;)
    if (words_[k]) return static_cast<int>(k * 64 + 63 - std::countl_zero(words_[k]));
  return -1;
}

std::uint64_t BitVec::to_index() const {
  if (n_ > 63) throw std::out_of_range("basis index needs n <= 63");
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) b |= std::uint64_t{1} << (n_ - 1 - i);
  return b;
}

BitVec BitVec::from_index(std::uint64_t b, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((b >> (n - 1 - i)) & 1u) v.set(i);
  return v;
}

bool operator<(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  // lexicographic in string order = bit 0 first; compare reversed bits word-wise
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    if (a.words_[k] == b.words_[k]) continue;
    const std::uint64_t d = a.words_[k] ^ b.words_[k];
    const int low = std::countr_zero(d);
    return ((b.words_[k] >> low) & 1u) != 0;
  }
  return false;
}

}  // namespace pgw
