#include "pgw/pauli.hpp"

#include <stdexcept>

namespace pgw {

namespace {

void require_same_n(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw std::invalid_argument("Pauli dimension mismatch");
}

}  // namespace

PauliString::PauliString(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw std::invalid_argument("x/z bit lengths differ");
}

PauliString PauliString::from_label(std::string_view label) {
  PauliString p(label.size());
  for (std::size_t q = 0; q < label.size(); ++q) p.set_site(q, label[q]);
  return p;
}

std::string PauliString::label() const {
  std::string s(n(), 'I');
  for (std::size_t q = 0; q < n(); ++q) s[q] = site(q);
  return s;
}

char PauliString::site(std::size_t q) const {
  static constexpr char tab[4] = {'I', 'Z', 'X', 'Y'};
  return tab[(x_.get(q) ? 2 : 0) + (z_.get(q) ? 1 : 0)];
}

void PauliString::set_site(std::size_t q, char op) {
  switch (op) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true); z_.set(q, false); break;
    case 'Y': x_.set(q, true); z_.set(q, true); break;
    case 'Z': x_.set(q, false); z_.set(q, true); break;
    default: throw std::invalid_argument(std::string("bad Pauli letter '") + op + "'");
  }
}

int PauliString::support_lo() const { return (x_ | z_).first(); }
int PauliString::support_hi() const { return (x_ | z_).last(); }

std::complex<double> Phase::value() const {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

SignedPauli pauli_mul(const PauliString& p, const PauliString& q) {
  require_same_n(p, q);
  // per-site classes; cyclic products XY=iZ, YZ=iX, ZX=iY carry +i
  const BitVec x1 = p.x() & ~p.z(), z1 = p.z() & ~p.x(), y1 = p.x() & p.z();
  const BitVec x2 = q.x() & ~q.z(), z2 = q.z() & ~q.x(), y2 = q.x() & q.z();
  const int plus = ((x1 & y2) | (y1 & z2) | (z1 & x2)).popcount();
  const int minus = ((y1 & x2) | (z1 & y2) | (x1 & z2)).popcount();
  return {PauliString(p.x() ^ q.x(), p.z() ^ q.z()), Phase{((plus - minus) % 4 + 4) & 3}};
}

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_n(p, q);
  return ((BitVec::and_popcount(p.x(), q.z()) + BitVec::and_popcount(p.z(), q.x())) & 1) == 0;
}

PauliMasks::PauliMasks(const PauliString& p)
    : x(p.x().to_index()), z(p.z().to_index()), y_phase(p.y_count() & 3) {}

BasisImage apply_to_basis(const PauliString& p, std::uint64_t b) {
  if (p.n() > 63) throw std::out_of_range("apply_to_basis needs n <= 63");
  if (p.n() < 64 && (b >> p.n()) != 0) throw std::out_of_range("basis index out of range");
  const PauliMasks m(p);
  // X^x Z^z |b> = (-1)^{z.b} |b xor x>, times the i^{|x&z|} convention factor
  const int sign = std::popcount(m.z & b) & 1;
  return {b ^ m.x, Phase{(m.y_phase + 2 * sign) & 3}};
}

}  // namespace pgw
