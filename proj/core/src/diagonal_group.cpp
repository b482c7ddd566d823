#include "pgw/diagonal_group.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace pgw {

bool ConstraintSet::add(const BitVec& z) {
  if (z.size() != n_) throw std::invalid_argument("constraint length does not match n");
  if (z.none()) throw std::invalid_argument("identity is not a constraint");
  if (!seen_.insert(z).second) return false;
  z_.push_back(z);
  return true;
}

std::optional<std::size_t> ConstraintSet::find(const BitVec& z) const {
  if (!contains(z)) return std::nullopt;
  for (std::size_t i = 0; i < z_.size(); ++i)
    if (z_[i] == z) return i;
  return std::nullopt;
}

ConstraintSet ConstraintSet::sorted() const {
  auto v = z_;
  std::sort(v.begin(), v.end());
  ConstraintSet r(n_);
  for (const auto& z : v) r.add(z);
  return r;
}

ConstraintSet ConstraintSet::all_z_strings(std::size_t n) {
  if (n > 24) throw CapExceeded("all Z-strings requested for n > 24");
  ConstraintSet s(n);
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) s.add(BitVec::from_index(b, n));
  return s;
}

std::uint64_t DiagonalGroup::order() const {
  return rank() >= 64 ? UINT64_MAX : std::uint64_t{1} << rank();
}

std::vector<BitVec> gf2_rref(std::vector<BitVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool DiagonalGroup::contains(const BitVec& z) const {
  BitVec v = z;
  // generators are in RREF: eliminate on each pivot
  for (const auto& g : generators) {
    const int piv = g.first();
    if (v.get(static_cast<std::size_t>(piv))) v ^= g;
  }
  return v.none();
}

DiagonalGroup diagonal_group(const PauliOperator& op) {
  const std::size_t n = op.n();
  std::vector<BitVec> xs, zs;
  for (const auto& t : op.terms()) {
    xs.push_back(t.pauli.x());
    zs.push_back(t.pauli.z());
  }
  // eliminate on x columns; rows left with x = 0 span the group's Z part
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < xs.size(); ++c) {
    std::size_t p = r;
    while (p < xs.size() && !xs[p].get(c)) ++p;
    if (p == xs.size()) continue;
    std::swap(xs[r], xs[p]);
    std::swap(zs[r], zs[p]);
    for (std::size_t i = r + 1; i < xs.size(); ++i)
      if (xs[i].get(c)) {
        xs[i] ^= xs[r];
        zs[i] ^= zs[r];
      }
    ++r;
  }
  std::vector<BitVec> diag(zs.begin() + static_cast<std::ptrdiff_t>(r), zs.end());
  return DiagonalGroup{n, gf2_rref(std::move(diag))};
}

ConstraintSet enumerate_traceless(const DiagonalGroup& g, std::uint64_t cap) {
  if (g.rank() >= 64 || g.order() - 1 > cap)
    throw CapExceeded("diagonal group has " + std::to_string(g.rank()) +
                      " generators; enumeration exceeds cap");
  ConstraintSet s(g.n);
  BitVec cur(g.n);
  // Gray code: step t flips generator ctz(t)
  for (std::uint64_t t = 1; t < g.order(); ++t) {
    cur ^= g.generators[static_cast<std::size_t>(std::countr_zero(t))];
    s.add(cur);
  }
  return s;
}

KrylovResult krylov_constraints(const PauliOperator& op, int k, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("Krylov order must be >= 1");
  KrylovResult res;
  std::vector<BitVec> found;
  std::unordered_set<BitVec, BitVecHash> seen;
  auto record = [&](const BitVec& z) {
    if (z.any() && seen.insert(z).second) found.push_back(z);
  };

  const auto& terms = op.terms();
  std::unordered_map<BitVec, std::vector<std::size_t>, BitVecHash> by_x;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    by_x[terms[i].pauli.x()].push_back(i);
    if (terms[i].pauli.is_diagonal()) record(terms[i].pauli.z());
  }

  // Choose depth indices in increasing order, then close the product with one
  // more term whose x-part cancels the accumulated x.
  std::function<void(std::size_t, int, const BitVec&, const BitVec&)> dfs =
      [&](std::size_t start, int depth, const BitVec& ax, const BitVec& az) {
        for (std::size_t i = start; i < terms.size(); ++i) {
          if (res.combinations_visited >= cap) {
            res.truncated = true;
            return;
          }
          ++res.combinations_visited;
          const BitVec x = ax ^ terms[i].pauli.x();
          const BitVec z = az ^ terms[i].pauli.z();
          if (auto it = by_x.find(x); it != by_x.end()) {
            const auto& bucket = it->second;
            for (auto j = std::upper_bound(bucket.begin(), bucket.end(), i); j != bucket.end(); ++j)
              record(z ^ terms[*j].pauli.z());
          }
          if (depth + 2 < k) dfs(i + 1, depth + 1, x, z);
          if (res.truncated) return;
        }
      };
  if (k >= 2) dfs(0, 0, BitVec(op.n()), BitVec(op.n()));

  std::sort(found.begin(), found.end());
  res.constraints = ConstraintSet(op.n());
  for (const auto& z : found) res.constraints.add(z);
  return res;
}

}  // namespace pgw
