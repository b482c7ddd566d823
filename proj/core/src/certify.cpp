#include "pgw/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pgw/dense.hpp"
#include "pgw/parallel.hpp"

namespace pgw {

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::sandwich: return "sandwich";
    case CertKind::xi_bound: return "xi_bound";
    case CertKind::purity: return "purity";
    case CertKind::stability_diag: return "stability_diag";
  }
  return "?";
}

double Certificate::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  throw std::out_of_range("certificate has no value " + key);
}

QuboResult brute_force_qubo(const PauliOperator& c, int cap_n) {
  const int n = static_cast<int>(c.n());
  if (n > cap_n || n > 4) throw std::invalid_argument("brute-force QUBO limited to n <= " + std::to_string(std::min(cap_n, 4)));
  const Eigen::MatrixXd m = to_dense(c).real();
  const int d = 1 << n;
  const std::uint32_t total = std::uint32_t{1} << d;
  QuboResult best;
  best.value = -std::numeric_limits<double>::infinity();
  std::vector<double> x(static_cast<std::size_t>(d));
  const double tol = 1e-12 * std::max(1.0, c.pauli_l1() * d);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // entry i is -1 when bit (d-1-i) is set
    for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = (mask >> (d - 1 - i)) & 1u ? -1.0 : 1.0;
    double v = 0.0;
    for (int i = 0; i < d; ++i) {
      double row = 0.0;
      for (int k = 0; k < d; ++k) row += m(i, k) * x[static_cast<std::size_t>(k)];
      v += x[static_cast<std::size_t>(i)] * row;
    }
    if (v > best.value + tol) {
      best.value = v;
      best.argmax.assign(x.begin(), x.end());
    }
  }
  return best;
}

namespace {

// max 1'y s.t. A y <= v, y >= 0, by Bland's rule on an exchange tableau.
// Returns nullopt when unbounded.
std::optional<double> simplex_max_sum(std::vector<double> t, std::size_t rows, std::size_t cols) {
  const std::size_t w = cols + 1;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * w + j]; };
  for (std::size_t j = 0; j < cols; ++j) at(rows, j) = -1.0;
  at(rows, cols) = 0.0;
  std::vector<std::size_t> col_label(cols), row_label(rows);
  for (std::size_t j = 0; j < cols; ++j) col_label[j] = j;
  for (std::size_t i = 0; i < rows; ++i) row_label[i] = cols + i;
  constexpr double tol = 1e-12;
  for (;;) {
    std::size_t c = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (at(rows, j) < -tol && (c == cols || col_label[j] < col_label[c])) c = j;
    if (c == cols) return at(rows, cols);
    std::size_t r = rows;
    double best = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double a = at(i, c);
      if (a <= tol) continue;
      const double ratio = at(i, cols) / a;
      if (r == rows || ratio < best - tol || (std::abs(ratio - best) <= tol && row_label[i] < row_label[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == rows) return std::nullopt;
    const double p = at(r, c);
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == r) continue;
      const double f = at(i, c) / p;
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j)
        if (j != c) at(i, j) -= f * at(r, j);
      at(i, c) = -f;
    }
    for (std::size_t j = 0; j <= cols; ++j)
      if (j != c) at(r, j) /= p;
    at(r, c) = 1.0 / p;
    std::swap(col_label[c], row_label[r]);
  }
}

}  // namespace

XiResult xi_lp(const ConstraintSet& s, double v, int cap_m, int threads) {
  if (!(v > 0.0)) throw std::invalid_argument("xi_lp needs v > 0");
  const std::size_t m = s.size();
  if (static_cast<int>(m) > cap_m || m > 24) throw CapExceeded("xi_lp: |S| exceeds the cap");
  XiResult res;
  if (m == 0) {
    res.pattern_count = 1;
    return res;
  }
  // Achievable patterns (z_i . b mod 2)_i form the span of the per-qubit columns.
  std::vector<std::uint32_t> basis;
  for (std::size_t j = 0; j < s.n(); ++j) {
    std::uint32_t col = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (s[i].get(j)) col |= std::uint32_t{1} << i;
    for (auto b : basis) col = std::min(col, col ^ b);
    if (col) {
      basis.push_back(col);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  std::vector<std::uint32_t> span{0};
  for (auto b : basis) {
    const std::size_t sz = span.size();
    for (std::size_t k = 0; k < sz; ++k) span.push_back(span[k] ^ b);
  }
  res.pattern_count = span.size();

  // Flipping the orthant by an achievable pattern permutes the rows, so one LP
  // per coset of the span suffices.
  const std::uint32_t full = std::uint32_t{1} << m;
  std::vector<char> seen(full, 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t u = 0; u < full; ++u) {
    if (seen[u]) continue;
    reps.push_back(u);
    for (auto p : span) seen[u ^ p] = 1;
  }
  res.lp_count = reps.size();

  const std::size_t rows = span.size();
  std::vector<std::optional<double>> vals(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t k) {
    std::vector<double> t((rows + 1) * (m + 1), 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::uint32_t q = reps[k] ^ span[r];
      for (std::size_t i = 0; i < m; ++i) t[r * (m + 1) + i] = (q >> i) & 1u ? 1.0 : -1.0;
      t[r * (m + 1) + m] = v;
    }
    vals[k] = simplex_max_sum(std::move(t), rows, m);
  });
  for (const auto& x : vals) {
    if (!x) {
      res.unbounded = true;
      res.xi = std::numeric_limits<double>::infinity();
      return res;
    }
    res.xi = std::max(res.xi, *x);
  }
  return res;
}

double stability_diag(int k, double eps, double norm_c) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return std::pow(std::ldexp(1.0, k) - 1.0, 1.0 / 6.0) * std::cbrt(eps) * norm_c;
}

Certificate stability_certificate(int k, double eps, double norm_c) {
  Certificate c;
  c.kind = CertKind::stability_diag;
  c.pass = true;
  const double d = stability_diag(k, eps, norm_c);
  c.values = {{"k", k}, {"eps", eps}, {"norm_c", norm_c}, {"diagnostic", d}};
  std::ostringstream s;
  s << "scaling diagnostic (2^k-1)^(1/6) eps^(1/3) |C| = " << d << " (no constant; not a bound)";
  c.summary = s.str();
  return c;
}

Certificate purity_uniqueness(const GibbsBackend& backend, const GibbsParams& lam,
                              const std::vector<double>& scales, double delta) {
  if (!diagonal_group(backend.instance().op).trivial())
    throw std::invalid_argument(
        "purity test needs a trivial diagonal group; otherwise sign-flip symmetries force degenerate top "
        "eigenvectors");
  Certificate c;
  c.kind = CertKind::purity;
  const double threshold = 0.25 + delta;
  double best = 0.0;
  bool monotone = true;
  for (double t : scales) {
    const double p = backend.purity(lam.scaled(t));
    if (!c.trace.empty() && p < c.trace.back() - 1e-12) monotone = false;
    c.trace.push_back(p);
    best = std::max(best, p);
  }
  c.pass = best >= threshold;
  c.values = {{"delta", delta}, {"threshold", threshold}, {"max_purity", best}, {"monotone", monotone ? 1.0 : 0.0}};
  std::ostringstream s;
  s << "max purity " << best << (c.pass ? " >= " : " < ") << threshold
    << (c.pass ? ": top eigenvector unique" : ": uniqueness not certified");
  c.summary = s.str();
  return c;
}

Certificate sandwich_report(const SolveReport& gw, const RoundedSolution& rounded) {
  if (rounded.lambda_half.lambda_a.size() != gw.constraint_count)
    throw std::invalid_argument("rounded solution and solve report use different constraint sets");
  Certificate c;
  c.kind = CertKind::sandwich;
  const double lower = rounded.energy_density - rounded.energy_stderr;
  const double upper = gw.gw_upper + gw.eps;
  const double ratio = gw.gw_upper != 0.0 ? rounded.energy_density / gw.gw_upper : 0.0;
  c.pass = lower <= upper;
  c.values = {{"rounded", rounded.energy_density}, {"rounded_stderr", rounded.energy_stderr},
              {"gw_lower", gw.gw_lower},           {"gw_upper", gw.gw_upper},
              {"eps", gw.eps},                     {"lower", lower},
              {"upper", upper},                    {"ratio", ratio}};
  std::ostringstream s;
  s << "QUBO/(2^n |C|) in [" << lower << ", " << upper << "], rounded/SDP ratio " << ratio;
  c.summary = s.str();
  return c;
}

}  // namespace pgw
