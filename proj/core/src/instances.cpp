#include "pgw/instances.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "pgw/dense.hpp"
#include "pgw/rng.hpp"

namespace pgw {

void validate(const Instance& inst) {
  const auto& op = inst.op;
  for (const auto& t : op.terms()) {
    if (t.pauli.n() != op.n()) throw std::invalid_argument("term length differs from n");
    if (t.coeff == 0.0 || !std::isfinite(t.coeff))
      throw std::invalid_argument("term coefficient must be finite and nonzero");
  }
  if (op.norm_override() && !(*op.norm_override() > 0.0))
    throw std::invalid_argument("norm_upper_bound must be positive");
  if (inst.flags.real_symmetric && !op.is_real_symmetric())
    throw std::invalid_argument("real_symmetric flag set but a term has an odd number of Y sites");
  if (inst.flags.commuting_1d) {
    if (!inst.flags.window_width || *inst.flags.window_width < 1)
      throw std::invalid_argument("commuting_1d requires a positive window_width");
    auto rep = commutation_report(op);
    if (!rep.block_commuting)
      throw std::invalid_argument("commuting_1d flag set but " +
                                  std::to_string(rep.anticommuting_block_pairs) +
                                  " term blocks do not commute");
    for (const auto& block : term_blocks(op)) {
      int lo = static_cast<int>(op.n()), hi = -1;
      for (auto i : block) {
        if (op[i].pauli.is_identity()) continue;
        lo = std::min(lo, op[i].pauli.support_lo());
        hi = std::max(hi, op[i].pauli.support_hi());
      }
      if (hi >= 0 && hi - lo + 1 > *inst.flags.window_width)
        throw std::invalid_argument("term block wider than window_width");
    }
  }
}

std::string to_string(HammingMode m) {
  switch (m) {
    case HammingMode::hypercube: return "hypercube";
    case HammingMode::hamming_k: return "hamming";
    case HammingMode::complete: return "complete";
  }
  return "?";
}

Instance gen_hamming_family(int n, int k, HammingMode mode) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Instance inst{PauliOperator(static_cast<std::size_t>(n)), {}, std::nullopt, {}};
  inst.flags.real_symmetric = true;
  inst.metadata["model"] = to_string(mode);
  const std::size_t un = static_cast<std::size_t>(n);
  switch (mode) {
    case HammingMode::hypercube:
      for (std::size_t q = 0; q < un; ++q) {
        PauliString p(un);
        p.set_site(q, 'X');
        inst.op.add(p, 1.0);
      }
      inst.flags.commuting_1d = true;
      inst.flags.window_width = 1;
      break;
    case HammingMode::hamming_k: {
      if (k < 1 || k > n) throw std::invalid_argument("hamming distance k must be in [1, n]");
      if (n > 30) throw std::invalid_argument("hamming family limited to n <= 30");
      inst.metadata["k"] = std::to_string(k);
      // subsets of size k in increasing bitmask order
      for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << n);) {
        inst.op.add(PauliString(BitVec::from_index(s, un), BitVec(un)), 1.0);
        const std::uint64_t c = s & (~s + 1), r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
      break;
    }
    case HammingMode::complete: {
      if (n > 16) throw std::invalid_argument("complete graph refused for n > 16");
      const double w = std::ldexp(1.0, -n);
      for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x)
        inst.op.add(PauliString(BitVec::from_index(x, un), BitVec(un)), w);
      break;
    }
  }
  return inst;
}

Instance gen_cluster1d(int n, std::uint64_t seed) {
  if (n < 7) throw std::invalid_argument("cluster1d requires n >= 7");
  const std::size_t un = static_cast<std::size_t>(n);
  auto word = [&](std::initializer_list<std::pair<int, char>> sites) {
    PauliString p(un);
    for (auto [q, c] : sites) p.set_site(static_cast<std::size_t>(q - 1), c);
    return p;
  };

  // coefficient blocks in the order a1, a2_i, a3_i, a4_1, a4_2, a4_3
  const int blocks = 1 + (n - 6) + (n - 7) + 3;
  Rng rng(seed);
  std::vector<double> a(static_cast<std::size_t>(blocks));
  double sum = 0.0;
  for (auto& v : a) {
    v = rng.uniform_pos();
    sum += v;
  }
  for (auto& v : a) v /= sum;

  Instance inst{PauliOperator(un), {}, seed, {}};
  std::size_t b = 0;
  inst.op.add(word({{1, 'X'}, {2, 'Z'}}), a[b++]);
  for (int i = 2; i <= n - 5; ++i) inst.op.add(word({{i - 1, 'Z'}, {i, 'X'}, {i + 1, 'Z'}}), a[b++]);
  for (int i = 2; i <= n - 6; ++i)
    inst.op.add(word({{i - 1, 'Z'}, {i, 'Y'}, {i + 1, 'Y'}, {i + 2, 'Z'}}), a[b++]);
  inst.op.add(word({{n - 6, 'Z'}, {n - 5, 'Y'}, {n - 4, 'Y'}, {n - 3, 'X'}, {n - 2, 'X'}, {n - 1, 'X'}}),
              a[b++]);
  inst.op.add(word({{n, 'X'}}), a[b++]);
  const double g = a[b++] / 6.0;
  const int group = 0;
  for (auto [p, q] : {std::pair{n - 3, n - 2}, {n - 2, n - 1}, {n - 3, n - 1}}) {
    inst.op.add(word({{p, 'X'}, {q, 'X'}}), g, group);
    inst.op.add(word({{p, 'Y'}, {q, 'Y'}}), g, group);
  }

  inst.flags = {true, true, 6};
  inst.metadata["model"] = "cluster1d";
  return inst;
}

Instance gen_commuting4() {
  Instance inst{PauliOperator(4), {}, std::nullopt, {}};
  for (const char* l : {"XXII", "YYII", "IXXI", "IYYI", "XIXI", "YIYI"})
    inst.op.add(PauliString::from_label(l), 1.0, 0);
  inst.op.add("XXXX", 1.0);
  inst.op.add("IIIX", 1.0);
  inst.flags = {true, true, 4};
  inst.metadata["model"] = "commuting4";
  return inst;
}

Instance gen_random_pauli(int n, int m, std::uint64_t seed) {
  if (n < 1 || n > 30) throw std::invalid_argument("random model needs 1 <= n <= 30");
  const std::size_t un = static_cast<std::size_t>(n);
  const double available = std::ldexp(1.0, 2 * n - 1) + std::ldexp(1.0, n - 1) - 1.0;
  if (m < 1 || m > available) throw std::invalid_argument("term count out of range");
  Rng rng(seed);
  Instance inst{PauliOperator(un), {}, seed, {}};
  while (static_cast<int>(inst.op.size()) < m) {
    PauliString p(un);
    for (std::size_t q = 0; q < un; ++q) p.set_site(q, "IXYZ"[rng.below(4)]);
    if (p.is_identity() || !p.is_real() || inst.op.contains(p)) continue;
    double c = rng.normal();
    if (c == 0.0) c = 1.0;
    inst.op.add(p, c);
  }
  inst.flags.real_symmetric = true;
  inst.metadata["model"] = "random";
  return inst;
}

PauliOperator decompose_dense(const Eigen::MatrixXd& a) {
  const auto d = a.rows();
  if (d != a.cols() || d < 1 || (d & (d - 1)) != 0)
    throw std::invalid_argument("matrix must be square with power-of-two size");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("matrix is not symmetric");
  const int k = std::countr_zero(static_cast<std::uint64_t>(d));
  if (k > 6) throw std::invalid_argument("decompose_dense limited to k <= 6");
  PauliOperator op(static_cast<std::size_t>(k));
  const std::uint64_t D = static_cast<std::uint64_t>(d);
  const double tol = 1e-14 * std::max(1.0, a.cwiseAbs().maxCoeff());
  for (std::uint64_t x = 0; x < D; ++x)
    for (std::uint64_t z = 0; z < D; ++z) {
      PauliString p(BitVec::from_index(x, static_cast<std::size_t>(k)),
                    BitVec::from_index(z, static_cast<std::size_t>(k)));
      if (!p.is_real()) continue;  // antisymmetric imaginary part is zero for real symmetric a
      // tr(P a) = sum_b <b|P a|b> = sum_b phase(b xor x -> b) a(b xor x, b)
      std::complex<double> tr = 0.0;
      for (std::uint64_t b = 0; b < D; ++b) {
        auto img = apply_to_basis(p, b);
        tr += img.phase.value() * a(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(img.index));
      }
      const double c = tr.real() / static_cast<double>(D);
      if (std::abs(c) > tol) op.add(p, c);
    }
  return op;
}

Eigen::MatrixXd default_initiator() {
  Eigen::MatrixXd a(4, 4);
  a << 2, 1, 1, 1, 1, 2, 1, 0, 1, 1, 2, 0, 1, 0, 0, 2;
  return a;
}

std::vector<std::size_t> KroneckerInstance::sequence() const {
  std::vector<std::size_t> s;
  for (int r = 0; r < spec.repetitions; ++r)
    for (std::size_t f = 0; f < factor_ops.size(); ++f) s.push_back(f);
  return s;
}

PauliOperator KroneckerInstance::explicit_operator() const {
  if (total_qubits > 12) throw std::invalid_argument("explicit Kronecker form limited to 12 qubits");
  const std::size_t N = static_cast<std::size_t>(total_qubits);
  // product of factor expansions, factors laid out left to right
  std::vector<std::pair<PauliString, double>> acc{{PauliString(N), 1.0}};
  std::size_t offset = 0;
  for (auto f : sequence()) {
    std::vector<std::pair<PauliString, double>> next;
    for (const auto& [p, c] : acc)
      for (const auto& t : factor_ops[f].terms()) {
        PauliString q = p;
        for (std::size_t j = 0; j < t.pauli.n(); ++j) q.set_site(offset + j, t.pauli.site(j));
        next.emplace_back(std::move(q), c * t.coeff);
      }
    acc = std::move(next);
    offset += factor_ops[f].n();
  }
  PauliOperator op(N);
  for (const auto& [p, c] : acc) op.add(p, c);
  return op;
}

Eigen::MatrixXd KroneckerInstance::dense() const {
  if (total_qubits > 12) throw std::invalid_argument("dense Kronecker form limited to 12 qubits");
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(1, 1);
  for (auto f : sequence()) {
    Eigen::MatrixXd a = spec.factors[f];
    if (spec.normalize) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
      a /= es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::MatrixXd r(m.rows() * a.rows(), m.cols() * a.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        r.block(i * a.rows(), j * a.cols(), a.rows(), a.cols()) = m(i, j) * a;
    m = std::move(r);
  }
  return m;
}

KroneckerInstance gen_kronecker(const KroneckerSpec& spec) {
  if (spec.factors.empty() || spec.repetitions < 1)
    throw std::invalid_argument("Kronecker spec needs factors and repetitions >= 1");
  KroneckerInstance ki;
  ki.spec = spec;
  for (const auto& a : spec.factors) {
    Eigen::MatrixXd f = a;
    if (spec.normalize) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
      const double nrm = es.eigenvalues().cwiseAbs().maxCoeff();
      if (nrm == 0.0) throw std::invalid_argument("zero Kronecker factor");
      f /= nrm;
    }
    ki.factor_ops.push_back(decompose_dense(f));
    ki.factor_qubits.push_back(static_cast<int>(ki.factor_ops.back().n()));
  }
  ki.l1 = 1.0;
  for (auto f : ki.sequence()) {
    ki.l1 *= ki.factor_ops[f].pauli_l1();
    ki.total_qubits += ki.factor_qubits[f];
  }
  return ki;
}

StructureReport structure_report(const Instance& inst, int kmax) {
  if (inst.n() > 10) throw std::invalid_argument("structure_report is dense; n must be <= 10");
  StructureReport r;
  r.fully_commuting = commutation_report(inst.op).fully_commuting;
  const Eigen::MatrixXcd c = to_dense(inst.op);
  const auto d = c.rows();

  r.walk_regular = true;
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(d, d);
  for (int k = 1; k <= kmax && r.walk_regular; ++k) {
    pw = pw * c;
    const auto diag = pw.diagonal();
    for (Eigen::Index i = 1; i < d; ++i)
      if (std::abs(diag[i] - diag[0]) > 1e-9) {
        r.walk_regular = false;
        break;
      }
  }

  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::deque<Eigen::Index> queue{0};
  seen[0] = 1;
  Eigen::Index reached = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (Eigen::Index v = 0; v < d; ++v)
      if (!seen[static_cast<std::size_t>(v)] && std::abs(c(v, u)) > 1e-12) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  r.connected = reached == d;
  return r;
}

}  // namespace pgw
