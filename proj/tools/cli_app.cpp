#include "cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <sstream>

#include "pgw/dense.hpp"
#include "pgw/instance_io.hpp"
#include "pgw/parallel.hpp"
#include "pgw/rng.hpp"

namespace pgw::cli {

namespace {

template <class F>
auto as_instance_error(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InstanceError&) {
    throw;
  } catch (const std::exception& e) {
    throw InstanceError(e.what());
  }
}

BackendConfig backend_config(const SolveArgs& a) {
  BackendConfig cfg;
  cfg.kind = backend_kind_from_string(a.backend);
  cfg.stochastic.num_probes = a.probes;
  cfg.stochastic.max_probes = std::max(a.probes, cfg.stochastic.max_probes);
  cfg.stochastic.seed = derive_seed(a.seed, 0x5eed);
  cfg.stochastic.threads = a.threads;
  cfg.commuting1d.bond_cap = a.bond_cap;
  return cfg;
}

HUPolicy policy_of(const SolveArgs& a) {
  HUPolicy p;
  if (a.policy == "adaptive")
    p.step_mode = StepMode::adaptive;
  else if (a.policy != "fixed")
    throw std::invalid_argument("policy must be fixed or adaptive");
  p.max_iterations = a.max_iterations;
  return p;
}

Instance with_norm(Instance inst, bool exact) {
  if (exact && inst.n() <= 12) inst.op.set_norm_upper_bound(operator_norm(inst.op));
  return inst;
}

Json instance_summary(const Instance& inst) {
  Json j{{"n", inst.n()},
         {"terms", inst.op.size()},
         {"pauli_l1", inst.op.pauli_l1()},
         {"norm_upper_bound", inst.op.norm_upper_bound()}};
  if (auto it = inst.metadata.find("model"); it != inst.metadata.end()) j["model"] = it->second;
  if (inst.seed) j["seed"] = *inst.seed;
  return j;
}

Json constraints_json(const ResolvedConstraints& rc) {
  Json j = to_json(rc.set);
  j["mode"] = rc.mode;
  j["truncated"] = rc.truncated;
  j["notes"] = rc.notes;
  return j;
}

struct Solved {
  Instance inst;
  ResolvedConstraints rc;
  std::unique_ptr<GibbsBackend> backend;
  SolveReport report;
};

Solved solve_core(const Instance& raw, const SolveArgs& a) {
  Solved s;
  s.inst = with_norm(raw, a.exact_norm);
  s.rc = resolve_constraints(s.inst, a.constraints);
  s.backend = make_backend(s.inst, s.rc.set, backend_config(a));
  s.report = gw_binary_search(*s.backend, a.eps, policy_of(a));
  for (const auto& n : s.rc.notes) s.report.notes.push_back(n);
  return s;
}

Json brute_json(const Instance& inst, double ugw_bound) {
  const auto q = brute_force_qubo(inst.op);
  std::string x;
  for (auto v : q.argmax) x.push_back(v < 0 ? '-' : '+');
  const double scale = std::ldexp(1.0, static_cast<int>(inst.n())) * inst.op.norm_upper_bound();
  Json j{{"kind", "brute_force_qubo"}, {"value", q.value}, {"normalized", q.value / scale}, {"argmax", x}};
  if (std::isfinite(ugw_bound)) {
    j["ugw_bound"] = ugw_bound;
    j["pass"] = q.value <= ugw_bound + 1e-9 * std::max(1.0, std::abs(ugw_bound));
  }
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Certificate xi_certificate(const XiResult& x, double v, std::size_t m) {
  Certificate c;
  c.kind = CertKind::xi_bound;
  c.pass = !x.unbounded;
  c.values = {{"v", v}, {"constraints", static_cast<double>(m)}, {"patterns", static_cast<double>(x.pattern_count)}};
  if (!x.unbounded) {
    c.values.emplace_back("xi", x.xi);
    c.values.emplace_back("xi_over_v", x.xi / v);
  }
  std::ostringstream s;
  if (x.unbounded)
    s << "Xi unbounded: the constraint set admits no finite stability bound";
  else
    s << "Xi = " << x.xi << " = " << x.xi / v << " v; relaxed and exact values differ by at most eps * Xi";
  c.summary = s.str();
  return c;
}

}  // namespace

ResolvedConstraints resolve_constraints(const Instance& inst, const std::string& mode, std::uint64_t cap) {
  ResolvedConstraints rc;
  rc.mode = mode;
  const std::size_t n = inst.n();
  if (mode == "none") {
    rc.set = ConstraintSet(n);
  } else if (mode == "auto") {
    const auto g = diagonal_group(inst.op);
    if (g.order() - 1 <= cap) {
      rc.set = enumerate_traceless(g, cap).sorted();
    } else {
      const auto k = krylov_constraints(inst.op, 2);
      rc.set = k.constraints.sorted();
      rc.truncated = k.truncated;
      rc.notes.push_back("diagonal group of rank " + std::to_string(g.rank()) +
                         " exceeds the enumeration cap; using krylov:2");
    }
  } else if (mode.rfind("krylov:", 0) == 0) {
    const int k = std::stoi(mode.substr(7));
    if (k < 1) throw std::invalid_argument("krylov order must be >= 1");
    const auto kr = krylov_constraints(inst.op, k);
    rc.set = kr.constraints.sorted();
    rc.truncated = kr.truncated;
    if (kr.truncated) rc.notes.push_back("krylov enumeration truncated at the combination cap");
  } else if (mode.rfind("file:", 0) == 0) {
    rc.set = as_instance_error([&] { return load_constraints(mode.substr(5)); }).sorted();
    if (rc.set.n() != n) throw InstanceError("constraint file n differs from the instance");
  } else {
    throw std::invalid_argument("constraints must be auto, krylov:K, none or file:PATH");
  }
  return rc;
}

Instance load_instance_any(const std::filesystem::path& path) {
  return as_instance_error([&]() -> Instance {
    auto v = load_any(path);
    if (auto* inst = std::get_if<Instance>(&v)) return *inst;
    const auto ki = gen_kronecker(std::get<KroneckerSpec>(v));
    if (ki.total_qubits > 12)
      throw std::invalid_argument("Kronecker spec above 12 qubits must be sparsified first");
    Instance inst{ki.explicit_operator(), {}, std::nullopt, {{"model", "kronecker"}}};
    inst.flags.real_symmetric = inst.op.is_real_symmetric();
    return inst;
  });
}

std::string run_gen(const GenArgs& a) {
  if (a.model == "kronecker") {
    KroneckerSpec spec;
    spec.factors = {default_initiator()};
    spec.repetitions = a.k;
    return kronecker_spec_to_json(spec);
  }
  Instance inst;
  if (a.model == "cluster1d")
    inst = gen_cluster1d(a.n, a.seed);
  else if (a.model == "commuting4")
    inst = gen_commuting4();
  else if (a.model == "hypercube")
    inst = gen_hamming_family(a.n, 1, HammingMode::hypercube);
  else if (a.model == "hamming")
    inst = gen_hamming_family(a.n, a.k, HammingMode::hamming_k);
  else if (a.model == "complete")
    inst = gen_hamming_family(a.n, 0, HammingMode::complete);
  else if (a.model == "random")
    inst = gen_random_pauli(a.n, a.m > 0 ? a.m : 2 * a.n, a.seed);
  else
    throw std::invalid_argument("unknown model '" + a.model + "'");
  return instance_to_json(inst);
}

SolveOutput run_solve(const Instance& raw, const SolveArgs& a) {
  Solved s = solve_core(raw, a);
  SolveOutput out;
  const auto& r = s.report;
  const int n = static_cast<int>(s.inst.n());
  const double norm = s.inst.op.norm_upper_bound();
  Json certs = Json::array();
  for (const auto& kind : a.certify) {
    if (kind == "stability") {
      certs.push_back(to_json(stability_certificate(static_cast<int>(diagonal_group(s.inst.op).rank()), a.eps, norm)));
    } else if (kind == "xi") {
      if (r.gw_upper <= 0.0 || s.rc.set.size() > 12) {
        s.report.notes.push_back("xi certificate skipped: needs gw_upper > 0 and at most 12 constraints");
        continue;
      }
      certs.push_back(to_json(xi_certificate(xi_lp(s.rc.set, r.gw_upper, 12, a.threads), r.gw_upper, s.rc.set.size())));
    } else if (kind == "purity") {
      if (!diagonal_group(s.inst.op).trivial()) {
        s.report.notes.push_back("purity certificate skipped: diagonal group is not trivial");
        continue;
      }
      certs.push_back(to_json(purity_uniqueness(*s.backend, r.lambda_star, {1.0, 4.0, 16.0, 64.0}, 0.05)));
    } else if (kind == "brute") {
      if (n > 4) {
        s.report.notes.push_back("brute-force certificate skipped: n > 4");
        continue;
      }
      certs.push_back(brute_json(s.inst, gw_to_ugw(r.gw_upper + r.eps, n, norm)));
    } else {
      throw std::invalid_argument("unknown certificate '" + kind + "'");
    }
  }
  out.json = Json{{"instance", instance_summary(s.inst)},
                  {"constraints", constraints_json(s.rc)},
                  {"solver",
                   {{"eps", a.eps},
                    {"backend", a.backend},
                    {"policy", a.policy},
                    {"seed", a.seed},
                    {"probes", a.probes},
                    {"bond_cap", a.bond_cap},
                    {"max_iterations", a.max_iterations},
                    {"exact_norm", a.exact_norm}}},
                  {"report", to_json(s.report, a.timing)},
                  {"ugw_upper", gw_to_ugw(r.gw_upper + r.eps, n, norm)},
                  {"certificates", certs}};
  out.report = std::move(s.report);
  out.constraints = std::move(s.rc);
  return out;
}

namespace {

RoundedSolution round_with(const GibbsBackend& be, const GibbsParams& lam, const RoundArgs& a) {
  const auto rot = sample_rotation(be.n(), derive_seed(a.seed, 1));
  if (a.explicit_vector) return round_explicit(be, lam, rot);
  return energy_density_mc(be, lam, rot, a.eps, a.delta, derive_seed(a.seed, 2), a.threads);
}

}  // namespace

Json run_round(const Instance& raw, const Json& solve_report, const SolveArgs& sa, const RoundArgs& a) {
  const Instance inst = with_norm(raw, sa.exact_norm);
  const ConstraintSet s = constraint_set_from_json(solve_report.at("constraints"));
  if (s.n() != inst.n()) throw InstanceError("solve report and instance differ in n");
  const Json& rep = solve_report.at("report");
  if (!rep.at("has_lambda_star").get<bool>())
    throw std::runtime_error("solve report has no feasible lambda to round");
  const GibbsParams lam = gibbs_params_from_json(rep.at("lambda_star"));
  SolveArgs bsa = sa;
  bsa.backend = rep.at("backend").get<std::string>();
  const auto be = make_backend(inst, s, backend_config(bsa));
  const RoundedSolution r = round_with(*be, lam, a);

  SolveReport sr;
  sr.gw_lower = rep.at("gw_lower").get<double>();
  sr.gw_upper = rep.at("gw_upper").get<double>();
  sr.eps = rep.at("eps").get<double>();
  sr.constraint_count = s.size();

  Json out = solve_report;
  out["rounding"] = to_json(r, a.emit_vector);
  out["rounding"]["rounded_ugw"] =
      r.energy_density * std::ldexp(1.0, static_cast<int>(inst.n())) * inst.op.norm_upper_bound();
  if (a.haar_l_prime > 0) {
    const auto h = haar_round_heuristic(inst, s, lam, a.haar_l_prime, derive_seed(a.seed, 3));
    out["rounding"]["haar_heuristic"] = {{"value", h.value}, {"std_err", h.std_err}, {"l_prime", a.haar_l_prime}};
  }
  if (!out.contains("certificates")) out["certificates"] = Json::array();
  out["certificates"].push_back(to_json(sandwich_report(sr, r)));
  return out;
}

Instance run_sparsify(const KroneckerSpec& spec, const SparsifyArgs& a) {
  const auto ki = gen_kronecker(spec);
  const KroneckerSampler sampler(ki);
  const std::uint64_t m = a.m > 0 ? a.m : sample_count(ki.total_qubits, ki.l1, a.eps);
  Instance inst;
  inst.op = sparsify(sampler, m, a.seed);
  inst.flags.real_symmetric = inst.op.is_real_symmetric();
  inst.seed = a.seed;
  inst.metadata = {{"model", "kronecker_sparsified"},
                   {"repetitions", std::to_string(spec.repetitions)},
                   {"samples", std::to_string(m)},
                   {"eps", format_double(a.eps)},
                   {"l1", format_double(ki.l1)}};
  return inst;
}

Json run_certify(const Instance& inst, const CertifyArgs& a) {
  if (a.kind == "xi") {
    const auto rc = resolve_constraints(inst, a.constraints);
    const auto x = xi_lp(rc.set, a.v, a.cap, a.threads);
    return Json{{"constraints", constraints_json(rc)}, {"xi", to_json(x)},
                {"certificate", to_json(xi_certificate(x, a.v, rc.set.size()))}};
  }
  if (a.kind == "brute") return Json{{"certificate", brute_json(inst, std::numeric_limits<double>::infinity())}};
  if (a.kind == "stability")
    return Json{{"certificate", to_json(stability_certificate(static_cast<int>(diagonal_group(inst.op).rank()), a.eps,
                                                              inst.op.norm_upper_bound()))}};
  if (a.kind == "purity") {
    const auto be = make_backend(inst, ConstraintSet(inst.n()), BackendConfig{});
    GibbsParams p(0);
    p.lambda_c = 1.0;
    return Json{{"certificate", to_json(purity_uniqueness(*be, p, a.scales, a.delta))}};
  }
  throw std::invalid_argument("certificate kind must be xi, brute, stability or purity");
}

std::vector<BenchRow> run_bench(const BenchArgs& a) {
  struct Task {
    std::string id;
    std::uint64_t seed;
    int param;
    std::string mode;
  };
  std::vector<std::string> modes = a.modes;
  if (modes.empty()) modes = a.model == "kronecker" ? std::vector<std::string>{"krylov:2", "krylov:3"}
                                                    : std::vector<std::string>{"auto", "none"};
  if (a.model != "cluster1d" && a.model != "kronecker") throw std::invalid_argument("bench model must be cluster1d or kronecker");
  std::vector<Task> tasks;
  std::uint64_t idx = 0;
  for (int p = a.n_lo; p <= a.n_hi; ++p)
    for (int rep = 0; rep < a.reps; ++rep, ++idx) {
      const std::uint64_t seed = derive_seed(a.seed, idx);
      const std::string id = a.model + (a.model == "kronecker" ? "-k" : "-n") + std::to_string(p) + "-r" + std::to_string(rep);
      for (const auto& m : modes) tasks.push_back({id, seed, p, m});
    }

  std::vector<BenchRow> rows(tasks.size());
  parallel_for(tasks.size(), a.threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    BenchRow& row = rows[i];
    row.instance_id = t.id;
    row.model = a.model;
    row.seed = t.seed;
    row.constraint_mode = t.mode;
    row.eps = a.eps;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Instance inst;
      if (a.model == "kronecker") {
        KroneckerSpec spec;
        spec.factors = {default_initiator()};
        spec.repetitions = t.param;
        inst = run_sparsify(spec, {a.sparsify_eps, 0, t.seed});
      } else {
        inst = gen_cluster1d(t.param, t.seed);
      }
      row.n = static_cast<int>(inst.n());
      SolveArgs sa = a.solve;
      sa.constraints = t.mode;
      sa.eps = a.eps;
      sa.seed = t.seed;
      sa.threads = 1;
      sa.certify.clear();
      Solved s = solve_core(inst, sa);
      row.constraint_count = s.rc.set.size();
      row.gw_lower = s.report.gw_lower;
      row.gw_upper = s.report.gw_upper;
      row.backend = to_string(s.backend->kind());
      row.iterations = s.report.iterations;
      row.oracle_calls = s.report.oracle_calls;
      if (!s.report.has_lambda_star) throw std::runtime_error("no feasible lambda to round");
      RoundArgs ra;
      ra.eps = a.round_eps;
      ra.seed = t.seed;
      const auto r = round_with(*s.backend, s.report.lambda_star, ra);
      row.rounded_value = r.energy_density;
      row.rounded_stderr = r.energy_stderr;
      row.ratio = row.gw_upper != 0.0 ? row.rounded_value / row.gw_upper : 0.0;
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
    if (a.timing) row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  });
  return rows;
}

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text(out, text);
}

void add_solve_options(CLI::App* c, SolveArgs& s) {
  c->add_option("--constraints", s.constraints, "auto | krylov:K | none | file:PATH");
  c->add_option("--eps", s.eps, "additive accuracy");
  c->add_option("--backend", s.backend, "auto | dense | stochastic | commuting1d")
      ->check(CLI::IsMember({"auto", "dense", "stochastic", "commuting1d"}));
  c->add_option("--seed", s.seed, "master seed");
  c->add_option("--probes", s.probes, "stochastic probes per estimate")->check(CLI::PositiveNumber);
  c->add_option("--bond-cap", s.bond_cap, "commuting1d boundary dimension cap")->check(CLI::PositiveNumber);
  c->add_option("--policy", s.policy, "fixed | adaptive")->check(CLI::IsMember({"fixed", "adaptive"}));
  c->add_option("--max-iterations", s.max_iterations, "HU budget per feasibility call (0: 16n/eps^2)");
  c->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
  c->add_flag("--timing", s.timing, "record wall time (breaks byte-identical output)");
  c->add_flag("--exact-norm", s.exact_norm, "use the dense operator norm when n <= 12");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxed Goemans-Williamson SDP solver for Pauli-sparse QUBO"};
  app.require_subcommand(1);

  GenArgs ga;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--model", ga.model, "cluster1d | commuting4 | hypercube | hamming | complete | random | kronecker")
      ->required();
  gen->add_option("--n", ga.n, "qubits");
  gen->add_option("--k", ga.k, "hamming distance or Kronecker repetitions");
  gen->add_option("--m", ga.m, "random model term count");
  gen->add_option("--seed", ga.seed, "seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  SolveArgs sa;
  std::string instance_path, solve_out, certs;
  auto* solve = app.add_subcommand("solve", "binary search for the relaxed GW value");
  solve->add_option("--instance", instance_path, "instance JSON")->required();
  add_solve_options(solve, sa);
  solve->add_option("--certify", certs, "comma list of xi, stability, purity, brute");
  solve->add_option("--out", solve_out, "report JSON (default stdout)");

  RoundArgs ra;
  SolveArgs rsa;
  std::string round_instance, round_report, round_out;
  auto* round = app.add_subcommand("round", "randomized rounding of a solve report");
  round->add_option("--instance", round_instance, "instance JSON")->required();
  round->add_option("--report", round_report, "solve report JSON")->required();
  round->add_option("--eps", ra.eps, "Monte Carlo accuracy");
  round->add_option("--delta", ra.delta, "failure probability");
  round->add_option("--seed", ra.seed, "rounding seed");
  round->add_flag("--explicit", ra.explicit_vector, "materialize the sign vector (n <= 24)");
  round->add_flag("--emit-vector", ra.emit_vector, "include the sign vector in the output");
  round->add_option("--haar", ra.haar_l_prime, "also run the amplitude heuristic with this many states");
  round->add_option("--probes", rsa.probes, "stochastic probes");
  round->add_option("--bond-cap", rsa.bond_cap, "commuting1d boundary dimension cap");
  round->add_option("--threads", ra.threads, "worker threads");
  round->add_flag("--exact-norm", rsa.exact_norm, "must match the solve run");
  round->add_option("--out", round_out, "output JSON (default stdout)");

  SparsifyArgs spa;
  std::string sp_instance, sp_out;
  auto* sp = app.add_subcommand("sparsify", "sample a sparse surrogate of a Kronecker instance");
  sp->add_option("--instance", sp_instance, "Kronecker spec JSON")->required();
  sp->add_option("--eps", spa.eps, "spectral accuracy target");
  sp->add_option("--m", spa.m, "sample count (default from eps)");
  sp->add_option("--seed", spa.seed, "seed");
  sp->add_option("--out", sp_out, "instance JSON (default stdout)");

  CertifyArgs ca;
  std::string cert_instance, cert_out;
  auto* cert = app.add_subcommand("certify", "certificates and diagnostics");
  cert->add_option("--instance", cert_instance, "instance JSON")->required();
  cert->add_option("--kind", ca.kind, "xi | brute | stability | purity")
      ->check(CLI::IsMember({"xi", "brute", "stability", "purity"}));
  cert->add_option("--constraints", ca.constraints, "constraint set for xi");
  cert->add_option("--v", ca.v, "GW value for xi");
  cert->add_option("--eps", ca.eps, "eps for the stability diagnostic");
  cert->add_option("--cap", ca.cap, "max constraints for xi");
  cert->add_option("--delta", ca.delta, "purity margin");
  cert->add_option("--threads", ca.threads, "worker threads");
  cert->add_option("--out", cert_out, "output JSON (default stdout)");

  BenchArgs ba;
  std::string n_range, modes, bench_out;
  auto* bench = app.add_subcommand("bench", "benchmark sweep to CSV");
  bench->add_option("--model", ba.model, "cluster1d | kronecker")->check(CLI::IsMember({"cluster1d", "kronecker"}));
  bench->add_option("--n-range", n_range, "LO:HI qubits (cluster1d) or repetitions (kronecker)")->required();
  bench->add_option("--reps", ba.reps, "instances per size");
  bench->add_option("--eps", ba.eps, "solver eps");
  bench->add_option("--round-eps", ba.round_eps, "Monte Carlo rounding eps");
  bench->add_option("--sparsify-eps", ba.sparsify_eps, "Kronecker sparsification eps");
  bench->add_option("--modes", modes, "comma list of constraint modes");
  bench->add_option("--seed", ba.seed, "master seed");
  bench->add_option("--threads", ba.threads, "worker threads");
  bench->add_option("--probes", ba.solve.probes, "stochastic probes");
  bench->add_option("--bond-cap", ba.solve.bond_cap, "commuting1d boundary dimension cap");
  bench->add_option("--policy", ba.solve.policy, "fixed | adaptive");
  bench->add_option("--backend", ba.solve.backend, "backend for every row");
  bench->add_option("--max-iterations", ba.solve.max_iterations, "HU budget per feasibility call");
  bench->add_flag("--timing", ba.timing, "record wall time");
  bench->add_option("--out", bench_out, "CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      emit(as_instance_error([&] { return run_gen(ga); }), gen_out);
    } else if (*solve) {
      sa.certify = split(certs, ',');
      const Instance inst = load_instance_any(instance_path);
      emit(run_solve(inst, sa).json.dump(2) + "\n", solve_out);
    } else if (*round) {
      const Instance inst = load_instance_any(round_instance);
      const Json rep = as_instance_error([&] { return Json::parse(read_text(round_report)); });
      emit(run_round(inst, rep, rsa, ra).dump(2) + "\n", round_out);
    } else if (*sp) {
      const auto spec = as_instance_error([&] {
        auto v = load_any(sp_instance);
        if (!std::holds_alternative<KroneckerSpec>(v)) throw std::invalid_argument("sparsify needs a Kronecker spec");
        return std::get<KroneckerSpec>(v);
      });
      emit(instance_to_json(run_sparsify(spec, spa)), sp_out);
    } else if (*cert) {
      const Instance inst = load_instance_any(cert_instance);
      emit(run_certify(inst, ca).dump(2) + "\n", cert_out);
    } else if (*bench) {
      const auto parts = split(n_range, ':');
      if (parts.size() != 2) throw std::invalid_argument("--n-range must be LO:HI");
      ba.n_lo = std::stoi(parts[0]);
      ba.n_hi = std::stoi(parts[1]);
      ba.modes = split(modes, ',');
      std::ostringstream os;
      write_bench_csv(os, run_bench(ba));
      emit(os.str(), bench_out);
    }
  } catch (const InstanceError& e) {
    std::cerr << "instance error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pgw::cli
