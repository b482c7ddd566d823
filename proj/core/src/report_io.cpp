#include "pgw/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pgw {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const GibbsParams& p) { return Json{{"lambda_c", p.lambda_c}, {"lambda_a", p.lambda_a}}; }

GibbsParams gibbs_params_from_json(const Json& j) {
  GibbsParams p;
  p.lambda_c = j.at("lambda_c").get<double>();
  p.lambda_a = j.at("lambda_a").get<std::vector<double>>();
  return p;
}

Json to_json(const ConstraintSet& s) {
  Json z = Json::array();
  for (const auto& b : s.z_strings()) z.push_back(b.to_string());
  return Json{{"n", s.n()}, {"z", z}};
}

ConstraintSet constraint_set_from_json(const Json& j) {
  ConstraintSet s(j.at("n").get<std::size_t>());
  for (const auto& z : j.at("z")) {
    const auto b = BitVec::from_string(z.get<std::string>());
    if (b.size() != s.n()) throw std::invalid_argument("constraint length differs from n");
    s.add(b);
  }
  return s;
}

Json to_json(const RotationSpec& r) {
  Json a = Json::array();
  for (const auto& t : r.angles) a.push_back({t[0], t[1], t[2]});
  return Json{{"seed", r.seed}, {"angles", a}};
}

RotationSpec rotation_from_json(const Json& j) {
  RotationSpec r;
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& t : j.at("angles")) r.angles.push_back({t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>()});
  return r;
}

Json to_json(const SolveReport& r, bool include_timing) {
  Json trace = Json::array();
  for (const auto& s : r.search_trace)
    trace.push_back({{"mu", s.mu}, {"status", to_string(s.status)}, {"iterations", s.iterations}});
  Json j{{"gw_lower", r.gw_lower},
         {"gw_upper", r.gw_upper},
         {"eps", r.eps},
         {"backend", to_string(r.backend_kind)},
         {"constraint_count", r.constraint_count},
         {"iterations", r.iterations},
         {"oracle_calls", r.oracle_calls},
         {"has_lambda_star", r.has_lambda_star},
         {"lambda_star", to_json(r.lambda_star)},
         {"search_trace", trace},
         {"wall_time_s", include_timing ? r.wall_time_s : 0.0},
         {"notes", r.notes}};
  return j;
}

Json to_json(const RoundedSolution& r, bool include_vector) {
  Json j{{"mode", r.mode == RoundedSolution::Mode::explicit_vector ? "explicit" : "implicit"},
         {"energy_density", r.energy_density},
         {"energy_stderr", r.energy_stderr},
         {"samples_used", r.samples_used},
         {"lambda_half", to_json(r.lambda_half)},
         {"rotation", to_json(r.rotation)}};
  if (r.mode == RoundedSolution::Mode::implicit) {
    j["eps"] = r.eps;
    j["delta"] = r.delta;
    j["hoeffding_halfwidth"] = r.hoeffding_halfwidth;
    j["max_abs_sample"] = r.max_abs_sample;
  }
  if (include_vector && !r.x.empty()) {
    std::string s;
    s.reserve(r.x.size());
    for (auto v : r.x) s.push_back(v < 0 ? '-' : '+');
    j["x"] = s;
  }
  return j;
}

Json to_json(const Certificate& c) {
  Json vals = Json::object();
  for (const auto& [k, v] : c.values) vals[k] = v;
  Json j{{"kind", to_string(c.kind)}, {"pass", c.pass}, {"values", vals}};
  if (!c.trace.empty()) j["trace"] = c.trace;
  j["summary"] = c.summary;
  return j;
}

Json to_json(const XiResult& x) {
  Json j{{"unbounded", x.unbounded}, {"pattern_count", x.pattern_count}, {"lp_count", x.lp_count}};
  if (x.unbounded)
    j["xi"] = nullptr;
  else
    j["xi"] = x.xi;
  return j;
}

Json to_json(const KrylovResult& k) {
  return Json{{"constraints", to_json(k.constraints)},
              {"truncated", k.truncated},
              {"combinations_visited", k.combinations_visited}};
}

std::string bench_csv_header() {
  return "instance_id,n,D,model,seed,constraint_mode,constraint_count,eps,gw_lower,gw_upper,rounded_value,"
         "rounded_stderr,ratio,backend,iterations,oracle_calls,wall_time_s,status";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string bench_csv_row(const BenchRow& r) {
  const std::string d = r.n < 64 ? std::to_string(std::uint64_t{1} << r.n) : format_double(std::ldexp(1.0, r.n));
  std::string s;
  s += csv_field(r.instance_id) + ',' + std::to_string(r.n) + ',' + d + ',' + csv_field(r.model) + ',' +
       std::to_string(r.seed) + ',' + csv_field(r.constraint_mode) + ',' + std::to_string(r.constraint_count) + ',' +
       format_double(r.eps) + ',' + format_double(r.gw_lower) + ',' + format_double(r.gw_upper) + ',' +
       format_double(r.rounded_value) + ',' + format_double(r.rounded_stderr) + ',' + format_double(r.ratio) + ',' +
       csv_field(r.backend) + ',' + std::to_string(r.iterations) + ',' + std::to_string(r.oracle_calls) + ',' +
       format_double(r.wall_time_s) + ',' + csv_field(r.status);
  return s;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << bench_csv_header() << '\n';
  for (const auto& r : rows) os << bench_csv_row(r) << '\n';
}

}  // namespace pgw
