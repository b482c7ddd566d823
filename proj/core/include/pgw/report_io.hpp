#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgw/certify.hpp"
#include "pgw/hu_solver.hpp"
#include "pgw/rounding.hpp"

namespace pgw {

using Json = nlohmann::ordered_json;

Json to_json(const GibbsParams& p);
GibbsParams gibbs_params_from_json(const Json& j);

Json to_json(const ConstraintSet& s);
ConstraintSet constraint_set_from_json(const Json& j);

Json to_json(const RotationSpec& r);
RotationSpec rotation_from_json(const Json& j);

// wall_time_s is written only when include_timing is set (0 otherwise), so
// reports stay byte-identical across runs.
Json to_json(const SolveReport& r, bool include_timing = false);
Json to_json(const RoundedSolution& r, bool include_vector = false);
Json to_json(const Certificate& c);
Json to_json(const XiResult& x);
Json to_json(const KrylovResult& k);

struct BenchRow {
  std::string instance_id;
  int n = 0;
  std::string model;
  std::uint64_t seed = 0;
  std::string constraint_mode;
  std::size_t constraint_count = 0;
  double eps = 0.0;
  double gw_lower = 0.0;
  double gw_upper = 0.0;
  double rounded_value = 0.0;
  double rounded_stderr = 0.0;
  double ratio = 0.0;
  std::string backend;
  long iterations = 0;
  long oracle_calls = 0;
  double wall_time_s = 0.0;
  std::string status = "ok";
};

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& r);
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

// %.17g, the round-trip representation
std::string format_double(double v);

}  // namespace pgw
