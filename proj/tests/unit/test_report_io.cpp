#include <gtest/gtest.h>

#include <sstream>

#include "pgw/report_io.hpp"

using namespace pgw;

TEST(ReportIo, CsvHeaderOrder) {
  EXPECT_EQ(bench_csv_header(),
            "instance_id,n,D,model,seed,constraint_mode,constraint_count,eps,gw_lower,gw_upper,rounded_value,"
            "rounded_stderr,ratio,backend,iterations,oracle_calls,wall_time_s,status");
}

TEST(ReportIo, CsvRow) {
  BenchRow r;
  r.instance_id = "cluster1d-n7-s1";
  r.n = 7;
  r.model = "cluster1d";
  r.seed = 1;
  r.constraint_mode = "auto";
  r.eps = 0.1;
  r.backend = "commuting1d";
  const auto row = bench_csv_row(r);
  EXPECT_EQ(row.substr(0, 24), "cluster1d-n7-s1,7,128,cl");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  BenchRow q = r;
  q.status = "error: a, b";
  EXPECT_NE(bench_csv_row(q).find("\"error: a, b\""), std::string::npos);
}

TEST(ReportIo, RoundTrips) {
  GibbsParams p(2);
  p.lambda_c = 0.1;
  p.lambda_a = {-0.3, 1e-17};
  EXPECT_EQ(gibbs_params_from_json(to_json(p)), p);
  const auto rot = sample_rotation(4, 2);
  EXPECT_EQ(rotation_from_json(to_json(rot)).angles, rot.angles);
  ConstraintSet s(3);
  s.add(BitVec::from_string("110"));
  EXPECT_EQ(constraint_set_from_json(to_json(s)).z_strings(), s.z_strings());
}

TEST(ReportIo, SolveReportTimingOptIn) {
  SolveReport r;
  r.wall_time_s = 3.5;
  EXPECT_EQ(to_json(r)["wall_time_s"].get<double>(), 0.0);
  EXPECT_EQ(to_json(r, true)["wall_time_s"].get<double>(), 3.5);
}
