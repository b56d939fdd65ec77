#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "zastava/bench.hpp"
#include "zastava/json_io.hpp"
#include "zastava/verify.hpp"

using namespace zastava;

TEST(Bench, SylvesterFamilySizeIsDegree) {
  Rng rng(1);
  for (std::size_t a = 1; a <= 5; ++a) {
    const ScalarMatrix m = bench_instance(rng, BenchFamily::sylvester, a);
    EXPECT_EQ(m.rows(), 2 * a - 1);
    EXPECT_EQ(m.cols(), 2 * a - 1);
  }
  EXPECT_EQ(bench_instance(rng, BenchFamily::hankel, 4).rows(), 4u);
}

TEST(Bench, CapAndBadInput) {
  Rng rng(1);
  const std::vector<DetStrategy> s{DetStrategy::bareiss};
  try {
    run_bench(rng, BenchFamily::hankel, {17}, s);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::out_of_range);
  }
  EXPECT_THROW(run_bench(rng, BenchFamily::hankel, {0}, s), error);
  EXPECT_THROW(run_bench(rng, BenchFamily::hankel, {2}, {}), error);
  EXPECT_THROW(parse_family("toeplitz"), error);
}

TEST(Bench, CsvShape) {
  Rng rng(3);
  const auto rows = run_bench(rng, BenchFamily::sylvester, {2, 3},
                              {DetStrategy::bareiss, DetStrategy::division_free}, {16, 1});
  ASSERT_EQ(rows.size(), 4u);
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "strategy,size,bits,wall_time_ns");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("bareiss,2,", 0), 0u);
}

TEST(Bench, PreflightAgrees) {
  Rng rng(5);
  EXPECT_EQ(det_preflight(rng, 30, 8), "");
}

TEST(Bench, EntryBits) {
  ScalarMatrix m(1, 2);
  m(0, 0) = Scalar(255);
  m(0, 1) = Scalar(1, 1024);
  EXPECT_EQ(entry_bits(m), 11u);
}

TEST(JsonIo, CoordinatesRoundTrip) {
  const json j = json::parse(R"({"datum":"A1","colors":[{"w":["1","3"],"y":["2",4]}]})");
  const ZastavaPoint p = point_from_json(j);
  EXPECT_EQ(to_string(p.color(0).Q), to_string(parse_unipoly("z^2-4z+3")));
  EXPECT_EQ(to_string(p.color(0).R), to_string(parse_unipoly("z+1")));
  const ZastavaPoint q = point_from_json(point_to_json(p));
  EXPECT_TRUE(q.consistency_problems().empty());
  EXPECT_EQ(*q.color(0).y, *p.color(0).y);
}

TEST(JsonIo, BothFormsLoadedAsGiven) {
  const json j = json::parse(R"({"datum":"A1","colors":[{"Q":"z^2-4z+3","R":"z+1","w":["1","3"],"y":["2","5"]}]})");
  const ZastavaPoint p = point_from_json(j);
  EXPECT_FALSE(p.consistency_problems().empty());
}

TEST(JsonIo, Errors) {
  EXPECT_THROW(point_from_json(json::parse(R"({"colors":[]})")), error);
  EXPECT_THROW(point_from_json(json::parse(R"({"datum":"A1","colors":[{"w":["1"]}]})")), error);
  EXPECT_THROW(point_from_json(json::parse(R"({"datum":"A1","colors":[{"w":[1.5],"y":["1"]}]})")), error);
  EXPECT_THROW(point_from_json(json::parse(R"({"datum":"Q7","colors":[{"w":["1"],"y":["1"]}]})")), error);
  EXPECT_THROW(read_json_file("/nonexistent/point.json"), error);
}

TEST(Verify, SameSeedSameReport) {
  VerifyConfig cfg;
  cfg.a = 3;
  cfg.trials = 4;
  cfg.seed = 99;
  const std::string a = report_to_json(run_verify(cfg), false).dump();
  const std::string b = report_to_json(run_verify(cfg), false).dump();
  EXPECT_EQ(a, b);
  cfg.parallel = true;
  EXPECT_EQ(report_to_json(run_verify(cfg), false).dump(), a);
}

TEST(Verify, ProfilesAndErrors) {
  VerifyConfig cfg;
  cfg.profile = "nonsense";
  EXPECT_THROW(run_verify(cfg), error);
  cfg.profile = "exchange";
  const auto r = run_verify(cfg);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_EQ(c.id.rfind("exchange/", 0), 0u);
}

TEST(Verify, CorruptedPointFails) {
  const json j = json::parse(R"({"datum":"A1","colors":[{"Q":"z^2-4z+3","R":"z+1","w":["1","3"],"y":["2","5"]}]})");
  VerifyConfig cfg;
  cfg.profile = "sl2hank";
  cfg.points.push_back(point_from_json(j));
  cfg.point_names.push_back("corrupted");
  const auto r = run_verify(cfg);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->id, "sl2hank/corrupted");
}

TEST(Verify, SeedFromEnvironment) {
  ::unsetenv("ZASTAVA_RNG");
  EXPECT_EQ(resolve_seed(5), 5u);
  ::setenv("ZASTAVA_RNG", "123", 1);
  EXPECT_EQ(resolve_seed(5), 123u);
  ::setenv("ZASTAVA_RNG", "abc", 1);
  EXPECT_THROW(resolve_seed(5), error);
  ::unsetenv("ZASTAVA_RNG");
}
