#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "scs/cli.hpp"
#include "scs/combinatorics.hpp"
#include "scs/coordinates.hpp"
#include "scs/json_io.hpp"
#include "scs/sampling.hpp"
#include "scs/selfcheck.hpp"

using namespace scs;
using oracle::q;

TEST(CombinatoricsProperties, PAlphaSumsToBell) {
  for (int s = 1; s <= 8; ++s) {
    Integer total = 0;
    for (const auto& a : integer_partitions(s)) total += p_alpha(a);
    EXPECT_EQ(total, bell_number(s));
    EXPECT_EQ(Integer(set_partitions(full_set(s)).size()), bell_number(s));
  }
}

TEST(CombinatoricsProperties, PAlphaCountsShapes) {
  for (int s = 1; s <= 8; ++s) {
    std::map<std::vector<int>, long> counts;
    for (const auto& shape : oracle::set_partition_shapes(s)) ++counts[shape];
    for (const auto& a : integer_partitions(s)) EXPECT_EQ(p_alpha(a), counts[a.parts()]) << a.to_string();
  }
}

TEST(CombinatoricsProperties, SetPartitionShapesMatchLibrary) {
  for (int s = 1; s <= 7; ++s) {
    std::map<std::vector<int>, long> lib;
    for (const auto& p : set_partitions(full_set(s))) ++lib[p.shape().parts()];
    std::map<std::vector<int>, long> ref;
    for (const auto& shape : oracle::set_partition_shapes(s)) ++ref[shape];
    EXPECT_EQ(lib, ref);
  }
}

TEST(CombinatoricsProperties, EulerianRowsSumToFactorial) {
  for (int k = 1; k <= 8; ++k) {
    Integer total = 0;
    for (int i = 1; i <= k; ++i) total += eulerian_number(k, i);
    EXPECT_EQ(total, factorial(k));
  }
}

TEST(CombinatoricsProperties, EulerianAtMinusOneGivesEulerNumbers) {
  for (int s = 2; s <= 10; ++s) {
    const Scalar v = eulerian_poly(s - 1, q(-1));
    if (s % 2 == 0)
      EXPECT_EQ(v, Scalar(euler_number(s - 1)) * q(s % 4 == 0 ? 1 : -1)) << s;
    else
      EXPECT_EQ(v, q(0)) << s;
  }
}

TEST(CombinatoricsProperties, EulerianPolyMatchesOracleCoefficients) {
  Sampler rng(71);
  for (int m = 1; m <= 7; ++m) {
    const Scalar t(rng.rational());
    Scalar want(0);
    for (int i = 1; i <= m; ++i) want += Scalar(oracle::eulerian(m, i)) * t.pow(i);
    EXPECT_EQ(eulerian_poly(m, t), want);
  }
}

TEST(CoordinateProperties, SymmetrizedRoundTripUpToTen) {
  Sampler rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 10;
    const SymVector c = rng.sym_vector(SymKind::C, n);
    EXPECT_EQ(c_from_d_sym(d_from_c_sym(c)), c);
  }
}

TEST(CoordinateProperties, ShiftDComposes) {
  Sampler rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const SymVector d = rng.sym_vector(SymKind::D, 6);
    const Scalar a(rng.rational()), b(rng.rational());
    EXPECT_EQ(shift_d(shift_d(d, a), b), shift_d(d, a + b));
    EXPECT_EQ(shift_d(d, q(0)), d);
  }
}

TEST(SelfcheckProperties, LibrarySuitesPass) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto results = run_selfcheck(SelfcheckOptions{6, 8, seed});
    ASSERT_EQ(results.size(), 6u);
    for (const auto& r : results) EXPECT_TRUE(r.pass()) << r.name << ": " << r.first_failure;
  }
}

TEST(SelfcheckProperties, CliReportsLibraryResultsOneToOne) {
  const SelfcheckOptions o{5, 4, 17};
  const auto results = run_selfcheck(o);
  std::ostringstream out, err;
  const int code = run_cli({"selfcheck", "--n", "5", "--trials", "4", "--seed", "17"}, out, err);
  EXPECT_EQ(code, kExitOk);
  const Json j = Json::parse(out.str());
  ASSERT_EQ(j["suites"].size(), results.size());
  for (std::size_t i = 0; i < results.size(); ++i) EXPECT_EQ(j["suites"][i], to_json(results[i]));
}
