#include <gtest/gtest.h>

#include <algorithm>

#include "hornsat/horn_criterion.hpp"

using namespace hornsat;

namespace {

SchubertIndex idx(int n, std::vector<int> e) { return {n, std::move(e)}; }

}  // namespace

TEST(Horn, FailingExampleHasWitness) {
  TableCache cache;
  const auto v = horn_decide(parse_problem("1,4;2,3@4"), HornMode::B, cache);
  EXPECT_FALSE(v.nonzero);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->d, 1);
  EXPECT_EQ(v.witness->ktuple, (std::vector<SchubertIndex>{idx(2, {1}), idx(2, {2})}));
  EXPECT_EQ(v.witness->value, 1);
}

TEST(Horn, PassingExample) {
  TableCache cache;
  for (HornMode m : {HornMode::B, HornMode::C}) {
    const auto v = horn_decide(parse_problem("1,4;2,4@4"), m, cache);
    EXPECT_TRUE(v.nonzero);
    EXPECT_FALSE(v.witness.has_value());
    EXPECT_EQ(v.mode, m);
  }
}

TEST(Horn, TrivialCases) {
  TableCache cache;
  EXPECT_TRUE(horn_decide(parse_problem("3,4@4"), HornMode::B, cache).nonzero);
  EXPECT_TRUE(horn_decide(parse_problem("1@1"), HornMode::B, cache).nonzero);
  // Gr(1,n): only the codimension condition.
  EXPECT_TRUE(horn_decide(parse_problem("2;2@3"), HornMode::B, cache).nonzero);
  EXPECT_FALSE(horn_decide(parse_problem("1;2@3"), HornMode::B, cache).nonzero);
}

TEST(Horn, TablesAndInequalityLists) {
  TableCache cache;
  const auto& t = build_table(1, 1, 2, cache);
  EXPECT_EQ(t.tuples.size(), 1u);
  const auto ineq = enumerate_inequalities(1, 3, 2, HornMode::B, cache);
  ASSERT_EQ(ineq.size(), 1u);
  EXPECT_EQ(ineq.front().d, 1);
  // Gr(1,2): every pair of points of [2] with sum of codims <= 1 is nonvanishing.
  const auto& t12 = build_table(1, 2, 2, cache);
  EXPECT_EQ(t12.tuples.size(), 3u);
  EXPECT_EQ(t12.point_tuples.size(), 2u);
  for (int s : {2, 3}) {
    const auto b = enumerate_inequalities(2, 4, s, HornMode::B, cache);
    const auto c = enumerate_inequalities(2, 4, s, HornMode::C, cache);
    EXPECT_LE(c.size(), b.size());
    for (const auto& lab : c) EXPECT_NE(std::find(b.begin(), b.end(), lab), b.end());
  }
}

TEST(Horn, DepthBound) {
  TableCache cache(2);
  EXPECT_THROW(horn_decide(parse_problem("4,5,6;4,5,6@6"), HornMode::B, cache), DepthExceeded);
  EXPECT_NO_THROW(horn_decide(parse_problem("2,4;2,4@4"), HornMode::B, cache));
}

TEST(Horn, MatchesOracleOnSmallGrassmannians) {
  TableCache cache;
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 5}}) {
    for (int s : {2, 3}) {
      for (const auto& p : all_problems(r, n, s)) {
        const bool truth = is_nonzero_product(p);
        const auto b = horn_decide(p, HornMode::B, cache);
        const auto c = horn_decide(p, HornMode::C, cache);
        ASSERT_EQ(b.nonzero, truth) << format_problem(p);
        ASSERT_EQ(c.nonzero, truth) << format_problem(p);
        for (const auto& v : {b, c}) {
          if (v.nonzero) continue;
          // Counterexamples certify themselves.
          ASSERT_TRUE(v.witness.has_value());
          EXPECT_GT(v.witness->value, 0);
          EXPECT_EQ(horn_lhs(p, v.witness->ktuple).value, v.witness->value);
          const auto& labels = build_table(v.witness->d, r, s, cache).labels(v.mode);
          EXPECT_NE(std::find(labels.begin(), labels.end(), v.witness->ktuple), labels.end());
        }
      }
    }
  }
}

TEST(Horn, PointTuplesHaveIntersectionNumberOne) {
  TableCache cache;
  for (int d = 1; d <= 3; ++d) {
    const auto& t = build_table(d, 4, 3, cache);
    for (const auto& k : t.point_tuples) {
      const auto num = intersection_number(ProblemTuple(d, 4, k));
      EXPECT_TRUE(num.top_degree);
      EXPECT_EQ(num.value, 1);
    }
    for (const auto& k : t.tuples) EXPECT_TRUE(is_nonzero_product(ProblemTuple(d, 4, k)));
  }
}

TEST(Horn, CacheIsReused) {
  TableCache cache;
  horn_decide(parse_problem("2,4,6;2,4,6@6"), HornMode::B, cache);
  const auto before = cache.size();
  horn_decide(parse_problem("1,4,6;2,4,6@6"), HornMode::C, cache);
  EXPECT_EQ(cache.size(), before);
  EXPECT_EQ(&build_table(2, 3, 2, cache), &build_table(2, 3, 2, cache));
}
