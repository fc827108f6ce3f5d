#include <gtest/gtest.h>

#include <set>

#include "hornsat/lr.hpp"
#include "hornsat/pointcount.hpp"

using namespace hornsat;

namespace {

/// q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k].
std::uint64_t q_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  std::uint64_t qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;
  return q_binomial(n - 1, k - 1, q) + qk * q_binomial(n - 1, k, q);
}

}  // namespace

TEST(PointCount, GaussianBinomials) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k) EXPECT_EQ(gaussian_binomial(n, k, q), q_binomial(n, k, q));
}

TEST(PointCount, Enumeration) {
  EXPECT_EQ(enumerate_grassmannian(2, 4, 2).points.size(), 35u);
  EXPECT_EQ(enumerate_grassmannian(1, 2, 3).points.size(), 4u);
  EXPECT_EQ(enumerate_grassmannian(3, 3, 5).points.size(), 1u);
  const auto g = enumerate_grassmannian(2, 5, 3);
  EXPECT_EQ(g.points.size(), q_binomial(5, 2, 3));
  // Representatives are pairwise distinct subspaces.
  const PrimeField f(3);
  for (std::size_t a = 0; a < 40; ++a)
    for (std::size_t b = a + 1; b < g.points.size(); b += 7)
      EXPECT_EQ(rank(hstack(g.points[a], g.points[b]), f) > 2, true);
  EXPECT_THROW(enumerate_grassmannian(4, 9, 5), SizeExceeded);
  EXPECT_THROW(enumerate_grassmannian(2, 4, 4), InvalidArgument);
}

TEST(PointCount, PointConditionHasOneSolution) {
  const PrimeField f(3);
  Rng rng(2);
  const auto p = parse_problem("1,2@4");
  const auto g = enumerate_grassmannian(2, 4, 3);
  for (int t = 0; t < 5; ++t) {
    const auto flags = random_flags(1, 4, f, rng);
    const auto res = count_solutions(p, flags, g);
    EXPECT_EQ(res.count, 1u);
    EXPECT_FALSE(res.degenerate);
  }
}

TEST(PointCount, TangentNullityMatchesHomSpaceOnOpenCells) {
  const PrimeField f(5);
  Rng rng(4);
  const auto p = parse_problem("2,4;2,4;2,4;2,4@4");
  const auto g = enumerate_grassmannian(2, 4, 5);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const auto flags = random_flags(4, 4, f, rng);
    for (const auto& basis : g.points) {
      const Subspace v(basis, f);
      std::vector<FlagBasis> on_v, on_q;
      bool open = true;
      for (int j = 0; j < 4; ++j) {
        auto ind = induced_flags(v, flags[static_cast<std::size_t>(j)], f);
        open = open && ind.position == p.index(j + 1);
        on_v.push_back(std::move(ind.on_sub));
        on_q.push_back(std::move(ind.on_quotient));
      }
      if (!open) continue;
      ++checked;
      EXPECT_EQ(tangent_nullity(p, v, flags, f), hom_space(p, on_v, on_q, f).observed_rank());
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(PointCount, FourLinesOverF5) {
  const auto p = parse_problem("2,4;2,4;2,4;2,4@4");
  const auto dist = count_distribution(p, 5, 50, 1);
  int clean = 0, hits = 0;
  for (const auto& s : dist) {
    if (s.result.degenerate) continue;
    ++clean;
    EXPECT_LE(s.result.count, 2u);
    if (s.result.count == 2) ++hits;
  }
  EXPECT_GT(2 * hits, clean);
}

TEST(PointCount, InvariantUnderChangeOfBasis) {
  const PrimeField f(3);
  Rng rng(6);
  const auto g = enumerate_grassmannian(2, 4, 3);
  for (const std::string t : {"2,4;2,4;2,4;2,4@4", "1,4;1,4@4", "1,3;2,4;3,4@4"}) {
    const auto p = parse_problem(t);
    for (int k = 0; k < 5; ++k) {
      const auto flags = random_flags(p.s(), 4, f, rng);
      const Matrix h = random_invertible(4, f, rng);
      std::vector<FlagBasis> moved;
      for (const auto& e : flags) moved.emplace_back(multiply(h, e.basis(), f), f);
      const auto a = count_solutions(p, flags, g);
      const auto b = count_solutions(p, moved, g);
      EXPECT_EQ(a.count, b.count);
      EXPECT_EQ(a.degenerate, b.degenerate);
      EXPECT_EQ(a.positions, b.positions);
    }
  }
}

TEST(PointCount, NeverAboveIntersectionNumberWhenReduced) {
  const PrimeField f(3);
  const auto g = enumerate_grassmannian(2, 4, 3);
  for (const auto& p : all_problems(2, 4, 3)) {
    if (expected_dim(p) != 0) continue;
    const auto num = intersection_number(p).value;
    Rng rng(8);
    for (int k = 0; k < 3; ++k) {
      const auto res = count_solutions(p, random_flags(3, 4, f, rng), g);
      if (!res.degenerate) {
        EXPECT_LE(res.count, num) << format_problem(p);
      }
    }
  }
}

TEST(PointCount, RejectsPositiveDimensionalProblems) {
  const auto g = enumerate_grassmannian(2, 4, 2);
  const PrimeField f(2);
  Rng rng(1);
  EXPECT_THROW(count_solutions(parse_problem("2,4@4"), random_flags(1, 4, f, rng), g), InvalidArgument);
}
