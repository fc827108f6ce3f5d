#include <gtest/gtest.h>

#include "hornsat/lr.hpp"
#include "hornsat/probe.hpp"

using namespace hornsat;

namespace {

SchubertIndex idx(int n, std::vector<int> e) { return {n, std::move(e)}; }

const PrimeField F;

FlagBasis coordinate_flag(int m) { return {Matrix::identity(m), F}; }

/// Span of random combinations of random flag vectors, so positions vary.
Subspace structured_subspace(const FlagBasis& e, int d, Rng& rng) {
  const int m = e.dim();
  while (true) {
    Matrix b(m, d);
    for (int c = 0; c < d; ++c) {
      const int top = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
      for (int k = 0; k < top; ++k) {
        if (rng() % 2) continue;
        const std::uint32_t x = F.random(rng);
        for (int i = 0; i < m; ++i) b(i, c) = F.add(b(i, c), F.mul(x, e.basis()(i, k)));
      }
    }
    if (rank(b, F) == d) return {b, F};
  }
}

}  // namespace

TEST(Probe, RandomFlagsAreInvertible) {
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) EXPECT_EQ(rank(random_flag(6, F, rng).basis(), F), 6);
  const auto one = random_flag(1, F, rng);
  EXPECT_NE(one.basis()(0, 0), 0u);
  Rng a(1), b(2);
  EXPECT_NE(random_flag(5, F, a).basis(), random_flag(5, F, b).basis());
}

TEST(Probe, SchubertPositionBasics) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto e = random_flag(6, F, rng);
    EXPECT_EQ(schubert_position(Subspace(e.part(3), F), e, F), SchubertIndex::point(3, 6));
    EXPECT_EQ(schubert_position(Subspace(random_matrix(6, 3, F, rng), F), e, F), SchubertIndex::fundamental(3, 6));
  }
  // Staircase: dim(S cap E_a) climbs by 0 or 1 and jumps exactly at the index.
  for (int t = 0; t < 200; ++t) {
    const auto e = random_flag(7, F, rng);
    const int d = 1 + static_cast<int>(rng() % 6);
    const auto s = structured_subspace(e, d, rng);
    const auto pos = schubert_position(s, e, F);
    int prev = 0;
    for (int a = 1; a <= 7; ++a) {
      const int cur = intersect_column_spaces(s.basis(), e.part(a), F).cols();
      EXPECT_TRUE(cur == prev || cur == prev + 1);
      EXPECT_EQ(cur > prev, pos.contains(a));
      prev = cur;
    }
    EXPECT_EQ(prev, d);
  }
}

TEST(Probe, InducedFlagsOnFlagMember) {
  Rng rng(9);
  const auto e = random_flag(5, F, rng);
  const Subspace v(e.part(2), F);
  const auto ind = induced_flags(v, e, F);
  EXPECT_EQ(ind.position, SchubertIndex::point(2, 5));
  EXPECT_EQ(ind.on_sub.dim(), 2);
  EXPECT_EQ(ind.on_quotient.dim(), 3);
  // E_a(V) = E_a for a <= 2.
  for (int a = 1; a <= 2; ++a)
    EXPECT_TRUE(column_space_contains(e.part(a), multiply(v.basis(), ind.on_sub.part(a), F), F));
  // Quotient flag is the image of E_3 < E_4 < E_5.
  for (int b = 1; b <= 3; ++b) {
    const Matrix img = multiply(ind.frame.projection, e.part(2 + b), F);
    EXPECT_EQ(rank(img, F), b);
    EXPECT_TRUE(column_space_contains(img, ind.on_quotient.part(b), F));
  }
}

TEST(Probe, QuotientFrame) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Subspace v(random_matrix(6, 2, F, rng), F);
    const auto fr = quotient_frame(v, F);
    EXPECT_TRUE(multiply(fr.projection, v.basis(), F).is_zero());
    EXPECT_EQ(multiply(fr.projection, fr.section, F), Matrix::identity(4));
  }
}

TEST(Probe, CompositionOfPositions) {
  // The position of S in W equals its position in V (induced flag) pushed
  // through the position of V.
  Rng rng(13);
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int d = static_cast<int>(rng() % static_cast<unsigned>(r + 1));
    const auto e = random_flag(n, F, rng);
    const auto v = structured_subspace(e, r, rng);
    const auto sv = d == 0 ? Subspace(Matrix(r, 0), F) : structured_subspace(FlagBasis(Matrix::identity(r), F), d, rng);
    const Subspace s(multiply(v.basis(), sv.basis(), F), F);
    const auto ind = induced_flags(v, e, F);
    const Subspace s_in_v(solve_in_basis(v.basis(), s.basis(), F), F);
    const auto k = schubert_position(s_in_v, ind.on_sub, F);
    EXPECT_EQ(compose_positions(k, ind.position), schubert_position(s, e, F));
  }
}

TEST(Probe, HomSpaceRanks) {
  Rng rng(17);
  auto rank_of = [&](const std::string& t) {
    const auto p = parse_problem(t);
    const auto fl = random_probe_flags(p, F, rng);
    return hom_space(p, fl.on_v, fl.on_q, F).observed_rank();
  };
  EXPECT_EQ(rank_of("1,4;2,3@4"), 1);
  EXPECT_EQ(rank_of("1,4;2,4@4"), 1);
  EXPECT_EQ(rank_of("1,4,5,6;2,3,5,6@6"), 4);
  EXPECT_EQ(rank_of("3,4;3,4@4"), 4);
  EXPECT_EQ(rank_of("4,5,6;4,5,6;4,5,6@6"), 9);
  EXPECT_EQ(rank_of("2,4@4"), 3);
}

TEST(Probe, HomSpaceElementsSatisfyConstraints) {
  Rng rng(19);
  const auto p = parse_problem("2,4,6;2,5,6@6");
  const auto fl = random_probe_flags(p, F, rng);
  const auto h = hom_space(p, fl.on_v, fl.on_q, F);
  EXPECT_EQ(h.constraint_count, total_codim(p));
  ASSERT_GT(h.observed_rank(), 0);
  for (const auto& phi : h.kernel_basis)
    for (int j = 1; j <= p.s(); ++j)
      for (int a = 1; a <= p.r(); ++a) {
        const Matrix img = multiply(phi, fl.on_v[static_cast<std::size_t>(j - 1)].part(a), F);
        EXPECT_TRUE(column_space_contains(fl.on_q[static_cast<std::size_t>(j - 1)].part(p.index(j).at(a) - a), img, F));
      }
}

TEST(Probe, CertifyExamples) {
  Rng rng(23);
  EXPECT_EQ(certify_nonzero(parse_problem("1,4;2,4@4"), 3, F, rng).outcome, ProbeOutcome::certified_nonzero);
  EXPECT_EQ(certify_nonzero(parse_problem("2,4@4"), 3, F, rng).outcome, ProbeOutcome::certified_nonzero);
  const auto z = certify_nonzero(parse_problem("1,4;2,3@4"), 5, F, rng);
  EXPECT_EQ(z.outcome, ProbeOutcome::inconclusive);
  EXPECT_EQ(z.observed_ranks, std::vector<int>(5, 1));
  EXPECT_EQ(certify_nonzero(parse_problem("1,2;1,2@4"), 3, F, rng).outcome, ProbeOutcome::inconclusive);
  EXPECT_THROW(certify_nonzero(parse_problem("1,4;2,4@4"), 0, F, rng), InvalidArgument);
}

TEST(Probe, SoundOnSmallGrassmannians) {
  Rng rng(29);
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}})
    for (int s : {2, 3})
      for (const auto& p : all_problems(r, n, s))
        if (certify_nonzero(p, 2, F, rng).outcome == ProbeOutcome::certified_nonzero) {
          EXPECT_TRUE(is_nonzero_product(p)) << format_problem(p);
        }
}

TEST(Probe, RankNeverBelowExpectedOnSpecialFlags) {
  // Identical, coordinate, permuted-coordinate and sparse flags.
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int s = 1 + static_cast<int>(rng() % 3);
    std::vector<SchubertIndex> is;
    const auto choices = all_indices(r, n);
    for (int j = 0; j < s; ++j) is.push_back(choices[rng() % choices.size()]);
    const ProblemTuple p(r, n, is);
    ProbeFlags fl;
    const int kind = t % 4;
    for (int j = 0; j < s; ++j) {
      if (kind == 0) {
        fl.on_v.push_back(coordinate_flag(r));
        fl.on_q.push_back(coordinate_flag(n - r));
      } else if (kind == 1) {
        Rng same(t);
        fl.on_v.push_back(random_flag(r, F, same));
        fl.on_q.push_back(random_flag(n - r, F, same));
      } else if (kind == 2) {
        auto perm = [&](int m) {
          std::vector<int> order(static_cast<std::size_t>(m));
          std::iota(order.begin(), order.end(), 0);
          std::shuffle(order.begin(), order.end(), rng);
          Matrix b(m, m);
          for (int i = 0; i < m; ++i) b(order[static_cast<std::size_t>(i)], i) = 1;
          return FlagBasis(b, F);
        };
        fl.on_v.push_back(perm(r));
        fl.on_q.push_back(perm(n - r));
      } else {
        auto sparse = [&](int m) {
          while (true) {
            Matrix b(m, m);
            for (int i = 0; i < m; ++i)
              for (int k = 0; k < m; ++k)
                if (rng() % 3 == 0) b(i, k) = 1 + static_cast<std::uint32_t>(rng() % 2);
            if (rank(b, F) == m) return FlagBasis(b, F);
          }
        };
        fl.on_v.push_back(sparse(r));
        fl.on_q.push_back(sparse(n - r));
      }
    }
    EXPECT_GE(hom_space(p, fl.on_v, fl.on_q, F).observed_rank(), expected_dim(p)) << format_problem(p);
  }
}

TEST(Probe, KernelElementExamples) {
  struct Case {
    std::string problem;
    int d;
    std::vector<SchubertIndex> k;
  };
  const std::vector<Case> cases{
      {"1,4;2,3@4", 1, {idx(2, {1}), idx(2, {2})}},
      {"1,4;2,4@4", 1, {idx(2, {1}), idx(2, {2})}},
      {"1,4,5,6;2,3,5,6@6", 2, {idx(4, {1, 4}), idx(4, {2, 4})}},
      {"2,4@4", 0, {idx(2, {})}},
  };
  for (const auto& c : cases) {
    const auto p = parse_problem(c.problem);
    Rng rng(37);
    const auto fl = random_probe_flags(p, F, rng);
    const auto h = hom_space(p, fl.on_v, fl.on_q, F);
    const auto ks = generic_kernel_element(p, h, fl.on_v, F, rng);
    EXPECT_EQ(ks.d, c.d) << c.problem;
    EXPECT_EQ(ks.positions, c.k) << c.problem;
    EXPECT_EQ(h.observed_rank(), expected_dim(p) + ks.kernel_excess + ks.lhs);
  }
}

TEST(Probe, KernelElementRejectsInconsistentFlags) {
  // Identical coordinate flags put the kernel in a cell that is too small.
  const auto p = parse_problem("1,4;2,3@4");
  ProbeFlags fl{{coordinate_flag(2), coordinate_flag(2)}, {coordinate_flag(2), coordinate_flag(2)}};
  Rng rng(41);
  const auto h = hom_space(p, fl.on_v, fl.on_q, F);
  EXPECT_THROW(generic_kernel_element(p, h, fl.on_v, F, rng), GenericityFailure);
}

TEST(Probe, FiltrationExamples) {
  struct Case {
    std::string problem;
    std::vector<int> dims;
    std::vector<SchubertIndex> last_in_n;
  };
  const std::vector<Case> cases{
      {"1,4;2,3@4", {2, 1}, {idx(4, {1}), idx(4, {3})}},
      {"1,4;2,4@4", {2, 1}, {idx(4, {1}), idx(4, {4})}},
      {"1,4,5,6;2,3,5,6@6", {4, 2, 1}, {idx(6, {1}), idx(6, {6})}},
      {"2,4@4", {2, 0}, {idx(4, {})}},
      {"3,4@4", {2, 0}, {idx(4, {})}},
  };
  for (const auto& c : cases) {
    const auto p = parse_problem(c.problem);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto a = analyze_problem(p, F, seed);
      EXPECT_EQ(a.filtration.dims(), c.dims) << c.problem;
      EXPECT_EQ(composed_positions(a.filtration, p, a.filtration.depth()), c.last_in_n) << c.problem;
      EXPECT_TRUE(a.check.ok()) << c.problem;
    }
  }
}

TEST(Probe, ZeroRankGivesEmptyFiltration) {
  const auto p = parse_problem("2,4;2,4;2,4;2,4@4");
  const auto a = analyze_problem(p, F, 3);
  EXPECT_EQ(a.rank, 0);
  EXPECT_EQ(a.filtration.depth(), 0);
  EXPECT_TRUE(a.check.ok());
}

TEST(Probe, MutatedCertificateFails) {
  for (const std::string t : {"1,4;2,3@4", "1,4,5,6;2,3,5,6@6", "1,4;2,4@4"}) {
    const auto p = parse_problem(t);
    Rng rng(43);
    const auto fl = random_probe_flags(p, F, rng);
    auto cert = build_filtration(p, fl, F, rng);
    ASSERT_TRUE(verify_filtration(cert, p, fl, F).ok());
    cert.chain.pop_back();
    cert.maps.pop_back();
    cert.positions.pop_back();
    const auto chk = verify_filtration(cert, p, fl, F);
    EXPECT_FALSE(chk.ok());
    EXPECT_TRUE(!chk.clause_i || !chk.clause_iii);
  }
  // A map that breaks the flag conditions fails clause (ii).
  const auto p = parse_problem("1,4;2,4@4");
  Rng rng(47);
  const auto fl = random_probe_flags(p, F, rng);
  auto cert = build_filtration(p, fl, F, rng);
  cert.maps[0] = multiply(random_invertible(2, F, rng), cert.maps[0], F);
  EXPECT_FALSE(verify_filtration(cert, p, fl, F).clause_ii);
}

TEST(Probe, FiltrationAcrossSweep) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}})
    for (const auto& p : all_problems(r, n, 2)) {
      const auto a = analyze_problem(p, F, 101);
      EXPECT_TRUE(a.check.ok()) << format_problem(p);
    }
}
