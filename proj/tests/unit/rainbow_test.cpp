#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "transfersys/errors.hpp"
#include "transfersys/rainbow.hpp"

namespace transfersys {
namespace {

TEST(Rainbow, Validation) {
  EXPECT_TRUE(is_valid_rainbow(4, {{0, 4}, {1, 3}}));
  EXPECT_FALSE(is_valid_rainbow(4, {{0, 3}, {1, 4}}));
  EXPECT_FALSE(is_valid_rainbow(4, {{0, 4}, {0, 3}}));
  EXPECT_FALSE(is_valid_rainbow(4, {{0, 5}}));
  EXPECT_FALSE(is_valid_rainbow(4, {{2, 2}}));
  EXPECT_THROW(Rainbow(4, {{0, 3}, {1, 4}}), DomainError);
  EXPECT_EQ(Rainbow(5, {{1, 4}, {0, 5}}).to_string(), "{0->5, 1->4}");
}

TEST(Rainbow, TrinomialCountsBooleanArrows) {
  // Count arrows of [1]^n by endpoint ranks directly from the lattice.
  for (unsigned n = 1; n <= 5; ++n) {
    const GroupLattice L = parse_builtin_lattice("boolean:" + std::to_string(n));
    std::vector<std::vector<std::uint64_t>> by_rank(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (const Arrow& a : L.nontrivial_intervals()) ++by_rank[L.element(a.source).rank][L.element(a.target).rank];
    for (unsigned x = 0; x <= n; ++x)
      for (unsigned y = x + 1; y <= n; ++y) EXPECT_EQ(trinomial(n, x, y), by_rank[x][y]) << n << x << y;
  }
  EXPECT_EQ(trinomial(6, 2, 4), 90);
  EXPECT_EQ(multinomial3(6, 1, 2, 3), 60);
}

TEST(Rainbow, CanonicalMaximizers) {
  EXPECT_EQ(canonical_max_rainbows(5), (std::vector<Rainbow>{Rainbow(5, {{0, 5}, {1, 4}, {2, 3}})}));
  EXPECT_EQ(canonical_max_rainbows(4),
            (std::vector<Rainbow>{rainbow_excluding(4, 0), rainbow_excluding(4, 4)}));
  EXPECT_EQ(canonical_max_rainbows(8), (std::vector<Rainbow>{rainbow_excluding(8, 4)}));
  EXPECT_EQ(rainbow_excluding(4, 0).to_string(), "{1->4, 2->3}");
}

TEST(Rainbow, BruteForceMatchesFormula) {
  // Exhaustive maxima for n = 2..6, computed by hand from the trinomials:
  // 2, 7, 16, 51, 126.
  const std::vector<int> small{2, 7, 16, 51, 126};
  for (unsigned n = 1; n <= 12; ++n) {
    const MaxRainbowSearch s = brute_force_max_rainbow(n);
    EXPECT_EQ(s.size, square_free_complexity_lower(n)) << n;
    std::vector<Rainbow> canon = canonical_max_rainbows(n);
    std::sort(canon.begin(), canon.end());
    EXPECT_EQ(s.argmax, canon) << n;
    if (n >= 2 && n <= 6) EXPECT_EQ(s.size, small[n - 2]);
    for (const Rainbow& r : s.argmax) EXPECT_EQ(rainbow_size(r), s.size);
  }
}

TEST(Rainbow, ArcOperations) {
  const Rainbow r(6, {{1, 3}});
  EXPECT_EQ(apply_arc_op(r, ArcOp::translate_right, 0), Rainbow(6, {{2, 4}}));
  EXPECT_THROW(apply_arc_op(r, ArcOp::translate_left, 0), DomainError);
  EXPECT_EQ(apply_arc_op(r, ArcOp::contract_left, 0), Rainbow(6, {{2, 3}}));
  EXPECT_THROW(apply_arc_op(r, ArcOp::contract_right, 0), DomainError);
  EXPECT_EQ(apply_arc_op(r, ArcOp::expand_right, 0), Rainbow(6, {{1, 4}}));
  EXPECT_THROW(apply_arc_op(r, ArcOp::expand_left, 0), DomainError);
  // Blocked endpoint.
  EXPECT_THROW(apply_arc_op(Rainbow(6, {{0, 5}, {1, 4}}), ArcOp::translate_right, 1), DomainError);
}

TEST(Rainbow, ArcOperationsNeverShrink) {
  // Each operation's condition is exactly the one under which the arc's
  // trinomial does not decrease.
  for (unsigned n = 2; n <= 10; ++n)
    for (unsigned x = 0; x <= n; ++x)
      for (unsigned y = x + 1; y <= n; ++y)
        for (ArcOp op : {ArcOp::translate_left, ArcOp::translate_right, ArcOp::contract_left,
                         ArcOp::contract_right, ArcOp::expand_left, ArcOp::expand_right}) {
          const Rainbow r(n, {{x, y}});
          try {
            const Rainbow s = apply_arc_op(r, op, 0);
            EXPECT_GE(rainbow_size(s), rainbow_size(r)) << r.to_string() << ' ' << to_string(op);
          } catch (const DomainError&) {
          }
        }
}

TEST(Rainbow, Blocks) {
  const Rainbow r(9, {{0, 9}, {1, 8}, {2, 6}, {4, 5}});
  EXPECT_EQ(left_block(r), (Block{0, 3}));
  EXPECT_EQ(right_block(r), (Block{0, 2}));
  EXPECT_EQ(outer_block(r), (Block{0, 2}));
  EXPECT_EQ(apply_block_op(r, BlockOp::reflect, {}), Rainbow(9, {{0, 9}, {1, 8}, {3, 7}, {4, 5}}));
}

TEST(Rainbow, BlockTranslate) {
  const Rainbow r(8, {{0, 5}, {1, 4}});
  EXPECT_EQ(apply_block_op(r, BlockOp::translate_right, {0, 2}), Rainbow(8, {{1, 6}, {2, 5}}));
  EXPECT_THROW(apply_block_op(r, BlockOp::translate_left, {0, 2}), DomainError);
}

TEST(Rainbow, BlockContractAndExpand) {
  // Outer arc 0 -> n - 1.
  const Rainbow a(7, {{0, 6}, {1, 5}});
  EXPECT_EQ(apply_block_op(a, BlockOp::contract_left, {0, 2}), Rainbow(7, {{1, 6}, {2, 5}}));
  // 0 -> n with few inner arcs.
  const Rainbow b(10, {{0, 10}, {1, 9}});
  EXPECT_EQ(apply_block_op(b, BlockOp::contract_left, {0, 2}), Rainbow(10, {{1, 10}, {2, 9}}));
  // 0 -> n with many inner arcs is not contractible; the part of the right
  // block past the left block expands instead.
  const Rainbow e(15, {{0, 15}, {1, 14}, {2, 13}, {3, 12}, {4, 11}, {5, 10}, {7, 9}});
  EXPECT_EQ(left_block(e), (Block{0, 6}));
  EXPECT_EQ(right_block(e), (Block{0, 7}));
  EXPECT_THROW(apply_block_op(e, BlockOp::contract_left, outer_block(e)), DomainError);
  EXPECT_EQ(apply_block_op(e, BlockOp::expand_left, {6, 7}),
            Rainbow(15, {{0, 15}, {1, 14}, {2, 13}, {3, 12}, {4, 11}, {5, 10}, {6, 9}}));
  EXPECT_THROW(apply_block_op(b, BlockOp::expand_left, {1, 2}), DomainError);
}

TEST(Rainbow, NormalizationReachesComposable) {
  std::mt19937_64 rng(99);
  for (unsigned n = 2; n <= 12; ++n) {
    const unsigned max_arcs = (n + 1) / 2 - 1;
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<unsigned> classes(n + 1);
      std::iota(classes.begin(), classes.end(), 0u);
      std::shuffle(classes.begin(), classes.end(), rng);
      const unsigned k = std::uniform_int_distribution<unsigned>(0, max_arcs)(rng);
      std::vector<unsigned> ends(classes.begin(), classes.begin() + 2 * k);
      std::sort(ends.begin(), ends.end());
      std::vector<Arc> arcs;
      for (unsigned i = 0; i < k; ++i) arcs.push_back({ends[i], ends[2 * k - 1 - i]});
      const Rainbow r(n, arcs);
      const NormalizeResult res = normalize_to_composable(r);
      EXPECT_TRUE(is_composable(res.result)) << r.to_string();
      EXPECT_GE(rainbow_size(res.result), rainbow_size(r)) << r.to_string();
      EXPECT_EQ(res.result.arc_count(), r.arc_count());
      std::size_t non_reflect = 0;
      for (const auto& s : res.ops_used) non_reflect += s.op != BlockOp::reflect;
      EXPECT_LE(non_reflect, 4u) << r.to_string();
    }
  }
}

TEST(Rainbow, NormalizationRequiresFewArcs) {
  EXPECT_THROW(normalize_to_composable(Rainbow(5, {{0, 5}, {1, 4}, {2, 3}})), DomainError);
}

TEST(Rainbow, ComposableExamples) {
  EXPECT_TRUE(is_composable(Rainbow(4, {})));
  EXPECT_FALSE(is_composable(Rainbow(3, {{0, 3}, {1, 2}})));
  EXPECT_TRUE(is_composable(Rainbow(5, {{0, 5}, {2, 3}})));
  EXPECT_FALSE(is_composable(Rainbow(4, {{0, 4}, {1, 2}})));
}

TEST(Progressions, ClosedFormMatchesBruteForce) {
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(ap3_count(n), ap3_count_brute(n)) << n;
}

TEST(Riordan, FirstValues) {
  // Counted independently: Motzkin paths without flat steps at level zero.
  const std::vector<int> expected{1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603};
  const auto got = riordan_numbers(10);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(got[i], expected[i]) << i;
}

TEST(Riordan, InequalitySides) {
  // Direct sums for small n: (2, 1), (6, 7), (16, 13), (1016, 1037).
  EXPECT_EQ(riordan_inequality_sides(2), std::make_pair(BigInt(2), BigInt(1)));
  EXPECT_EQ(riordan_inequality_sides(3), std::make_pair(BigInt(6), BigInt(7)));
  EXPECT_EQ(riordan_inequality_sides(4), std::make_pair(BigInt(16), BigInt(13)));
  EXPECT_EQ(riordan_inequality_sides(8), std::make_pair(BigInt(1016), BigInt(1037)));
  for (unsigned n = 3; n <= 20; ++n) {
    if (n % 2 == 0 && n < 8) continue;
    const auto [raised, plain] = riordan_inequality_sides(n);
    EXPECT_LT(raised, plain) << n;
  }
}

TEST(Gaussian, MatchesSubspaceCounts) {
  for (std::uint64_t p : {2u, 3u})
    for (unsigned n = 0; n <= 4; ++n) {
      if (p == 3 && n == 4) continue;
      const GroupLattice L = build_subspace_lattice(p, n);
      std::vector<std::uint64_t> per_rank(n + 1, 0);
      for (const auto& e : L.elements()) ++per_rank[e.rank];
      for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(gaussian_binomial(n, k, p), per_rank[k]) << p << n << k;
    }
  EXPECT_THROW(gaussian_binomial(3, 5, 2), DomainError);
}

TEST(Gaussian, ElementaryAbelianLowerSmallCases) {
  EXPECT_EQ(elementary_abelian_lower(0, 2), 0);
  EXPECT_EQ(elementary_abelian_lower(1, 2), 1);
  // p = 2, n = 2: G(2,0) G(2,1) = 3.
  EXPECT_EQ(elementary_abelian_lower(2, 2), 3);
}

}  // namespace
}  // namespace transfersys
