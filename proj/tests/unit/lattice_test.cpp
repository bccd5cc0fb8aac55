#include <gtest/gtest.h>

#include "support.hpp"
#include "transfersys/errors.hpp"

namespace transfersys {
namespace {

using testing::s3_lattice;

GroupLattice chain(std::vector<unsigned> e) { return build_chain_product(e); }

TEST(ChainProduct, SizesAndLabels) {
  const GroupLattice L = chain({2, 1});
  EXPECT_EQ(L.size(), 6u);
  EXPECT_EQ(L.group_name(), "C_p^2*q");
  EXPECT_EQ(L.element(L.bottom()).label, "1");
  EXPECT_EQ(L.element(L.top()).label, "p^2*q");
  EXPECT_EQ(L.element(L.top()).order, 12u);
  EXPECT_EQ(L.element(L.top()).rank, 3u);
  ASSERT_TRUE(L.find("p*q"));
  EXPECT_EQ(L.element(*L.find("p*q")).order, 6u);
}

TEST(ChainProduct, ExplicitPrimes) {
  const std::vector<unsigned> e{1, 1};
  const std::vector<std::uint64_t> p{5, 7};
  const GroupLattice L = build_chain_product(e, p);
  EXPECT_EQ(L.element(L.top()).order, 35u);
  const std::vector<std::uint64_t> bad{4, 7};
  EXPECT_THROW(build_chain_product(e, bad), DomainError);
  const std::vector<std::uint64_t> twice{5, 5};
  EXPECT_THROW(build_chain_product(e, twice), DomainError);
}

TEST(ChainProduct, ZeroExponentIsTrivial) {
  EXPECT_THROW(chain({}), DomainError);
  const GroupLattice L = chain({0});
  EXPECT_EQ(L.size(), 1u);
  EXPECT_TRUE(L.nontrivial_intervals().empty());
}

TEST(ChainProduct, IntervalCount) {
  // Comparable pairs of [a] x [b]: C(a+2,2) * C(b+2,2), minus the diagonal.
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 3; ++b) {
      const GroupLattice L = chain({a, b});
      const std::size_t pairs = (a + 1) * (a + 2) / 2 * ((b + 1) * (b + 2) / 2);
      EXPECT_EQ(L.nontrivial_intervals().size(), pairs - L.size()) << a << "," << b;
    }
}

TEST(Lattice, MeetIsGreatestLowerBound) {
  for (const auto& [name, L] : testing::small_lattices()) {
    for (ElementIndex a = 0; a < L.size(); ++a)
      for (ElementIndex b = 0; b < L.size(); ++b) {
        const ElementIndex m = L.meet(a, b);
        EXPECT_TRUE(L.leq(m, a) && L.leq(m, b)) << name;
        for (ElementIndex c = 0; c < L.size(); ++c)
          if (L.leq(c, a) && L.leq(c, b)) EXPECT_TRUE(L.leq(c, m)) << name;
        EXPECT_EQ(m, L.meet(b, a));
      }
  }
}

TEST(Lattice, MeetOfChainProductIsCoordinateMinimum) {
  const GroupLattice L = chain({3, 2});
  const ElementIndex a = *L.find("p^3*q"), b = *L.find("p*q^2");
  EXPECT_EQ(L.element(L.meet(a, b)).label, "p*q");
}

TEST(Lattice, CanonicalOrderIsRankThenLabel) {
  for (const auto& [name, L] : testing::small_lattices())
    for (ElementIndex i = 1; i < L.size(); ++i) {
      const auto& a = L.element(i - 1);
      const auto& b = L.element(i);
      EXPECT_TRUE(std::tie(a.rank, a.label) < std::tie(b.rank, b.label)) << name;
    }
}

TEST(Lattice, CoversAreExactlyTheShortIntervals) {
  for (const auto& [name, L] : testing::small_lattices())
    for (const Arrow& a : L.nontrivial_intervals()) {
      bool between = false;
      for (ElementIndex c = 0; c < L.size(); ++c) between |= L.less(a.source, c) && L.less(c, a.target);
      const auto& up = L.upper_covers(a.source);
      EXPECT_EQ(std::find(up.begin(), up.end(), a.target) != up.end(), !between) << name;
    }
}

TEST(Lattice, ArrowOrbitsUnderConjugation) {
  const GroupLattice L = s3_lattice();
  const ElementIndex one = L.bottom(), a = *L.find("a"), top = L.top();
  EXPECT_EQ(L.arrow_orbit({one, a}).size(), 3u);
  EXPECT_EQ(L.arrow_orbit({a, top}).size(), 3u);
  EXPECT_EQ(L.arrow_orbit({one, top}).size(), 1u);
  EXPECT_EQ(L.arrow_orbit({*L.find("C3"), top}).size(), 1u);
}

TEST(Lattice, MeetIrreducibleClasses) {
  // [1]^n: the n coatoms. S3: one class of C2 plus C3.
  for (unsigned n = 1; n <= 5; ++n)
    EXPECT_EQ(parse_builtin_lattice("boolean:" + std::to_string(n)).meet_irreducible_classes().size(), n);
  EXPECT_EQ(s3_lattice().meet_irreducible_classes().size(), 2u);
  EXPECT_EQ(chain({2, 1}).meet_irreducible_classes().size(), 3u);
  EXPECT_EQ(chain({4}).meet_irreducible_classes().size(), 4u);
}

TEST(SubspaceLattice, ElementCountsAreGaussianSums) {
  // Sums of Gaussian binomials over k, counted by hand: 2, 5, 16, 67 for p=2.
  const std::vector<std::size_t> p2{2, 5, 16, 67};
  for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(build_subspace_lattice(2, n).size(), p2[n - 1]);
  EXPECT_EQ(build_subspace_lattice(3, 2).size(), 6u);
  EXPECT_EQ(build_subspace_lattice(3, 3).size(), 28u);
  EXPECT_THROW(build_subspace_lattice(4, 2), DomainError);
  EXPECT_EQ(build_subspace_lattice(2, 0).size(), 1u);
}

TEST(SubspaceLattice, IsModularAndComplemented) {
  const GroupLattice L = build_subspace_lattice(2, 3);
  for (ElementIndex a = 0; a < L.size(); ++a) {
    bool has_complement = false;
    for (ElementIndex b = 0; b < L.size(); ++b)
      has_complement |= L.meet(a, b) == L.bottom() && L.element(a).rank + L.element(b).rank == 3;
    EXPECT_TRUE(has_complement);
  }
}

TEST(BuiltinSource, Grammar) {
  EXPECT_EQ(parse_builtin_lattice("cyclic:1").size(), 1u);
  EXPECT_EQ(parse_builtin_lattice("cyclic:p^0").size(), 1u);
  EXPECT_EQ(parse_builtin_lattice("cyclic:p^2*q").size(), 6u);
  EXPECT_EQ(parse_builtin_lattice("cyclic:q*p^2"), parse_builtin_lattice("cyclic:p^2*q"));
  EXPECT_EQ(parse_builtin_lattice("boolean:3").size(), 8u);
  EXPECT_EQ(parse_builtin_lattice("boolean:0").size(), 1u);
  EXPECT_EQ(parse_builtin_lattice("subspace:p=2,n=3").size(), 16u);
  EXPECT_EQ(parse_cyclic_exponents("p^3*r"), (std::vector<unsigned>{3, 0, 1}));
}

TEST(BuiltinSource, Rejects) {
  for (const char* bad : {"", "cyclic:", "cyclic:p*p", "cyclic:p^", "torus:3", "boolean:x",
                          "subspace:p=4,n=2", "subspace:n=2"})
    EXPECT_THROW(parse_builtin_lattice(bad), Error) << bad;
}

LatticeData two_chain() {
  LatticeData d;
  d.group_name = "C2";
  d.elements = {{"1", 1, {}, 0}, {"C2", 2, {{2, 1}}, 0}};
  d.relation = {{0, 1}};
  return d;
}

TEST(LatticeValidation, Rejects) {
  {
    LatticeData d = two_chain();
    d.elements[1].order = 3;
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    LatticeData d = two_chain();
    d.elements[1].order_factorization = {{4, 1}};
    d.elements[1].order = 4;
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    LatticeData d = two_chain();
    d.elements[1].label = "1";
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    LatticeData d = two_chain();
    d.relation.push_back({1, 0});
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    LatticeData d = two_chain();
    d.relation.clear();
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    LatticeData d = two_chain();
    d.conj_generators = {{1, 0}};
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    LatticeData d = two_chain();
    d.conj_generators = {{0}};
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
  {
    // c and d share the lower bounds a and b, so they have no meet.
    LatticeData d;
    d.group_name = "bad";
    d.elements = {{"1", 1, {}, 0}, {"a", 2, {{2, 1}}, 0}, {"b", 2, {{2, 1}}, 0}, {"c", 4, {{2, 2}}, 0},
                  {"d", 4, {{2, 2}}, 0}, {"t", 8, {{2, 3}}, 0}};
    d.relation = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};
    EXPECT_THROW(GroupLattice::create(d), LatticeError);
  }
}

TEST(LatticeValidation, AcceptsAutomorphism) {
  EXPECT_NO_THROW(s3_lattice());
  LatticeData d = two_chain();
  d.conj_generators = {{0, 1}};
  EXPECT_NO_THROW(GroupLattice::create(d));
}

}  // namespace
}  // namespace transfersys
