#include <gtest/gtest.h>

#include "support.hpp"
#include "transfersys/basis.hpp"
#include "transfersys/enumerator.hpp"

namespace transfersys {
namespace {

GroupLattice fixture(const char* name) { return load_lattice_file(testing::data_path(name)); }

std::string kind(const GroupLattice& L, ElementIndex e) {
  const std::string& label = L.element(e).label;
  return label.substr(0, label.rfind('_'));
}

TEST(Fixtures, SubgroupCounts) {
  EXPECT_EQ(fixture("s4.lattice.json").size(), 30u);
  EXPECT_EQ(fixture("f8.lattice.json").size(), 25u);
  EXPECT_EQ(fixture("s5.lattice.json").size(), 156u);
}

TEST(Fixtures, S4TransferSystems) {
  const GroupLattice L = fixture("s4.lattice.json");
  EXPECT_EQ(count(ArrowTables(L), 4), 8691u);
}

TEST(Fixtures, Widths) {
  EXPECT_EQ(checked_width(testing::OwnedTables(fixture("f8.lattice.json"))), 3u);
  EXPECT_EQ(checked_width(testing::OwnedTables(fixture("s5.lattice.json"))), 7u);
  EXPECT_EQ(checked_width(testing::OwnedTables(fixture("s4.lattice.json"))), 5u);
}

TEST(Fixtures, S5MeetIrreducibleKinds) {
  const GroupLattice L = fixture("s5.lattice.json");
  std::multiset<std::string> kinds;
  for (ElementIndex e : L.meet_irreducible_classes()) kinds.insert(kind(L, e));
  EXPECT_EQ(kinds, (std::multiset<std::string>{"F5", "A5", "S4", "D12", "D8", "C6", "C5"}));
}

TEST(Fixtures, S5MeetOfF5AndD8) {
  // Some conjugates of a Frobenius group of order 20 and a dihedral group of
  // order 8 meet in a cyclic group of order 4.
  const GroupLattice L = fixture("s5.lattice.json");
  bool found = false;
  for (ElementIndex a = 0; a < L.size(); ++a)
    for (ElementIndex b = 0; b < L.size(); ++b)
      if (kind(L, a) == "F5" && kind(L, b) == "D8") found |= kind(L, L.meet(a, b)) == "C4";
  EXPECT_TRUE(found);
}

TEST(Fixtures, ConjugationOrbitSizes) {
  const GroupLattice L = fixture("s4.lattice.json");
  std::map<ElementIndex, std::size_t> orbit;
  for (ElementIndex id : L.element_orbit_ids()) ++orbit[id];
  // S4 has eleven conjugacy classes of subgroups.
  EXPECT_EQ(orbit.size(), 11u);
}

}  // namespace
}  // namespace transfersys
