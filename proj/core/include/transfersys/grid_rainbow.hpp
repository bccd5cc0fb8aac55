#pragma once

#include <cstdint>
#include <vector>

#include "transfersys/basis.hpp"
#include "transfersys/closure.hpp"
#include "transfersys/lattice.hpp"

namespace transfersys {

// Rank of a two-coordinate grid point (a, x) is a + x.
struct GridPoint {
  unsigned a = 0;
  unsigned x = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Element of build_chain_product({n, m}) at exponents (a, x).
ElementIndex grid_element(const GroupLattice& grid, GridPoint pt);
GridPoint grid_coordinates(const GroupLattice& grid, ElementIndex e);

// Complexity of the [n] x [1] grid: 3k+1 for n = 2k, 3k+2 for n = 2k+1.
std::size_t cpnq_complexity(unsigned n);
// Preimage of the nested rank arcs on [n] x [1]; tables must come from
// build_chain_product({n, 1}).
GeneratingSet cpnq_witness_rainbow(const ArrowTables& tables, unsigned n);

// Rank images form a rainbow (repeated arcs allowed) and no two arrows are
// conjugate.
bool is_partial_rainbow(const ArrowTables& tables, const GeneratingSet& set);

struct RainbowNumber {
  std::uint64_t closed_form = 0;
  std::uint64_t enumerated = 0;
};
// Both paths computed; throws CrossCheckError if they disagree.
RainbowNumber sr_number(unsigned n, unsigned m);
RainbowNumber dr_number(unsigned n, unsigned m);
std::uint64_t sr_closed_form(unsigned n, unsigned m);
std::uint64_t dr_closed_form(unsigned n, unsigned m);
// Nontrivial intervals of [n] x [m] whose endpoint ranks sum to twice_mid.
std::uint64_t midpoint_family_size(unsigned n, unsigned m, unsigned twice_mid);
std::vector<Arrow> midpoint_family(const GroupLattice& grid, unsigned twice_mid);

// Double rainbow with its length-two composites of the marked edges replaced
// by those edges. n >= m >= 2, n + m even; tables from build_chain_product({n, m}).
GeneratingSet double_rainbow_augmented(const ArrowTables& tables, unsigned n, unsigned m);

// Conjectured complexity of the [n] x [m] grid, exposed as a lower bound.
std::uint64_t conjectured_cpnqm_complexity(unsigned n, unsigned m);

}  // namespace transfersys
