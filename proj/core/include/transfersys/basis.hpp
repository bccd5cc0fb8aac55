#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "transfersys/arrow_set.hpp"
#include "transfersys/closure.hpp"
#include "transfersys/enumerator.hpp"

namespace transfersys {

using GeneratingSet = std::vector<ArrowIndex>;  // sorted arrow indices

enum class BasisPath { reverse_reduction, greedy_fallback };

struct BasisResult {
  GeneratingSet arrows;
  BasisPath path = BasisPath::reverse_reduction;
};

// Minimal generating set by reduction: drop composites, drop proper
// restrictions of surviving arrows, keep the least arrow of each orbit.
// The result is verified; greedy elimination takes over if it fails.
// Throws NotClosedError when `system` is not a transfer system.
BasisResult minimal_basis(const ArrowTables& tables, const ArrowSet& system);
std::size_t basis_size(const ArrowTables& tables, const ArrowSet& system);

// Greedy elimination alone: drop arrows while the closure is unchanged.
GeneratingSet greedy_basis(const ArrowTables& tables, const ArrowSet& system);

// True when no arrow of `set` lies in the closure of the others.
bool is_independent(const ArrowTables& tables, const GeneratingSet& set);

// Every inclusion-minimal generating subset of `system`, by branch and
// bound. Throws CapExceeded when the system has more than `cap` arrows.
std::vector<GeneratingSet> all_minimal_bases(const ArrowTables& tables,
                                             const ArrowSet& system,
                                             std::size_t cap = 20);

using LevelProfile = std::map<unsigned, std::size_t>;
// Number of arrows of `set` per source rank.
LevelProfile level_profile(const ArrowTables& tables, const GeneratingSet& set);

// Number of conjugacy classes of meet-irreducible elements.
std::size_t width(const GroupLattice& lattice);
// Width compared against the basis size of the complete system; throws
// CrossCheckError on disagreement.
std::size_t checked_width(const ArrowTables& tables);

struct ComplexityResult {
  std::size_t value = 0;
  std::vector<ArrowSet> realizers;  // canonical order
  std::uint64_t total_systems = 0;
  std::vector<std::uint64_t> stratum_counts;
  // Systems whose discovery layer differs from their basis size.
  std::uint64_t stratum_mismatches = 0;
  std::uint64_t fallback_uses = 0;
};

ComplexityResult complexity(const ArrowTables& tables, unsigned jobs = 1);

}  // namespace transfersys
