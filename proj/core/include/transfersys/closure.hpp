#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "transfersys/arrow_set.hpp"
#include "transfersys/lattice.hpp"

namespace transfersys {

using ArrowIndex = std::uint32_t;

struct CompositionEntry {
  ArrowIndex partner;
  ArrowIndex result;
};

// Per-arrow lookup data for the closure rules. Holds a reference to the
// lattice, which must outlive it.
class ArrowTables {
 public:
  explicit ArrowTables(const GroupLattice& lattice);
  ArrowTables(GroupLattice&&) = delete;

  const GroupLattice& lattice() const noexcept { return *lattice_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const Arrow& arrow(ArrowIndex i) const { return arrows_[i]; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::optional<ArrowIndex> index_of(Arrow a) const;

  // Arrows conjugate to i, including i.
  std::span<const ArrowIndex> orbit(ArrowIndex i) const;
  ArrowIndex orbit_rep(ArrowIndex i) const { return orbit_rep_[i]; }
  const std::vector<ArrowIndex>& orbit_reps() const noexcept { return reps_; }
  // Nontrivial (L meet K, L) for L <= H when i = (K, H).
  std::span<const ArrowIndex> restrictions(ArrowIndex i) const;
  // (j, i o j): arrows j ending at source(i).
  std::span<const CompositionEntry> composable_before(ArrowIndex i) const;
  // (j, j o i): arrows j starting at target(i).
  std::span<const CompositionEntry> composable_after(ArrowIndex i) const;
  // Index of (source(first), target(second)) when target(first) == source(second).
  std::optional<ArrowIndex> compose(ArrowIndex first, ArrowIndex second) const;

  ArrowSet empty_set() const { return ArrowSet(arrows_.size()); }
  ArrowSet full_set() const;
  // Throws ArrowError for arrows not in the lattice (including identities).
  ArrowSet make_set(std::span<const Arrow> arrows) const;
  std::vector<Arrow> to_arrows(const ArrowSet& s) const;

 private:
  template <class T>
  struct Jagged {
    std::vector<std::uint32_t> offset;
    std::vector<T> data;
    std::span<const T> at(std::size_t i) const {
      return {data.data() + offset[i], data.data() + offset[i + 1]};
    }
  };

  const GroupLattice* lattice_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowIndex> orbit_rep_;
  std::vector<ArrowIndex> reps_;
  Jagged<ArrowIndex> orbits_;
  Jagged<ArrowIndex> restrictions_;
  Jagged<CompositionEntry> before_;
  Jagged<CompositionEntry> after_;
};

// Smallest transfer system containing `seed`: a worklist fixpoint of the
// conjugation, restriction and composition rules.
ArrowSet closure(const ArrowTables& tables, const ArrowSet& seed);
ArrowSet closure(const ArrowTables& tables, std::span<const Arrow> seed);

// closure(closed + {a}) for an already closed set; only the new arrows are
// propagated.
ArrowSet closure_with(const ArrowTables& tables, const ArrowSet& closed, ArrowIndex a);

// Stage-by-stage variant: conjugates, then restrictions, then a composition
// fixpoint, with the three stages repeated until nothing changes. Kept for
// comparison with the worklist version.
ArrowSet staged_closure(const ArrowTables& tables, const ArrowSet& seed);

bool is_closed(const ArrowTables& tables, const ArrowSet& arrows);

}  // namespace transfersys
