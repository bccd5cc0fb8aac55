#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace transfersys {

using ElementIndex = std::uint32_t;
using Permutation = std::vector<ElementIndex>;

inline constexpr std::size_t kMaxElements = std::size_t{1} << 16;
inline constexpr std::size_t kMaxArrows = std::size_t{1} << 20;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct LatticeElement {
  std::string label;
  std::uint64_t order = 1;
  std::vector<PrimePower> order_factorization;  // sorted by prime
  unsigned rank = 0;                             // sum of exponents
  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

// Nontrivial interval source < target. Identity arrows are never stored.
struct Arrow {
  ElementIndex source = 0;
  ElementIndex target = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Raw description of a lattice before validation. Indices in `relation`
// and in the permutations refer to positions in `elements`.
struct LatticeData {
  std::string group_name;
  std::vector<LatticeElement> elements;
  std::vector<std::pair<ElementIndex, ElementIndex>> relation;  // a <= b
  std::vector<Permutation> conj_generators;
};

// Immutable finite lattice of subgroups with a conjugation action given by
// generating automorphisms. Elements are re-indexed by (rank, label).
class GroupLattice {
 public:
  // Validates everything and throws LatticeError/CapExceeded on failure.
  static GroupLattice create(LatticeData data);

  const std::string& group_name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const LatticeElement& element(ElementIndex i) const { return elements_.at(i); }
  std::span<const LatticeElement> elements() const noexcept { return elements_; }
  std::optional<ElementIndex> find(std::string_view label) const;
  std::optional<ElementIndex> find_by_order(std::uint64_t order) const;

  ElementIndex bottom() const noexcept { return 0; }
  ElementIndex top() const noexcept { return static_cast<ElementIndex>(size() - 1); }

  bool leq(ElementIndex a, ElementIndex b) const noexcept {
    return (down_[b * row_words_ + a / 64] >> (a % 64)) & 1u;
  }
  bool less(ElementIndex a, ElementIndex b) const noexcept { return a != b && leq(a, b); }
  ElementIndex meet(ElementIndex a, ElementIndex b) const;

  // Elements below / above, including the element itself, ascending.
  const std::vector<ElementIndex>& down_set(ElementIndex i) const { return down_list_[i]; }
  const std::vector<ElementIndex>& up_set(ElementIndex i) const { return up_list_[i]; }
  const std::vector<ElementIndex>& upper_covers(ElementIndex i) const { return upper_covers_[i]; }
  const std::vector<ElementIndex>& lower_covers(ElementIndex i) const { return lower_covers_[i]; }
  std::vector<std::pair<ElementIndex, ElementIndex>> cover_pairs() const;

  const std::vector<Permutation>& conj_generators() const noexcept { return gens_; }
  // Orbit id of each element; ids are the least element index in the orbit.
  const std::vector<ElementIndex>& element_orbit_ids() const noexcept { return orbit_id_; }

  // All nontrivial arrows sorted by (source, target).
  const std::vector<Arrow>& nontrivial_intervals() const noexcept { return arrows_; }
  std::optional<std::size_t> arrow_index(Arrow a) const;
  // Orbit of an arrow under the generated group, sorted.
  std::vector<Arrow> arrow_orbit(Arrow a) const;

  // Orbit representatives (least index) of elements that are not a meet of
  // two strictly larger elements. The top element is excluded.
  std::vector<ElementIndex> meet_irreducible_classes() const;

  friend bool operator==(const GroupLattice& a, const GroupLattice& b);

 private:
  GroupLattice() = default;
  void build_meet_table();
  ElementIndex compute_meet(ElementIndex a, ElementIndex b) const;

  std::string name_;
  std::vector<LatticeElement> elements_;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> down_;  // row b holds {a : a <= b}
  std::vector<std::uint32_t> down_count_;
  std::vector<std::vector<ElementIndex>> down_list_, up_list_;
  std::vector<std::vector<ElementIndex>> upper_covers_, lower_covers_;
  std::vector<std::uint16_t> meet_table_;  // dense; empty above kDenseMeetLimit
  std::vector<Permutation> gens_;
  std::vector<ElementIndex> orbit_id_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> arrow_offset_;  // arrows with source s start here
};

// Product of chains [e1] x ... x [ek], i.e. the subgroup lattice of a cyclic
// group of order p1^e1 ... pk^ek. Defaults to the first k primes.
GroupLattice build_chain_product(std::span<const unsigned> exponents,
                                 std::span<const std::uint64_t> primes = {});

// Subspaces of F_p^n ordered by inclusion; rank is the dimension.
GroupLattice build_subspace_lattice(std::uint64_t p, unsigned n);

// Symbol used for the i-th coordinate of a chain product: p, q, r, ...
std::string prime_symbol(std::size_t i);

std::vector<std::uint64_t> first_primes(std::size_t k);
bool is_prime(std::uint64_t p);

}  // namespace transfersys
