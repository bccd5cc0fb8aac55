#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "transfersys/closure.hpp"
#include "transfersys/interchange.hpp"
#include "transfersys/lattice.hpp"
#include "transfersys/lattice_source.hpp"

namespace transfersys::testing {

inline std::string data_path(const std::string& name) { return std::string(TRANSFERSYS_TEST_DATA_DIR) + "/" + name; }

// Subgroups of S3: 1, three conjugate C2, C3, S3. Conjugation by a 3-cycle
// permutes the C2's cyclically; by a transposition it swaps two of them.
inline GroupLattice s3_lattice() {
  LatticeData d;
  d.group_name = "S3";
  auto el = [](std::string label, std::uint64_t order, std::vector<PrimePower> f) {
    return LatticeElement{std::move(label), order, std::move(f), 0};
  };
  d.elements = {el("1", 1, {}),         el("a", 2, {{2, 1}}), el("b", 2, {{2, 1}}),
                el("c", 2, {{2, 1}}),   el("C3", 3, {{3, 1}}), el("S3", 6, {{2, 1}, {3, 1}})};
  d.relation = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  d.conj_generators = {{0, 2, 3, 1, 4, 5}, {0, 1, 3, 2, 4, 5}};
  return GroupLattice::create(std::move(d));
}

namespace detail {
struct LatticeHolder {
  GroupLattice held;
};
}  // namespace detail

// ArrowTables that owns its lattice, for building both from a temporary.
class OwnedTables : private detail::LatticeHolder, public ArrowTables {
 public:
  explicit OwnedTables(GroupLattice L) : detail::LatticeHolder{std::move(L)}, ArrowTables(held) {}
  OwnedTables(const OwnedTables&) = delete;
  OwnedTables& operator=(const OwnedTables&) = delete;
};

struct NamedLattice {
  std::string name;
  GroupLattice lattice;
};

// Lattices with at most eight elements, with and without conjugation.
inline std::vector<NamedLattice> small_lattices() {
  std::vector<NamedLattice> out;
  for (const char* text : {"cyclic:1", "cyclic:p", "cyclic:p^2", "cyclic:p^3", "cyclic:p*q", "cyclic:p^2*q",
                           "cyclic:p^3*q", "boolean:3", "subspace:p=2,n=2", "subspace:p=3,n=2"})
    out.push_back({text, parse_builtin_lattice(text)});
  out.push_back({"S3", s3_lattice()});
  return out;
}

// Closure computed straight from the three closure rules on sets of
// arrows, without any precomputed tables.
inline std::set<Arrow> naive_closure(const GroupLattice& L, std::set<Arrow> s) {
  for (bool changed = true; changed;) {
    changed = false;
    std::set<Arrow> add;
    for (const Arrow& a : s) {
      for (const Arrow& c : L.arrow_orbit(a)) add.insert(c);
      for (ElementIndex l = 0; l < L.size(); ++l) {
        if (!L.leq(l, a.target)) continue;
        const ElementIndex m = L.meet(l, a.source);
        if (m != l) add.insert({m, l});
      }
      for (const Arrow& b : s)
        if (a.target == b.source) add.insert({a.source, b.target});
    }
    for (const Arrow& a : add) changed |= s.insert(a).second;
  }
  return s;
}

inline std::set<Arrow> as_arrow_set(const ArrowTables& t, const ArrowSet& s) {
  const auto v = t.to_arrows(s);
  return {v.begin(), v.end()};
}

inline ArrowSet random_subset(const ArrowTables& t, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  ArrowSet s = t.empty_set();
  for (std::size_t i = 0; i < t.arrow_count(); ++i)
    if (coin(rng)) s.set(i);
  return s;
}

}  // namespace transfersys::testing
