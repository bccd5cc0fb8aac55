#include "transfersys/basis.hpp"

#include <algorithm>
#include <thread>

#include "transfersys/errors.hpp"

namespace transfersys {
namespace {

ArrowSet set_of(const ArrowTables& t, const GeneratingSet& g) {
  ArrowSet s = t.empty_set();
  for (ArrowIndex i : g) s.set(i);
  return s;
}

bool generates(const ArrowTables& t, const GeneratingSet& g, const ArrowSet& target) {
  return closure(t, set_of(t, g)) == target;
}

GeneratingSet reverse_reduction(const ArrowTables& t, const ArrowSet& system) {
  const GroupLattice& L = t.lattice();
  auto has = [&](ElementIndex s, ElementIndex e) {
    const auto i = t.index_of({s, e});
    return i && system.test(*i);
  };

  // Drop composites.
  std::vector<ArrowIndex> s1;
  system.for_each([&](std::size_t i) {
    const auto [k, h] = t.arrow(static_cast<ArrowIndex>(i));
    bool composite = false;
    for (ElementIndex l : L.up_set(k)) {
      if (l == k || l == h || !L.leq(l, h)) continue;
      if (has(k, l) && has(l, h)) {
        composite = true;
        break;
      }
    }
    if (!composite) s1.push_back(static_cast<ArrowIndex>(i));
  });

  // Drop proper restrictions of survivors.
  std::vector<ArrowIndex> s2;
  for (ArrowIndex i : s1) {
    const auto [k, h] = t.arrow(i);
    bool restricted = false;
    for (ArrowIndex j : s1) {
      if (j == i) continue;
      const auto [k2, h2] = t.arrow(j);
      if (L.leq(h, h2) && L.meet(h, k2) == k) {
        restricted = true;
        break;
      }
    }
    if (!restricted) s2.push_back(i);
  }

  // One representative per conjugacy class: the least surviving index.
  GeneratingSet out;
  std::vector<ArrowIndex> taken;
  for (ArrowIndex i : s2) {
    const ArrowIndex rep = t.orbit_rep(i);
    if (std::find(taken.begin(), taken.end(), rep) != taken.end()) continue;
    taken.push_back(rep);
    out.push_back(i);
  }
  return out;
}

}  // namespace

GeneratingSet greedy_basis(const ArrowTables& tables, const ArrowSet& system) {
  GeneratingSet cur;
  system.for_each([&](std::size_t i) { cur.push_back(static_cast<ArrowIndex>(i)); });
  // One pass from the top index down suffices: closure is monotone, so an
  // arrow that is needed stays needed as the set shrinks.
  for (std::size_t pos = cur.size(); pos-- > 0;) {
    GeneratingSet trial = cur;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (generates(tables, trial, system)) cur = std::move(trial);
  }
  return cur;
}

bool is_independent(const ArrowTables& tables, const GeneratingSet& set) {
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    ArrowSet rest = tables.empty_set();
    for (std::size_t j = 0; j < set.size(); ++j)
      if (j != pos) rest.set(set[j]);
    if (closure(tables, rest).test(set[pos])) return false;
  }
  return true;
}

BasisResult minimal_basis(const ArrowTables& tables, const ArrowSet& system) {
  if (!is_closed(tables, system)) throw NotClosedError("minimal_basis: arrow set is not a transfer system");
  BasisResult r;
  r.arrows = reverse_reduction(tables, system);
  if (generates(tables, r.arrows, system) && is_independent(tables, r.arrows)) return r;
  r.arrows = greedy_basis(tables, system);
  r.path = BasisPath::greedy_fallback;
  return r;
}

std::size_t basis_size(const ArrowTables& tables, const ArrowSet& system) {
  return minimal_basis(tables, system).arrows.size();
}

std::vector<GeneratingSet> all_minimal_bases(const ArrowTables& tables, const ArrowSet& system, std::size_t cap) {
  if (!is_closed(tables, system)) throw NotClosedError("all_minimal_bases: arrow set is not a transfer system");
  const std::vector<std::size_t> cand = system.to_indices();
  if (cand.size() > cap)
    throw CapExceeded("all_minimal_bases: system has " + std::to_string(cand.size()) + " arrows; cap is " +
                      std::to_string(cap));

  std::vector<GeneratingSet> found;
  GeneratingSet cur;
  // rest[i] = closure-free union of candidates i.. as a set, for the bound.
  std::vector<ArrowSet> suffix(cand.size() + 1, tables.empty_set());
  for (std::size_t i = cand.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i].set(cand[i]);
  }

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (!is_independent(tables, cur)) return;
    const ArrowSet now = closure(tables, set_of(tables, cur));
    if (now == system) {
      found.push_back(cur);
      return;
    }
    if (i == cand.size()) return;
    ArrowSet reach = set_of(tables, cur);
    reach |= suffix[i];
    if (closure(tables, reach) != system) return;
    cur.push_back(static_cast<ArrowIndex>(cand[i]));
    self(self, i + 1);
    cur.pop_back();
    self(self, i + 1);
  };
  dfs(dfs, 0);
  std::sort(found.begin(), found.end());
  return found;
}

LevelProfile level_profile(const ArrowTables& tables, const GeneratingSet& set) {
  LevelProfile p;
  for (ArrowIndex i : set) ++p[tables.lattice().element(tables.arrow(i).source).rank];
  return p;
}

std::size_t width(const GroupLattice& lattice) { return lattice.meet_irreducible_classes().size(); }

std::size_t checked_width(const ArrowTables& tables) {
  const std::size_t w = width(tables.lattice());
  const std::size_t b = basis_size(tables, tables.full_set());
  if (w != b)
    throw CrossCheckError("width-vs-complete-basis", "meet-irreducible classes give " + std::to_string(w) +
                                                         " but the complete system has a basis of size " +
                                                         std::to_string(b));
  return w;
}

ComplexityResult complexity(const ArrowTables& tables, unsigned jobs) {
  EnumerateOptions opts;
  opts.store = true;
  opts.jobs = jobs;
  EnumerationResult e = enumerate(tables, opts);

  const std::size_t n = e.systems.size();
  std::vector<std::uint32_t> sizes(n, 0);
  std::vector<std::uint8_t> fell_back(n, 0);
  const unsigned workers = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, n)));
  auto work = [&](unsigned w) {
    for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i) {
      const BasisResult b = minimal_basis(tables, e.systems[i].arrows);
      sizes[i] = static_cast<std::uint32_t>(b.arrows.size());
      fell_back[i] = b.path == BasisPath::greedy_fallback;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  ComplexityResult r;
  r.total_systems = e.total_count;
  r.stratum_counts = e.stratum_counts;
  for (std::size_t i = 0; i < n; ++i) {
    r.value = std::max<std::size_t>(r.value, sizes[i]);
    if (sizes[i] != e.systems[i].stratum) ++r.stratum_mismatches;
    r.fallback_uses += fell_back[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (sizes[i] == r.value) r.realizers.push_back(e.systems[i].arrows);
  std::sort(r.realizers.begin(), r.realizers.end());
  return r;
}

}  // namespace transfersys
