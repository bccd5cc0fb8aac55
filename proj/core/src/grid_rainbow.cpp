#include "transfersys/grid_rainbow.hpp"

#include <algorithm>
#include <set>

#include "transfersys/bigint.hpp"
#include "transfersys/errors.hpp"

namespace transfersys {
namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) { return static_cast<std::uint64_t>(binomial(n, k)); }

std::vector<std::uint64_t> grid_primes(const GroupLattice& grid) {
  std::vector<std::uint64_t> ps;
  for (const PrimePower& pp : grid.element(grid.top()).order_factorization) ps.push_back(pp.prime);
  return ps;
}

// Arrows of a lattice whose endpoint ranks are exactly (lo, hi).
void preimage(const ArrowTables& t, unsigned lo, unsigned hi, GeneratingSet& out) {
  const GroupLattice& L = t.lattice();
  for (ArrowIndex i = 0; i < t.arrow_count(); ++i) {
    const Arrow& a = t.arrow(i);
    if (L.element(a.source).rank == lo && L.element(a.target).rank == hi) out.push_back(i);
  }
}

}  // namespace

ElementIndex grid_element(const GroupLattice& grid, GridPoint pt) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const GridPoint c = grid_coordinates(grid, static_cast<ElementIndex>(i));
    if (c == pt) return static_cast<ElementIndex>(i);
  }
  throw DomainError("grid point (" + std::to_string(pt.a) + ", " + std::to_string(pt.x) + ") is not in the lattice");
}

GridPoint grid_coordinates(const GroupLattice& grid, ElementIndex e) {
  const auto ps = grid_primes(grid);
  GridPoint c;
  for (const PrimePower& pp : grid.element(e).order_factorization) {
    if (!ps.empty() && pp.prime == ps[0]) c.a = pp.exponent;
    else if (ps.size() > 1 && pp.prime == ps[1]) c.x = pp.exponent;
    else throw DomainError("element is not on a two-coordinate grid");
  }
  return c;
}

std::size_t cpnq_complexity(unsigned n) {
  const std::size_t k = n / 2;
  return n % 2 == 0 ? 3 * k + 1 : 3 * k + 2;
}

GeneratingSet cpnq_witness_rainbow(const ArrowTables& tables, unsigned n) {
  const GroupLattice& L = tables.lattice();
  if (L.element(L.top()).rank != n + 1 || L.size() != 2 * (n + 1))
    throw DomainError("cpnq_witness_rainbow needs the [n] x [1] lattice");
  const unsigned k = n / 2;
  GeneratingSet out;
  if (n % 2 == 0) {
    for (unsigned i = 0; i <= k; ++i) preimage(tables, i, n + 1 - i, out);
  } else {
    for (unsigned i = 1; i <= k + 1; ++i) preimage(tables, i, n + 2 - i, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_partial_rainbow(const ArrowTables& tables, const GeneratingSet& set) {
  const GroupLattice& L = tables.lattice();
  std::set<ArrowIndex> orbits;
  std::set<std::pair<unsigned, unsigned>> arcs;
  for (ArrowIndex i : set) {
    if (!orbits.insert(tables.orbit_rep(i)).second) return false;
    const Arrow& a = tables.arrow(i);
    arcs.emplace(L.element(a.source).rank, L.element(a.target).rank);
  }
  // Distinct rank arcs must be pairwise strictly nested.
  for (auto it = arcs.begin(); it != arcs.end(); ++it)
    for (auto jt = std::next(it); jt != arcs.end(); ++jt) {
      const auto [x1, y1] = *it;
      const auto [x2, y2] = *jt;
      const bool nested = (x1 < x2 && y2 < y1) || (x2 < x1 && y1 < y2);
      if (!nested) return false;
    }
  return true;
}

std::uint64_t midpoint_family_size(unsigned n, unsigned m, unsigned twice_mid) {
  std::uint64_t c = 0;
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned x = 0; x <= m; ++x)
      for (unsigned b = a; b <= n; ++b)
        for (unsigned y = x; y <= m; ++y)
          if ((a != b || x != y) && a + x + b + y == twice_mid) ++c;
  return c;
}

std::vector<Arrow> midpoint_family(const GroupLattice& grid, unsigned twice_mid) {
  std::vector<Arrow> out;
  for (const Arrow& a : grid.nontrivial_intervals())
    if (grid.element(a.source).rank + grid.element(a.target).rank == twice_mid) out.push_back(a);
  return out;
}

std::uint64_t sr_closed_form(unsigned n, unsigned m) {
  if (n < 1 || m < 1) throw DomainError("SR(n, m) needs n, m >= 1");
  if (n < m) std::swap(n, m);
  if ((n + m) % 2 == 1) return choose(m + 3, 3) + (n - m - 1) / 2 * choose(m + 2, 2);
  const std::uint64_t lo = (m + 2) / 2, hi = (m + 3) / 2;
  return choose(m + 3, 3) - lo * hi + (n - m) / 2 * choose(m + 2, 2);
}

std::uint64_t dr_closed_form(unsigned n, unsigned m) {
  if (n < 2 || m < 2 || (n + m) % 2 != 0) throw DomainError("DR(n, m) needs n, m >= 2 with n + m even");
  if (n < m) std::swap(n, m);
  const std::uint64_t diagonal = sr_closed_form(m, m - 1) + std::uint64_t{m / 2} * ((m + 1) / 2);
  return diagonal + (n - m) / 2 * choose(m + 2, 2);
}

RainbowNumber sr_number(unsigned n, unsigned m) {
  RainbowNumber r;
  r.closed_form = sr_closed_form(n, m);
  const unsigned twice = (n + m) % 2 == 1 ? n + m : n + m - 1;
  r.enumerated = midpoint_family_size(n, m, twice);
  if (r.closed_form != r.enumerated)
    throw CrossCheckError("sr-closed-form-vs-enumeration", "SR(" + std::to_string(n) + "," + std::to_string(m) + "): " +
                                                               std::to_string(r.closed_form) + " vs " + std::to_string(r.enumerated));
  return r;
}

RainbowNumber dr_number(unsigned n, unsigned m) {
  RainbowNumber r;
  r.closed_form = dr_closed_form(n, m);
  r.enumerated = midpoint_family_size(n, m, n + m);
  if (r.closed_form != r.enumerated)
    throw CrossCheckError("dr-closed-form-vs-enumeration", "DR(" + std::to_string(n) + "," + std::to_string(m) + "): " +
                                                               std::to_string(r.closed_form) + " vs " + std::to_string(r.enumerated));
  return r;
}

GeneratingSet double_rainbow_augmented(const ArrowTables& tables, unsigned n, unsigned m) {
  if (!(n >= m && m >= 2 && (n + m) % 2 == 0))
    throw DomainError("double_rainbow_augmented needs n >= m >= 2 with n + m even");
  const GroupLattice& L = tables.lattice();
  if (L.size() != std::size_t{n + 1} * (m + 1)) throw DomainError("double_rainbow_augmented needs the [n] x [m] lattice");
  const unsigned h = (n + m) / 2;
  const ElementIndex A = grid_element(L, {n - h, m});
  const ElementIndex B = grid_element(L, {h, 0});

  std::set<ArrowIndex> marked;
  for (ElementIndex p : {A, B}) {
    for (ElementIndex c : L.upper_covers(p)) marked.insert(*tables.index_of({p, c}));
    for (ElementIndex c : L.lower_covers(p)) marked.insert(*tables.index_of({c, p}));
  }
  std::set<ArrowIndex> composites;
  for (ArrowIndex e1 : marked)
    for (ArrowIndex e2 : marked)
      if (auto c = tables.compose(e1, e2)) composites.insert(*c);

  GeneratingSet out;
  for (const Arrow& a : midpoint_family(L, n + m)) {
    const ArrowIndex i = *tables.index_of(a);
    if (!composites.count(i)) out.push_back(i);
  }
  out.insert(out.end(), marked.begin(), marked.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t conjectured_cpnqm_complexity(unsigned n, unsigned m) {
  if (n < m) std::swap(n, m);
  if (m < 2) throw DomainError("conjectured complexity needs n, m >= 2");
  if (m == 2 && n % 2 == 0) return dr_closed_form(n, m) + 2;
  return sr_closed_form(n, m);
}

}  // namespace transfersys
