#include "transfersys/closure.hpp"

#include <algorithm>

#include "transfersys/errors.hpp"

namespace transfersys {

ArrowTables::ArrowTables(const GroupLattice& lattice)
    : lattice_(&lattice), arrows_(lattice.nontrivial_intervals()) {
  const std::size_t m = arrows_.size();
  if (m > kMaxArrows) throw CapExceeded("too many arrows for the closure tables");

  // Orbits, keyed by their least member.
  constexpr ArrowIndex kUnset = ~ArrowIndex{0};
  orbit_rep_.assign(m, kUnset);
  std::vector<std::vector<ArrowIndex>> members;
  std::vector<std::uint32_t> orbit_slot(m, 0);
  for (ArrowIndex i = 0; i < m; ++i) {
    if (orbit_rep_[i] != kUnset) continue;
    std::vector<ArrowIndex> orbit;
    for (const Arrow& a : lattice.arrow_orbit(arrows_[i])) orbit.push_back(static_cast<ArrowIndex>(*lattice.arrow_index(a)));
    std::sort(orbit.begin(), orbit.end());
    for (ArrowIndex j : orbit) {
      orbit_rep_[j] = i;
      orbit_slot[j] = static_cast<std::uint32_t>(members.size());
    }
    reps_.push_back(i);
    members.push_back(std::move(orbit));
  }
  orbits_.offset.push_back(0);
  for (ArrowIndex i = 0; i < m; ++i) {
    const auto& orb = members[orbit_slot[i]];
    orbits_.data.insert(orbits_.data.end(), orb.begin(), orb.end());
    orbits_.offset.push_back(static_cast<std::uint32_t>(orbits_.data.size()));
  }

  auto idx = [&](ElementIndex s, ElementIndex t) {
    return static_cast<ArrowIndex>(*lattice.arrow_index({s, t}));
  };

  restrictions_.offset.push_back(0);
  before_.offset.push_back(0);
  after_.offset.push_back(0);
  for (ArrowIndex i = 0; i < m; ++i) {
    const auto [k, h] = arrows_[i];
    for (ElementIndex l : lattice.down_set(h)) {
      if (l == h) continue;
      const ElementIndex lk = lattice.meet(l, k);
      if (lk != l) restrictions_.data.push_back(idx(lk, l));
    }
    restrictions_.offset.push_back(static_cast<std::uint32_t>(restrictions_.data.size()));

    for (ElementIndex x : lattice.down_set(k))
      if (x != k) before_.data.push_back({idx(x, k), idx(x, h)});
    before_.offset.push_back(static_cast<std::uint32_t>(before_.data.size()));

    for (ElementIndex y : lattice.up_set(h))
      if (y != h) after_.data.push_back({idx(h, y), idx(k, y)});
    after_.offset.push_back(static_cast<std::uint32_t>(after_.data.size()));
  }
}

std::optional<ArrowIndex> ArrowTables::index_of(Arrow a) const {
  const auto i = lattice_->arrow_index(a);
  if (!i) return std::nullopt;
  return static_cast<ArrowIndex>(*i);
}

std::span<const ArrowIndex> ArrowTables::orbit(ArrowIndex i) const { return orbits_.at(i); }
std::span<const ArrowIndex> ArrowTables::restrictions(ArrowIndex i) const { return restrictions_.at(i); }
std::span<const CompositionEntry> ArrowTables::composable_before(ArrowIndex i) const { return before_.at(i); }
std::span<const CompositionEntry> ArrowTables::composable_after(ArrowIndex i) const { return after_.at(i); }

std::optional<ArrowIndex> ArrowTables::compose(ArrowIndex first, ArrowIndex second) const {
  const Arrow& a = arrows_[first];
  const Arrow& b = arrows_[second];
  if (a.target != b.source) return std::nullopt;
  return index_of({a.source, b.target});
}

ArrowSet ArrowTables::full_set() const {
  ArrowSet s(arrows_.size());
  s.fill();
  return s;
}

ArrowSet ArrowTables::make_set(std::span<const Arrow> arrows) const {
  ArrowSet s(arrows_.size());
  for (const Arrow& a : arrows) {
    const auto i = index_of(a);
    if (!i)
      throw ArrowError("(" + std::to_string(a.source) + ", " + std::to_string(a.target) +
                       ") is not a nontrivial arrow of this lattice");
    s.set(*i);
  }
  return s;
}

std::vector<Arrow> ArrowTables::to_arrows(const ArrowSet& s) const {
  std::vector<Arrow> out;
  s.for_each([&](std::size_t i) { out.push_back(arrows_[i]); });
  return out;
}

namespace {

void check_width(const ArrowTables& t, const ArrowSet& s) {
  if (s.size() != t.arrow_count())
    throw ArrowError("arrow set has width " + std::to_string(s.size()) + " but the lattice has " +
                     std::to_string(t.arrow_count()) + " arrows");
}

void propagate(const ArrowTables& t, ArrowSet& r, std::vector<ArrowIndex>& stack) {
  auto add = [&](ArrowIndex k) {
    if (r.insert(k)) stack.push_back(k);
  };
  while (!stack.empty()) {
    const ArrowIndex e = stack.back();
    stack.pop_back();
    for (ArrowIndex o : t.orbit(e)) add(o);
    for (ArrowIndex x : t.restrictions(e)) add(x);
    for (const auto& c : t.composable_before(e))
      if (r.test(c.partner)) add(c.result);
    for (const auto& c : t.composable_after(e))
      if (r.test(c.partner)) add(c.result);
  }
}

}  // namespace

ArrowSet closure(const ArrowTables& tables, const ArrowSet& seed) {
  check_width(tables, seed);
  ArrowSet r = seed;
  std::vector<ArrowIndex> stack;
  seed.for_each([&](std::size_t i) { stack.push_back(static_cast<ArrowIndex>(i)); });
  propagate(tables, r, stack);
  return r;
}

ArrowSet closure(const ArrowTables& tables, std::span<const Arrow> seed) {
  return closure(tables, tables.make_set(seed));
}

ArrowSet closure_with(const ArrowTables& tables, const ArrowSet& closed, ArrowIndex a) {
  check_width(tables, closed);
  ArrowSet r = closed;
  std::vector<ArrowIndex> stack;
  if (r.insert(a)) stack.push_back(a);
  propagate(tables, r, stack);
  return r;
}

ArrowSet staged_closure(const ArrowTables& tables, const ArrowSet& seed) {
  check_width(tables, seed);
  const std::size_t m = tables.arrow_count();
  ArrowSet s = seed;
  while (true) {
    ArrowSet s1 = s;
    s.for_each([&](std::size_t i) {
      for (ArrowIndex o : tables.orbit(static_cast<ArrowIndex>(i))) s1.set(o);
    });
    ArrowSet s2 = s1;
    s1.for_each([&](std::size_t i) {
      for (ArrowIndex x : tables.restrictions(static_cast<ArrowIndex>(i))) s2.set(x);
    });
    ArrowSet s3 = s2;
    bool grew = true;
    while (grew) {
      grew = false;
      for (ArrowIndex i = 0; i < m; ++i) {
        if (!s3.test(i)) continue;
        for (const auto& c : tables.composable_after(i))
          if (s3.test(c.partner) && s3.insert(c.result)) grew = true;
      }
    }
    if (s3 == s) return s;
    s = std::move(s3);
  }
}

bool is_closed(const ArrowTables& tables, const ArrowSet& arrows) {
  check_width(tables, arrows);
  bool ok = true;
  arrows.for_each([&](std::size_t i) {
    if (!ok) return;
    const auto e = static_cast<ArrowIndex>(i);
    for (ArrowIndex o : tables.orbit(e))
      if (!arrows.test(o)) ok = false;
    for (ArrowIndex x : tables.restrictions(e))
      if (!arrows.test(x)) ok = false;
    for (const auto& c : tables.composable_after(e))
      if (arrows.test(c.partner) && !arrows.test(c.result)) ok = false;
  });
  return ok;
}

}  // namespace transfersys
