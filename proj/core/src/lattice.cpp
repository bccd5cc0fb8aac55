#include "transfersys/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "transfersys/bigint.hpp"
#include "transfersys/errors.hpp"

namespace transfersys {
namespace {

constexpr std::size_t kDenseMeetLimit = 4096;

std::string quote(const LatticeElement& e) { return "'" + e.label + "'"; }

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

void check_element(const LatticeElement& e) {
  if (e.label.empty()) throw LatticeError("element with empty label");
  std::uint64_t product = 1;
  std::uint64_t last_prime = 0;
  for (const PrimePower& pp : e.order_factorization) {
    if (!is_prime(pp.prime))
      throw LatticeError("element " + quote(e) + ": " + std::to_string(pp.prime) +
                         " in order_factorization is not prime");
    if (pp.exponent == 0)
      throw LatticeError("element " + quote(e) + ": zero exponent in order_factorization");
    if (pp.prime <= last_prime)
      throw LatticeError("element " + quote(e) +
                         ": order_factorization primes must be strictly increasing");
    last_prime = pp.prime;
    for (unsigned k = 0; k < pp.exponent; ++k)
      if (mul_overflows(product, pp.prime, product))
        throw LatticeError("element " + quote(e) + ": order overflows 64 bits");
  }
  if (product != e.order)
    throw LatticeError("element " + quote(e) + ": order " + std::to_string(e.order) +
                       " does not match its factorization (" + std::to_string(product) + ")");
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 2; out.size() < k; ++c)
    if (is_prime(c)) out.push_back(c);
  return out;
}

std::string prime_symbol(std::size_t i) {
  static constexpr std::string_view letters = "pqrstuvwxyz";
  if (i < letters.size()) return std::string(1, letters[i]);
  return "p" + std::to_string(i);
}

GroupLattice GroupLattice::create(LatticeData data) {
  const std::size_t n = data.elements.size();
  if (n == 0) throw LatticeError("lattice has no elements");
  if (n > kMaxElements)
    throw CapExceeded("lattice has " + std::to_string(n) + " elements; the cap is " +
                      std::to_string(kMaxElements));

  for (LatticeElement& e : data.elements) {
    check_element(e);
    e.rank = 0;
    for (const PrimePower& pp : e.order_factorization) e.rank += pp.exponent;
  }
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(data.elements[i].label, i).second)
        throw LatticeError("duplicate label " + quote(data.elements[i]));
  }

  // Canonical order by (rank, label).
  std::vector<ElementIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ElementIndex a, ElementIndex b) {
    const auto& ea = data.elements[a];
    const auto& eb = data.elements[b];
    return std::tie(ea.rank, ea.label) < std::tie(eb.rank, eb.label);
  });
  std::vector<ElementIndex> to_new(n);
  for (std::size_t i = 0; i < n; ++i) to_new[order[i]] = static_cast<ElementIndex>(i);

  GroupLattice L;
  L.name_ = std::move(data.group_name);
  L.elements_.reserve(n);
  for (ElementIndex old : order) L.elements_.push_back(std::move(data.elements[old]));

  const std::size_t W = (n + 63) / 64;
  L.row_words_ = W;
  L.down_.assign(n * W, 0);
  auto set_leq = [&](std::size_t a, std::size_t b) { L.down_[b * W + a / 64] |= std::uint64_t{1} << (a % 64); };
  for (std::size_t i = 0; i < n; ++i) set_leq(i, i);
  for (auto [a, b] : data.relation) {
    if (a >= n || b >= n)
      throw LatticeError("relation pair [" + std::to_string(a) + ", " + std::to_string(b) +
                         "] references a missing element");
    set_leq(to_new[a], to_new[b]);
  }

  // Transitive closure (Warshall on rows).
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* rk = &L.down_[k * W];
    for (std::size_t b = 0; b < n; ++b) {
      std::uint64_t* rb = &L.down_[b * W];
      if ((rb[k / 64] >> (k % 64)) & 1u)
        for (std::size_t w = 0; w < W; ++w) rb[w] |= rk[w];
    }
  }

  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a == b || !L.leq(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b))) continue;
      const auto& ea = L.elements_[a];
      const auto& eb = L.elements_[b];
      if (L.leq(static_cast<ElementIndex>(b), static_cast<ElementIndex>(a)))
        throw LatticeError("relation is not antisymmetric: " + quote(ea) + " and " + quote(eb) +
                           " are each below the other");
      if (eb.order % ea.order != 0 || ea.order == eb.order)
        throw LatticeError(quote(ea) + " <= " + quote(eb) + " but order " +
                           std::to_string(ea.order) + " is not a proper divisor of " +
                           std::to_string(eb.order));
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!L.leq(0, static_cast<ElementIndex>(x)))
      throw LatticeError("no bottom element: " + quote(L.elements_[0]) + " is not below " +
                         quote(L.elements_[x]));
    if (!L.leq(static_cast<ElementIndex>(x), static_cast<ElementIndex>(n - 1)))
      throw LatticeError("no top element: " + quote(L.elements_[x]) + " is not below " +
                         quote(L.elements_[n - 1]));
  }

  L.down_count_.resize(n);
  L.down_list_.assign(n, {});
  L.up_list_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) {
    std::uint32_t c = 0;
    for (std::size_t w = 0; w < W; ++w) c += static_cast<std::uint32_t>(std::popcount(L.down_[b * W + w]));
    L.down_count_[b] = c;
    for (std::size_t a = 0; a < n; ++a)
      if (L.leq(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b))) {
        L.down_list_[b].push_back(static_cast<ElementIndex>(a));
        L.up_list_[a].push_back(static_cast<ElementIndex>(b));
      }
  }

  L.upper_covers_.assign(n, {});
  L.lower_covers_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) {
    const auto& below = L.down_list_[b];
    for (ElementIndex a : below) {
      if (a == b) continue;
      bool cover = true;
      for (ElementIndex c : below)
        if (c != a && c != b && L.less(a, c)) {
          cover = false;
          break;
        }
      if (cover) {
        L.lower_covers_[b].push_back(a);
        L.upper_covers_[a].push_back(static_cast<ElementIndex>(b));
      }
    }
  }

  L.build_meet_table();

  // Conjugation generators, re-indexed into the canonical order.
  for (std::size_t g = 0; g < data.conj_generators.size(); ++g) {
    const Permutation& old = data.conj_generators[g];
    const std::string which = "conj_generators[" + std::to_string(g) + "]";
    if (old.size() != n)
      throw LatticeError(which + " has length " + std::to_string(old.size()) + ", expected " +
                         std::to_string(n));
    Permutation perm(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (old[i] >= n) throw LatticeError(which + " has an out-of-range image");
      const ElementIndex img = to_new[old[i]];
      if (hit[img]) throw LatticeError(which + " is not a permutation");
      hit[img] = true;
      perm[to_new[i]] = img;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = L.elements_[i];
      const auto& b = L.elements_[perm[i]];
      if (a.rank != b.rank || a.order != b.order || a.order_factorization != b.order_factorization)
        throw LatticeError(which + " is not an automorphism: maps " + quote(a) + " (order " +
                           std::to_string(a.order) + ") to " + quote(b) + " (order " +
                           std::to_string(b.order) + ")");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const bool before = L.leq(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
        const bool after = L.leq(perm[a], perm[b]);
        if (before != after)
          throw LatticeError(which + " is not an automorphism: " + quote(L.elements_[a]) +
                             (before ? " <= " : " not <= ") + quote(L.elements_[b]) + " but " +
                             quote(L.elements_[perm[a]]) + (after ? " <= " : " not <= ") +
                             quote(L.elements_[perm[b]]));
      }
    L.gens_.push_back(std::move(perm));
  }

  // Element orbits by flood fill; ids are least members.
  L.orbit_id_.assign(n, static_cast<ElementIndex>(n));
  for (std::size_t s = 0; s < n; ++s) {
    if (L.orbit_id_[s] != n) continue;
    std::vector<ElementIndex> stack{static_cast<ElementIndex>(s)};
    L.orbit_id_[s] = static_cast<ElementIndex>(s);
    while (!stack.empty()) {
      const ElementIndex x = stack.back();
      stack.pop_back();
      for (const Permutation& g : L.gens_)
        if (L.orbit_id_[g[x]] == n) {
          L.orbit_id_[g[x]] = static_cast<ElementIndex>(s);
          stack.push_back(g[x]);
        }
    }
  }

  // Arrows in (source, target) order.
  std::size_t total = 0;
  for (std::size_t s = 0; s < n; ++s) total += L.up_list_[s].size() - 1;
  if (total > kMaxArrows)
    throw CapExceeded("lattice has " + std::to_string(total) + " nontrivial arrows; the cap is " +
                      std::to_string(kMaxArrows));
  L.arrows_.reserve(total);
  L.arrow_offset_.resize(n + 1);
  for (std::size_t s = 0; s < n; ++s) {
    L.arrow_offset_[s] = L.arrows_.size();
    for (ElementIndex t : L.up_list_[s])
      if (t != s) L.arrows_.push_back({static_cast<ElementIndex>(s), t});
  }
  L.arrow_offset_[n] = L.arrows_.size();
  return L;
}

ElementIndex GroupLattice::compute_meet(ElementIndex a, ElementIndex b) const {
  const std::size_t W = row_words_;
  ElementIndex best = 0;
  std::uint32_t best_count = 0;
  std::uint32_t inter_count = 0;
  for (std::size_t w = 0; w < W; ++w) {
    std::uint64_t m = down_[a * W + w] & down_[b * W + w];
    inter_count += static_cast<std::uint32_t>(std::popcount(m));
    while (m) {
      const auto x = static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
      m &= m - 1;
      if (down_count_[x] > best_count) {
        best_count = down_count_[x];
        best = x;
      }
    }
  }
  // The candidate is the meet iff everything common is below it.
  if (best_count != inter_count)
    throw LatticeError("not a lattice: " + quote(elements_[a]) + " and " + quote(elements_[b]) +
                       " have no unique greatest lower bound");
  return best;
}

void GroupLattice::build_meet_table() {
  const std::size_t n = size();
  if (n > kDenseMeetLimit) {
    // Still validate every pair; just keep no table.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        compute_meet(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
    return;
  }
  meet_table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    meet_table_[a * n + a] = static_cast<std::uint16_t>(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto m = static_cast<std::uint16_t>(
          compute_meet(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)));
      meet_table_[a * n + b] = m;
      meet_table_[b * n + a] = m;
    }
  }
}

ElementIndex GroupLattice::meet(ElementIndex a, ElementIndex b) const {
  if (a >= size() || b >= size()) throw std::out_of_range("meet: element index out of range");
  if (!meet_table_.empty()) return meet_table_[a * size() + b];
  return compute_meet(a, b);
}

std::optional<ElementIndex> GroupLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].label == label) return static_cast<ElementIndex>(i);
  return std::nullopt;
}

std::optional<ElementIndex> GroupLattice::find_by_order(std::uint64_t order) const {
  std::optional<ElementIndex> hit;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].order == order) {
      if (hit) return std::nullopt;  // ambiguous
      hit = static_cast<ElementIndex>(i);
    }
  return hit;
}

std::vector<std::pair<ElementIndex, ElementIndex>> GroupLattice::cover_pairs() const {
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (ElementIndex b : upper_covers_[a]) out.emplace_back(static_cast<ElementIndex>(a), b);
  return out;
}

std::optional<std::size_t> GroupLattice::arrow_index(Arrow a) const {
  if (a.source >= size() || a.target >= size()) return std::nullopt;
  const auto first = arrows_.begin() + static_cast<std::ptrdiff_t>(arrow_offset_[a.source]);
  const auto last = arrows_.begin() + static_cast<std::ptrdiff_t>(arrow_offset_[a.source + 1]);
  const auto it = std::lower_bound(first, last, a);
  if (it == last || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::vector<Arrow> GroupLattice::arrow_orbit(Arrow a) const {
  std::set<Arrow> seen{a};
  std::vector<Arrow> stack{a};
  while (!stack.empty()) {
    const Arrow x = stack.back();
    stack.pop_back();
    for (const Permutation& g : gens_) {
      const Arrow y{g[x.source], g[x.target]};
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ElementIndex> GroupLattice::meet_irreducible_classes() const {
  std::set<ElementIndex> reps;
  for (std::size_t x = 0; x + 1 < size(); ++x)
    if (upper_covers_[x].size() == 1) reps.insert(orbit_id_[x]);
  return {reps.begin(), reps.end()};
}

bool operator==(const GroupLattice& a, const GroupLattice& b) {
  return a.elements_ == b.elements_ && a.down_ == b.down_ && a.gens_ == b.gens_;
}

GroupLattice build_chain_product(std::span<const unsigned> exponents,
                                 std::span<const std::uint64_t> primes) {
  const std::size_t k = exponents.size();
  if (k == 0) throw DomainError("build_chain_product: exponent list is empty");
  std::vector<std::uint64_t> ps;
  if (primes.empty()) {
    ps = first_primes(k);
  } else {
    if (primes.size() != k)
      throw DomainError("build_chain_product: got " + std::to_string(primes.size()) +
                        " primes for " + std::to_string(k) + " exponents");
    ps.assign(primes.begin(), primes.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (!is_prime(ps[i]))
        throw DomainError("build_chain_product: " + std::to_string(ps[i]) + " is not prime");
      for (std::size_t j = 0; j < i; ++j)
        if (ps[i] == ps[j])
          throw DomainError("build_chain_product: duplicate prime " + std::to_string(ps[i]));
    }
  }

  std::size_t count = 1;
  for (unsigned e : exponents) {
    count *= e + 1;
    if (count > kMaxElements)
      throw CapExceeded("build_chain_product: more than " + std::to_string(kMaxElements) +
                        " elements");
  }

  LatticeData data;
  {
    std::ostringstream name;
    name << "C_";
    bool any = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (exponents[i] == 0) continue;
      if (any) name << '*';
      name << prime_symbol(i);
      if (exponents[i] > 1) name << '^' << exponents[i];
      any = true;
    }
    if (!any) name << '1';
    data.group_name = name.str();
  }

  // Mixed-radix index over the coordinates, first coordinate fastest.
  std::vector<unsigned> digits(k, 0);
  auto index_of = [&](const std::vector<unsigned>& d) {
    std::size_t idx = 0;
    for (std::size_t i = k; i-- > 0;) idx = idx * (exponents[i] + 1) + d[i];
    return static_cast<ElementIndex>(idx);
  };
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < k; ++i) {
      digits[i] = static_cast<unsigned>(rest % (exponents[i] + 1));
      rest /= exponents[i] + 1;
    }
    LatticeElement e;
    std::ostringstream label;
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (digits[i] == 0) continue;
      if (!e.order_factorization.empty()) label << '*';
      label << prime_symbol(i);
      if (digits[i] > 1) label << '^' << digits[i];
      e.order_factorization.push_back({ps[i], digits[i]});
      for (unsigned r = 0; r < digits[i]; ++r)
        if (mul_overflows(order, ps[i], order))
          throw DomainError("build_chain_product: group order overflows 64 bits");
    }
    std::sort(e.order_factorization.begin(), e.order_factorization.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    e.label = e.order_factorization.empty() ? "1" : label.str();
    e.order = order;
    data.elements.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i)
      if (digits[i] < exponents[i]) {
        auto up = digits;
        ++up[i];
        data.relation.emplace_back(static_cast<ElementIndex>(idx), index_of(up));
      }
  }
  return GroupLattice::create(std::move(data));
}

namespace {

// Subspace enumeration over F_p^n with vectors encoded in base p.
struct SubspaceBuilder {
  std::uint64_t p;
  unsigned n;
  std::size_t space;  // p^n

  std::vector<std::vector<std::uint64_t>> bases;  // RREF rows as digit vectors, encoded
  std::vector<unsigned> dims;

  std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
    std::uint64_t c = 0;
    for (unsigned i = 0; i < n; ++i) c = c * p + v[i];
    return c;
  }

  void emit_rref(unsigned k, const std::vector<unsigned>& pivots) {
    // Free positions: row r, column c > pivots[r], c not a pivot column.
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = pivots[r] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    std::vector<std::uint64_t> vals(free.size(), 0);
    while (true) {
      std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(n, 0));
      for (unsigned r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = vals[f];
      std::vector<std::uint64_t> enc;
      for (const auto& row : rows) enc.push_back(encode(row));
      bases.push_back(std::move(enc));
      dims.push_back(k);
      std::size_t f = 0;
      while (f < vals.size() && ++vals[f] == p) vals[f++] = 0;
      if (f == vals.size()) break;
    }
  }

  void run() {
    for (unsigned k = 0; k <= n; ++k) {
      std::vector<unsigned> piv(k);
      std::iota(piv.begin(), piv.end(), 0u);
      while (true) {
        emit_rref(k, piv);
        // next combination
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++piv[static_cast<std::size_t>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
      }
    }
  }

  std::vector<std::uint64_t> add(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                 std::uint64_t scale) const {
    for (unsigned i = 0; i < n; ++i) a[i] = (a[i] + scale * b[i]) % p;
    return a;
  }

  std::vector<std::uint64_t> decode(std::uint64_t c) const {
    std::vector<std::uint64_t> v(n);
    for (unsigned i = n; i-- > 0;) {
      v[i] = c % p;
      c /= p;
    }
    return v;
  }

  // Membership bitset (over all p^n vectors) of the span of a basis.
  std::vector<std::uint64_t> span_bits(const std::vector<std::uint64_t>& basis) const {
    std::vector<std::uint64_t> bits((space + 63) / 64, 0);
    std::vector<std::uint64_t> coeff(basis.size(), 0);
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::uint64_t b : basis) rows.push_back(decode(b));
    while (true) {
      std::vector<std::uint64_t> v(n, 0);
      for (std::size_t r = 0; r < rows.size(); ++r) v = add(v, rows[r], coeff[r]);
      const std::uint64_t c = encode(v);
      bits[c / 64] |= std::uint64_t{1} << (c % 64);
      std::size_t f = 0;
      while (f < coeff.size() && ++coeff[f] == p) coeff[f++] = 0;
      if (f == coeff.size()) break;
    }
    return bits;
  }

  std::string label(const std::vector<std::uint64_t>& basis) const {
    std::string s = "span(";
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (r) s += ',';
      const auto v = decode(basis[r]);
      for (unsigned i = 0; i < n; ++i) {
        if (p > 10 && i) s += '.';
        s += std::to_string(v[i]);
      }
    }
    return s + ")";
  }
};

}  // namespace

GroupLattice build_subspace_lattice(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw DomainError("build_subspace_lattice: " + std::to_string(p) + " is not prime");
  std::uint64_t space = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (mul_overflows(space, p, space) || space > (std::uint64_t{1} << 16))
      throw CapExceeded("build_subspace_lattice: p^n exceeds 2^16");
  }
  // Element count from the Gaussian binomials before enumerating anything.
  {
    BigInt total = 0;
    for (unsigned k = 0; k <= n; ++k) {
      BigInt num = 1, den = 1, pn = 1, pk = 1, pi = 1;
      for (unsigned i = 0; i < n; ++i) pn *= p;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      for (unsigned i = 0; i < k; ++i, pi *= p) {
        num *= pn - pi;
        den *= pk - pi;
      }
      total += num / den;
    }
    if (total > kMaxElements)
      throw CapExceeded("build_subspace_lattice: more than " + std::to_string(kMaxElements) + " subspaces");
  }

  SubspaceBuilder sb{p, n, static_cast<std::size_t>(space), {}, {}};
  sb.run();
  const std::size_t count = sb.bases.size();
  std::vector<std::vector<std::uint64_t>> spans;
  spans.reserve(count);
  for (const auto& b : sb.bases) spans.push_back(sb.span_bits(b));

  LatticeData data;
  data.group_name = "C_" + std::to_string(p) + "^" + std::to_string(n);
  for (std::size_t i = 0; i < count; ++i) {
    LatticeElement e;
    e.label = sb.label(sb.bases[i]);
    e.order = 1;
    for (unsigned d = 0; d < sb.dims[i]; ++d) e.order *= p;
    if (sb.dims[i] > 0) e.order_factorization.push_back({p, sb.dims[i]});
    data.elements.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || sb.dims[a] >= sb.dims[b]) continue;
      bool inside = true;
      for (std::uint64_t v : sb.bases[a])
        if (!((spans[b][v / 64] >> (v % 64)) & 1u)) {
          inside = false;
          break;
        }
      if (inside) data.relation.emplace_back(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
    }
  return GroupLattice::create(std::move(data));
}

}  // namespace transfersys
