#include "transfersys/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "transfersys/errors.hpp"

namespace transfersys {

bool is_valid_rainbow(unsigned n, const std::vector<Arc>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].x >= arcs[i].y || arcs[i].y > n) return false;
    if (i > 0 && !(arcs[i - 1].x < arcs[i].x && arcs[i].y < arcs[i - 1].y)) return false;
  }
  return true;
}

Rainbow::Rainbow(unsigned n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  if (!is_valid_rainbow(n_, arcs_)) throw DomainError("arcs " + to_string() + " do not form a rainbow on {0.." + std::to_string(n_) + "}");
}

bool Rainbow::occupied(unsigned c) const {
  return std::any_of(arcs_.begin(), arcs_.end(), [c](const Arc& a) { return a.x == c || a.y == c; });
}

std::string Rainbow::to_string() const {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < arcs_.size(); ++i) s << (i ? ", " : "") << arcs_[i].x << "->" << arcs_[i].y;
  s << '}';
  return s.str();
}

BigInt trinomial(unsigned n, unsigned x, unsigned y) {
  if (x > y || y > n) throw DomainError("trinomial needs 0 <= x <= y <= n");
  return binomial(n, x) * binomial(n - x, y - x);
}

BigInt multinomial3(unsigned n, unsigned a, unsigned b, unsigned c) {
  if (a + b + c != n) throw DomainError("multinomial parts must sum to n");
  return binomial(n, a) * binomial(n - a, b);
}

BigInt rainbow_size(const Rainbow& r) {
  BigInt s = 0;
  for (const Arc& a : r.arcs()) s += trinomial(r.n(), a.x, a.y);
  return s;
}

Rainbow rainbow_excluding(unsigned n, unsigned skip) {
  if (n % 2 != 0 || skip > n) throw DomainError("rainbow_excluding needs even n and 0 <= skip <= n");
  std::vector<unsigned> c;
  for (unsigned i = 0; i <= n; ++i)
    if (i != skip) c.push_back(i);
  std::vector<Arc> arcs;
  for (unsigned i = 0; i < n / 2; ++i) arcs.push_back({c[i], c[n - 1 - i]});
  return Rainbow(n, std::move(arcs));
}

Rainbow complete_rainbow(unsigned n) {
  if (n % 2 == 0) throw DomainError("complete rainbow needs odd n");
  std::vector<Arc> arcs;
  for (unsigned i = 0; 2 * i < n; ++i) arcs.push_back({i, n - i});
  return Rainbow(n, std::move(arcs));
}

std::vector<Rainbow> canonical_max_rainbows(unsigned n) {
  if (n == 0) throw DomainError("canonical_max_rainbows needs n >= 1");
  if (n % 2 == 1) return {complete_rainbow(n)};
  if (n <= 6) return {rainbow_excluding(n, 0), rainbow_excluding(n, n)};
  return {rainbow_excluding(n, n / 2)};
}

BigInt square_free_complexity_lower(unsigned n) {
  if (n == 0) throw DomainError("square_free_complexity_lower needs n >= 1");
  const bool small_even = n == 2 || n == 4 || n == 6;
  BigInt s = 0;
  for (unsigned i = 0; i <= (n - 1) / 2; ++i)
    s += binomial(n, n - i) * binomial(n - i, small_even ? i + 1 : i);
  return s;
}

MaxRainbowSearch brute_force_max_rainbow(unsigned n) {
  if (n > 14) throw CapExceeded("brute_force_max_rainbow is limited to n <= 14");
  MaxRainbowSearch best;
  best.size = -1;
  // A rainbow is determined by its endpoint set: pair the sorted endpoints
  // from the outside in.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n + 1)); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<unsigned> pts;
    for (unsigned i = 0; i <= n; ++i)
      if (mask >> i & 1u) pts.push_back(i);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pts.size() / 2; ++i) arcs.push_back({pts[i], pts[pts.size() - 1 - i]});
    Rainbow r(n, std::move(arcs));
    const BigInt sz = rainbow_size(r);
    if (sz > best.size) {
      best.size = sz;
      best.argmax.clear();
    }
    if (sz == best.size) best.argmax.push_back(std::move(r));
  }
  std::sort(best.argmax.begin(), best.argmax.end());
  return best;
}

bool is_composable(const Rainbow& r) {
  const unsigned n = r.n();
  for (unsigned x = 0; x <= n; ++x) {
    if (r.occupied(x)) continue;
    for (unsigned y = x + 1; y <= n; ++y) {
      if (r.occupied(y)) continue;
      const bool nests = std::all_of(r.arcs().begin(), r.arcs().end(), [&](const Arc& a) {
        return (a.x < x && y < a.y) || (x < a.x && a.y < y);
      });
      if (nests) return true;
    }
  }
  return false;
}

namespace {

// Replaces arcs [b.begin, b.end) by `repl`, checking range and availability.
Rainbow replace_block(const Rainbow& r, Block b, const std::vector<std::pair<long, long>>& repl, const std::string& what) {
  const long n = r.n();
  std::vector<Arc> keep;
  for (std::size_t i = 0; i < r.arc_count(); ++i)
    if (i < b.begin || i >= b.end) keep.push_back(r.arcs()[i]);
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  for (const Arc& a : keep) taken[a.x] = taken[a.y] = true;
  for (auto [x, y] : repl) {
    if (x < 0 || y > n || x >= y) throw DomainError(what + ": endpoint out of range");
    for (long e : {x, y}) {
      if (taken[static_cast<std::size_t>(e)]) throw DomainError(what + ": class " + std::to_string(e) + " is not available");
      taken[static_cast<std::size_t>(e)] = true;
    }
    keep.push_back({static_cast<unsigned>(x), static_cast<unsigned>(y)});
  }
  std::sort(keep.begin(), keep.end());
  if (!is_valid_rainbow(r.n(), keep)) throw DomainError(what + ": result is not strictly nested");
  return Rainbow(r.n(), std::move(keep));
}

void check_block(const Rainbow& r, Block b, const std::string& what) {
  if (r.empty()) throw DomainError(what + ": rainbow has no arcs");
  if (b.empty() || b.end > r.arc_count()) throw DomainError(what + ": empty or out-of-range block");
}

}  // namespace

Rainbow apply_arc_op(const Rainbow& r, ArcOp op, std::size_t arc_index) {
  const std::string what = to_string(op);
  if (arc_index >= r.arc_count()) throw DomainError(what + ": arc index out of range");
  const long n = r.n();
  const long x = r.arcs()[arc_index].x;
  const long y = r.arcs()[arc_index].y;
  bool ok = false;
  std::pair<long, long> to;
  switch (op) {
    case ArcOp::translate_right: ok = x + y < n; to = {x + 1, y + 1}; break;
    case ArcOp::translate_left: ok = x + y > n; to = {x - 1, y - 1}; break;
    case ArcOp::contract_right: ok = y - x > n - y; to = {x, y - 1}; break;
    case ArcOp::contract_left: ok = y - x > x; to = {x + 1, y}; break;
    case ArcOp::expand_right: ok = y - x < n - y; to = {x, y + 1}; break;
    case ArcOp::expand_left: ok = y - x < x; to = {x - 1, y}; break;
  }
  if (!ok) throw DomainError(what + ": size condition fails for arc " + std::to_string(x) + "->" + std::to_string(y));
  return replace_block(r, {arc_index, arc_index + 1}, {to}, what);
}

bool block_full_left(const Rainbow& r, Block b) {
  for (std::size_t i = b.begin; i < b.end; ++i)
    if (r.arcs()[i].x != r.arcs()[b.begin].x + (i - b.begin)) return false;
  return true;
}

bool block_full_right(const Rainbow& r, Block b) {
  for (std::size_t i = b.begin; i < b.end; ++i)
    if (r.arcs()[i].y + (i - b.begin) != r.arcs()[b.begin].y) return false;
  return true;
}

Block left_block(const Rainbow& r) {
  Block b{0, 0};
  while (b.end < r.arc_count() && block_full_left(r, {0, b.end + 1})) ++b.end;
  return b;
}

Block right_block(const Rainbow& r) {
  Block b{0, 0};
  while (b.end < r.arc_count() && block_full_right(r, {0, b.end + 1})) ++b.end;
  return b;
}

Block outer_block(const Rainbow& r) { return {0, std::min(left_block(r).end, right_block(r).end)}; }

Rainbow apply_block_op(const Rainbow& r, BlockOp op, Block b) {
  const std::string what = to_string(op);
  const long n = r.n();
  if (op == BlockOp::reflect) {
    if (r.empty()) throw DomainError(what + ": rainbow has no arcs");
    std::vector<Arc> arcs;
    for (const Arc& a : r.arcs()) arcs.push_back({r.n() - a.y, r.n() - a.x});
    return Rainbow(r.n(), std::move(arcs));
  }
  check_block(r, b, what);
  const Arc outer = r.arcs()[b.begin];
  std::vector<std::pair<long, long>> repl;
  auto shifted = [&](long dx, long dy) {
    for (std::size_t i = b.begin; i < b.end; ++i) repl.emplace_back(long(r.arcs()[i].x) + dx, long(r.arcs()[i].y) + dy);
  };
  switch (op) {
    case BlockOp::translate_right:
      if (!block_full_left(r, b) || !(long(outer.x) + outer.y < n))
        throw DomainError(what + ": block must be full on the left with outer endpoints summing below n");
      shifted(1, 1);
      break;
    case BlockOp::translate_left:
      if (!block_full_right(r, b) || !(long(outer.x) + outer.y > n))
        throw DomainError(what + ": block must be full on the right with outer endpoints summing above n");
      shifted(-1, -1);
      break;
    case BlockOp::contract_left: {
      if (!(b == outer_block(r))) throw DomainError(what + ": only the outer block can be contracted");
      const long inner = static_cast<long>(b.size()) - 1;
      const bool ok = outer.x == 0 && (long(outer.y) == n - 1 || (long(outer.y) == n && 3 * inner < n));
      if (!ok) throw DomainError(what + ": needs outer arc 0->n-1, or 0->n with fewer than n/3 inner arcs");
      shifted(1, 0);
      break;
    }
    case BlockOp::expand_left: {
      const Block bl = left_block(r), br = right_block(r), bo = outer_block(r);
      if (!(b == Block{bl.end, br.end}) || b.empty())
        throw DomainError(what + ": block must be the right block minus the left block");
      const Arc first = r.arcs()[0];
      const long inner = static_cast<long>(bo.size()) - 1;
      if (!(first.x == 0 && long(first.y) == n && bo == bl && 3 * inner >= n))
        throw DomainError(what + ": needs outer arc 0->n, outer block equal to the left block, and at least n/3 inner arcs");
      shifted(-1, 0);
      break;
    }
    case BlockOp::reflect:
      break;
  }
  return replace_block(r, b, repl, what);
}

NormalizeResult normalize_to_composable(const Rainbow& input) {
  const unsigned n = input.n();
  if (input.arc_count() >= (n + 1) / 2)
    throw DomainError("normalize_to_composable needs fewer than floor((n+1)/2) arcs");
  NormalizeResult out{input, {}};
  Rainbow& r = out.result;
  auto apply = [&](BlockOp op, Block b) {
    r = apply_block_op(r, op, b);
    out.ops_used.push_back({op, b});
  };
  auto occ = [&](long c) { return c >= 0 && c <= long(n) && r.occupied(static_cast<unsigned>(c)); };

  for (int guard = 0; guard < 32; ++guard) {
    if (is_composable(r)) return out;
    bool restart = false;
    for (int inner = 0; inner < 4 && !restart; ++inner) {
      if (!occ(n) && !occ(long(n) - 1)) {
        apply(BlockOp::translate_right, left_block(r));
        restart = true;
      } else if (!(outer_block(r) == left_block(r))) {
        apply(BlockOp::reflect, {});
      } else {
        break;
      }
    }
    if (restart) continue;
    if (!occ(0)) {
      apply(BlockOp::translate_left, right_block(r));
      continue;
    }
    const Block bo = outer_block(r);
    const Block inner_right{left_block(r).end, right_block(r).end};
    const long a = r.arcs()[bo.end - 1].x;
    if (!occ(a + 2)) {
      apply(BlockOp::translate_left, inner_right);
      continue;
    }
    if (!occ(n)) {
      apply(BlockOp::contract_left, bo);
      continue;
    }
    if (3 * bo.size() < n + 3)
      apply(BlockOp::contract_left, bo);
    else
      apply(BlockOp::expand_left, inner_right);
  }
  throw Error("normalize_to_composable did not terminate on " + input.to_string());
}

std::string to_string(ArcOp op) {
  switch (op) {
    case ArcOp::translate_left: return "translate_left";
    case ArcOp::translate_right: return "translate_right";
    case ArcOp::contract_left: return "contract_left";
    case ArcOp::contract_right: return "contract_right";
    case ArcOp::expand_left: return "expand_left";
    case ArcOp::expand_right: return "expand_right";
  }
  return "?";
}

std::string to_string(BlockOp op) {
  switch (op) {
    case BlockOp::reflect: return "reflect";
    case BlockOp::translate_left: return "block_translate_left";
    case BlockOp::translate_right: return "block_translate_right";
    case BlockOp::contract_left: return "block_contract_left";
    case BlockOp::expand_left: return "block_expand_left";
  }
  return "?";
}

std::uint64_t ap3_count(unsigned n) { return std::uint64_t{n / 2} * ((n + 1) / 2); }

std::uint64_t ap3_count_brute(unsigned n) {
  std::uint64_t c = 0;
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned d = 1; a + 2 * d <= n; ++d) ++c;
  return c;
}

std::vector<BigInt> riordan_numbers(unsigned max_n) {
  std::vector<BigInt> g{1, 0};
  for (unsigned k = 0; g.size() <= max_n; ++k) {
    const BigInt num = BigInt(k + 1) * (2 * g[k + 1] + 3 * g[k]);
    g.push_back(num / (k + 3));
  }
  g.resize(max_n + 1);
  return g;
}

std::pair<BigInt, BigInt> riordan_inequality_sides(unsigned n) {
  if (n == 0) throw DomainError("riordan_inequality_sides needs n >= 1");
  BigInt lhs = 0, rhs = 0;
  for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
    lhs += multinomial3(n, i + 1, n - 2 * i - 1, i);
    rhs += multinomial3(n, i, n - 2 * i, i);
  }
  return {lhs, rhs};
}

BigInt gaussian_binomial(unsigned n, unsigned k, std::uint64_t p) {
  if (k > n) throw DomainError("gaussian_binomial needs k <= n");
  if (p < 2) throw DomainError("gaussian_binomial needs p >= 2");
  BigInt num = 1, den = 1;
  const BigInt P = p;
  BigInt pn = boost::multiprecision::pow(P, n), pk = boost::multiprecision::pow(P, k), pi = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= pn - pi;
    den *= pk - pi;
    pi *= P;
  }
  return num / den;
}

BigInt elementary_abelian_lower(unsigned n, std::uint64_t p) {
  BigInt s = 0;
  if (n == 0) return s;
  if (n == 2 || n == 4) {
    for (unsigned i = 0; i < n / 2; ++i) s += gaussian_binomial(n, i, p) * gaussian_binomial(n - i, i + 1, p);
    return s;
  }
  const unsigned last = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
  for (unsigned i = 0; i <= last; ++i) s += gaussian_binomial(n, n - i, p) * gaussian_binomial(n - i, i, p);
  return s;
}

}  // namespace transfersys
