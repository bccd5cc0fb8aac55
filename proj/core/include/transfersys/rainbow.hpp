#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transfersys/bigint.hpp"

namespace transfersys {

struct Arc {
  unsigned x = 0;
  unsigned y = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Strictly nested arcs on {0, ..., n}, outermost first.
class Rainbow {
 public:
  Rainbow() = default;
  // Sorts by x and validates; throws DomainError.
  Rainbow(unsigned n, std::vector<Arc> arcs);

  unsigned n() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  bool empty() const noexcept { return arcs_.empty(); }
  // True when class c is an endpoint of some arc.
  bool occupied(unsigned c) const;

  std::string to_string() const;
  friend bool operator==(const Rainbow&, const Rainbow&) = default;
  friend auto operator<=>(const Rainbow& a, const Rainbow& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  unsigned n_ = 0;
  std::vector<Arc> arcs_;
};

bool is_valid_rainbow(unsigned n, const std::vector<Arc>& arcs);

// Multinomial n! / (x! (y-x)! (n-y)!): the number of arrows over the arc x -> y
// in the Boolean lattice [1]^n.
BigInt trinomial(unsigned n, unsigned x, unsigned y);
BigInt multinomial3(unsigned n, unsigned a, unsigned b, unsigned c);
BigInt rainbow_size(const Rainbow& r);

// Rainbow using every class except `skip` (n even).
Rainbow rainbow_excluding(unsigned n, unsigned skip);
// Arcs i -> n - i (n odd).
Rainbow complete_rainbow(unsigned n);

std::vector<Rainbow> canonical_max_rainbows(unsigned n);
BigInt square_free_complexity_lower(unsigned n);

struct MaxRainbowSearch {
  BigInt size;
  std::vector<Rainbow> argmax;  // sorted
};
// Exhaustive over all 2^n rainbows; n <= 14.
MaxRainbowSearch brute_force_max_rainbow(unsigned n);

// Some arc can be added while keeping the arcs strictly nested.
bool is_composable(const Rainbow& r);

enum class ArcOp {
  translate_left,
  translate_right,
  contract_left,
  contract_right,
  expand_left,
  expand_right,
};

// Throws DomainError when the size condition fails, an endpoint is taken or
// out of range, or nesting breaks.
Rainbow apply_arc_op(const Rainbow& r, ArcOp op, std::size_t arc_index);

// Half-open range [begin, end) of arc indices.
struct Block {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  friend bool operator==(const Block&, const Block&) = default;
};

bool block_full_left(const Rainbow& r, Block b);
bool block_full_right(const Rainbow& r, Block b);
// Largest outer blocks full on the left / right, and their intersection.
Block left_block(const Rainbow& r);
Block right_block(const Rainbow& r);
Block outer_block(const Rainbow& r);

enum class BlockOp {
  reflect,
  translate_left,
  translate_right,
  contract_left,
  expand_left,
};

// reflect ignores `b` but still requires a nonempty rainbow.
Rainbow apply_block_op(const Rainbow& r, BlockOp op, Block b);

struct NormalizeStep {
  BlockOp op;
  Block block;
};

struct NormalizeResult {
  Rainbow result;
  std::vector<NormalizeStep> ops_used;
};

// Runs the block-operation procedure until the rainbow is composable.
// Requires fewer than floor((n+1)/2) arcs.
NormalizeResult normalize_to_composable(const Rainbow& r);

std::string to_string(ArcOp op);
std::string to_string(BlockOp op);

// Number of 3-term progressions with positive difference in {0, ..., n}.
std::uint64_t ap3_count(unsigned n);
std::uint64_t ap3_count_brute(unsigned n);

// Riordan numbers, gamma_0 = 1, gamma_1 = 0, by the three-term recurrence.
std::vector<BigInt> riordan_numbers(unsigned max_n);
// Sums of multinomials (n; i+1, n-2i-1, i) and (n; i, n-2i, i) over
// 0 <= i <= floor((n-1)/2).
std::pair<BigInt, BigInt> riordan_inequality_sides(unsigned n);

// Gaussian binomial (n choose k)_p by the product formula.
BigInt gaussian_binomial(unsigned n, unsigned k, std::uint64_t p);
// Conjectured complexity of (C_p)^n; a lower-bound candidate only.
BigInt elementary_abelian_lower(unsigned n, std::uint64_t p);

}  // namespace transfersys
