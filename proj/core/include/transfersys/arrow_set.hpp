#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace transfersys {

// Fixed-width bit vector over the canonical arrow order of one lattice.
class ArrowSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  ArrowSet() = default;
  explicit ArrowSet(std::size_t nbits)
      : nbits_(nbits), words_(word_count(nbits), 0) {}

  static std::size_t word_count(std::size_t nbits) {
    return (nbits + word_bits - 1) / word_bits;
  }
  // Rebuild from raw words (e.g. read back from a spill file).
  static ArrowSet from_words(std::size_t nbits, std::span<const word_type> w);

  std::size_t size() const noexcept { return nbits_; }
  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void set(std::size_t i) noexcept {
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
  }
  void reset(std::size_t i) noexcept {
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
  }
  // Sets bit i and reports whether it was previously clear.
  bool insert(std::size_t i) noexcept {
    word_type& w = words_[i / word_bits];
    const word_type m = word_type{1} << (i % word_bits);
    const bool fresh = (w & m) == 0;
    w |= m;
    return fresh;
  }
  void clear() noexcept;
  void fill() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const ArrowSet& other) const noexcept;

  ArrowSet& operator|=(const ArrowSet& other) noexcept;
  ArrowSet& operator&=(const ArrowSet& other) noexcept;
  ArrowSet& subtract(const ArrowSet& other) noexcept;

  std::vector<std::size_t> to_indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * word_bits + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const ArrowSet& a, const ArrowSet& b) noexcept {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }
  // Canonical total order: lexicographic on the word vector.
  friend bool operator<(const ArrowSet& a, const ArrowSet& b) noexcept {
    return a.words_ < b.words_;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<word_type> words_;
};

// 64-bit mix over a raw word span; used by hashing and spill files alike.
std::uint64_t fingerprint_words(std::span<const std::uint64_t> w) noexcept;

struct ArrowSetHash {
  std::size_t operator()(const ArrowSet& s) const noexcept {
    return static_cast<std::size_t>(s.fingerprint());
  }
};

}  // namespace transfersys
