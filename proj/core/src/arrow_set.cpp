#include "transfersys/arrow_set.hpp"

#include <algorithm>

namespace transfersys {

ArrowSet ArrowSet::from_words(std::size_t nbits, std::span<const word_type> w) {
  ArrowSet s(nbits);
  std::copy_n(w.begin(), std::min(w.size(), s.words_.size()), s.words_.begin());
  return s;
}

void ArrowSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void ArrowSet::fill() noexcept {
  std::fill(words_.begin(), words_.end(), ~word_type{0});
  if (const std::size_t tail = nbits_ % word_bits; tail != 0)
    words_.back() = (word_type{1} << tail) - 1;
}

std::size_t ArrowSet::count() const noexcept {
  std::size_t c = 0;
  for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ArrowSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

bool ArrowSet::is_subset_of(const ArrowSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ArrowSet& ArrowSet::operator|=(const ArrowSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ArrowSet& ArrowSet::operator&=(const ArrowSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ArrowSet& ArrowSet::subtract(const ArrowSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> ArrowSet::to_indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::uint64_t ArrowSet::fingerprint() const noexcept { return fingerprint_words(words_); }

std::uint64_t fingerprint_words(std::span<const std::uint64_t> w) noexcept {
  // splitmix64 finalizer folded over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ w.size();
  for (std::uint64_t x : w) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
  }
  return h;
}

}  // namespace transfersys
