#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <vector>

namespace transfersys::detail {

// Sequential file of fixed-width records (W little-endian 64-bit words).
class RecordWriter {
 public:
  RecordWriter(const std::filesystem::path& path, std::size_t words);
  void write(std::span<const std::uint64_t> rec);
  std::uint64_t count() const noexcept { return count_; }
  void close();

 private:
  std::ofstream out_;
  std::size_t words_;
  std::uint64_t count_ = 0;
};

class RecordReader {
 public:
  RecordReader(const std::filesystem::path& path, std::size_t words);
  // Points at the current record; valid until the next advance().
  bool valid() const noexcept { return valid_; }
  std::span<const std::uint64_t> current() const noexcept { return cur_; }
  void advance();

 private:
  std::ifstream in_;
  std::size_t words_;
  std::vector<std::uint64_t> cur_;
  bool valid_ = false;
};

// Lexicographic comparison of equal-width records.
int compare_records(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept;

}  // namespace transfersys::detail
