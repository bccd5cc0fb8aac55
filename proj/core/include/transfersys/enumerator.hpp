#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "transfersys/arrow_set.hpp"
#include "transfersys/closure.hpp"
#include "transfersys/errors.hpp"

namespace transfersys {

struct LayerProgress {
  std::size_t layer = 0;
  std::uint64_t frontier_size = 0;
  std::uint64_t total_so_far = 0;
};

struct EnumerateOptions {
  bool store = false;
  unsigned jobs = 1;
  // Abort once the in-memory dedup structures exceed this many bytes.
  // Zero disables the check.
  std::size_t memory_budget_bytes = 0;
  // When set, layers move to sorted files in this directory once memory
  // use passes spill_threshold_bytes. Not allowed together with store.
  std::optional<std::filesystem::path> spill_dir;
  std::size_t spill_threshold_bytes = std::size_t{1} << 30;
  std::function<void(const LayerProgress&)> progress;
};

struct StoredSystem {
  ArrowSet arrows;
  std::size_t stratum = 0;
};

struct EnumerationResult {
  std::uint64_t total_count = 0;
  std::vector<std::uint64_t> stratum_counts;
  std::vector<StoredSystem> systems;  // filled only when store = true
  bool spilled = false;
};

class MemoryBudgetExceeded : public Error {
 public:
  MemoryBudgetExceeded(const std::string& what, std::vector<std::uint64_t> partial)
      : Error(what), partial_(std::move(partial)) {}
  // Counts of the layers completed before the budget ran out.
  const std::vector<std::uint64_t>& partial_strata() const noexcept { return partial_; }

 private:
  std::vector<std::uint64_t> partial_;
};

// Breadth-first enumeration of all transfer systems starting from the empty
// one. Layer i holds the systems first reached after i single-arrow
// extensions. Output is identical for every jobs value; stored systems are
// ordered by (stratum, words).
EnumerationResult enumerate(const ArrowTables& tables, const EnumerateOptions& opts = {});

std::uint64_t count(const ArrowTables& tables, unsigned jobs = 1);
std::vector<std::uint64_t> distribution(const ArrowTables& tables, unsigned jobs = 1);

// Reference enumeration: tests all 2^|arrows| subsets for closure.
// Limited to 24 arrows.
std::vector<ArrowSet> brute_force_transfer_systems(const ArrowTables& tables);

}  // namespace transfersys
