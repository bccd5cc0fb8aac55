#include "transfersys/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "spill.hpp"

namespace transfersys {
namespace {

using Word = std::uint64_t;
using Record = std::span<const Word>;

bool record_less(Record a, Record b) { return detail::compare_records(a, b) < 0; }

// Arena of fixed-width records with an open-addressing index for exact
// membership. Fingerprints pick the probe start; equality is always checked
// on the full record.
class SystemTable {
 public:
  explicit SystemTable(std::size_t words) : words_(words) { rehash(1024); }

  std::size_t size() const noexcept { return count_; }
  Record at(std::size_t i) const { return {arena_.data() + i * words_, words_}; }

  bool contains(Record rec, std::uint64_t fp) const { return find_slot(rec, fp).second; }

  // Appends when absent; returns true if the record was new.
  bool insert(Record rec, std::uint64_t fp) {
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    const auto [slot, found] = find_slot(rec, fp);
    if (found) return false;
    arena_.insert(arena_.end(), rec.begin(), rec.end());
    slots_[slot] = static_cast<std::uint64_t>(count_) + 1;
    fps_.push_back(fp);
    ++count_;
    return true;
  }

  void clear() {
    arena_.clear();
    arena_.shrink_to_fit();
    fps_.clear();
    fps_.shrink_to_fit();
    count_ = 0;
    slots_.clear();
    rehash(1024);
  }

  std::size_t bytes() const noexcept {
    return arena_.capacity() * sizeof(Word) + slots_.capacity() * sizeof(std::uint64_t) +
           fps_.capacity() * sizeof(std::uint64_t);
  }

 private:
  std::pair<std::size_t, bool> find_slot(Record rec, std::uint64_t fp) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = static_cast<std::size_t>(fp) & mask;
    while (slots_[s] != 0) {
      const std::size_t i = static_cast<std::size_t>(slots_[s] - 1);
      if (fps_[i] == fp && std::equal(rec.begin(), rec.end(), arena_.begin() + static_cast<std::ptrdiff_t>(i * words_)))
        return {s, true};
      s = (s + 1) & mask;
    }
    return {s, false};
  }

  void rehash(std::size_t n) {
    slots_.assign(n, 0);
    const std::size_t mask = n - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t s = static_cast<std::size_t>(fps_[i]) & mask;
      while (slots_[s] != 0) s = (s + 1) & mask;
      slots_[s] = static_cast<std::uint64_t>(i) + 1;
    }
  }

  std::size_t words_;
  std::vector<Word> arena_;
  std::vector<std::uint64_t> fps_;
  std::vector<std::uint64_t> slots_;
  std::size_t count_ = 0;
};

// Sorted, duplicate-free copy of a table's records.
std::vector<Word> sorted_records(const SystemTable& t, std::size_t words) {
  std::vector<std::size_t> order(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return record_less(t.at(a), t.at(b)); });
  std::vector<Word> out;
  out.reserve(order.size() * words);
  for (std::size_t i : order) {
    const Record r = t.at(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

class Enumeration {
 public:
  Enumeration(const ArrowTables& tables, const EnumerateOptions& opts)
      : tables_(tables),
        opts_(opts),
        nbits_(tables.arrow_count()),
        words_(std::max<std::size_t>(1, ArrowSet::word_count(nbits_))),
        jobs_(std::max(1u, opts.jobs)),
        seen_(words_) {}

  EnumerationResult run();

 private:
  ArrowSet to_set(Record r) const { return ArrowSet::from_words(nbits_, r); }

  // Extends records [begin, end) of `frontier` and fills per-worker tables with
  // closures that `is_old` rejects.
  template <class IsOld>
  std::vector<SystemTable> expand(Record (*get)(const void*, std::size_t), const void* ctx,
                                  std::size_t frontier_size, IsOld&& is_old) const;

  void check_budget(std::size_t extra) const;
  void report(std::size_t layer, std::uint64_t frontier) const {
    if (opts_.progress) opts_.progress({layer, frontier, result_.total_count});
  }

  void spill_existing_layers();
  std::uint64_t spill_layer(std::size_t layer);
  std::filesystem::path layer_path(std::size_t layer) const {
    return *opts_.spill_dir / ("layer_" + std::to_string(layer) + ".bin");
  }

  const ArrowTables& tables_;
  const EnumerateOptions& opts_;
  std::size_t nbits_;
  std::size_t words_;
  unsigned jobs_;
  SystemTable seen_;
  std::vector<std::size_t> layer_start_;  // in-memory mode: layer i is [start_i, start_{i+1})
  EnumerationResult result_;
  bool spilled_ = false;
  std::size_t run_counter_ = 0;
};

template <class IsOld>
std::vector<SystemTable> Enumeration::expand(Record (*get)(const void*, std::size_t), const void* ctx,
                                             std::size_t frontier_size, IsOld&& is_old) const {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs_, std::max<std::size_t>(1, frontier_size)));
  std::vector<SystemTable> local;
  local.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) local.emplace_back(words_);
  const auto& reps = tables_.orbit_reps();

  auto work = [&](unsigned w) {
    const std::size_t lo = frontier_size * w / workers;
    const std::size_t hi = frontier_size * (w + 1) / workers;
    std::vector<Word> buf(words_, 0);
    for (std::size_t i = lo; i < hi; ++i) {
      const ArrowSet sys = to_set(get(ctx, i));
      for (ArrowIndex a : reps) {
        if (sys.test(a)) continue;
        const ArrowSet next = closure_with(tables_, sys, a);
        std::fill(buf.begin(), buf.end(), 0);
        std::copy(next.words().begin(), next.words().end(), buf.begin());
        const std::uint64_t fp = fingerprint_words(buf);
        if (!is_old(Record(buf), fp)) local[w].insert(buf, fp);
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  return local;
}

void Enumeration::check_budget(std::size_t extra) const {
  if (opts_.memory_budget_bytes == 0) return;
  const std::size_t used = seen_.bytes() + extra;
  if (used > opts_.memory_budget_bytes)
    throw MemoryBudgetExceeded("enumeration exceeded the memory budget (" + std::to_string(used) + " > " +
                                   std::to_string(opts_.memory_budget_bytes) + " bytes) after " +
                                   std::to_string(result_.stratum_counts.size()) + " complete layers, " +
                                   std::to_string(result_.total_count) + " systems",
                               result_.stratum_counts);
}

EnumerationResult Enumeration::run() {
  // Layer 0: the empty system.
  {
    std::vector<Word> empty(words_, 0);
    seen_.insert(empty, fingerprint_words(empty));
  }
  layer_start_ = {0, 1};
  result_.stratum_counts = {1};
  result_.total_count = 1;
  report(0, 1);

  for (std::size_t layer = 0;; ++layer) {
    std::vector<Word> next;  // sorted records of layer + 1
    if (!spilled_) {
      const std::size_t begin = layer_start_[layer];
      const std::size_t end = layer_start_[layer + 1];
      struct Ctx {
        const SystemTable* t;
        std::size_t base;
      } ctx{&seen_, begin};
      auto get = [](const void* c, std::size_t i) {
        const auto* x = static_cast<const Ctx*>(c);
        return x->t->at(x->base + i);
      };
      auto local = expand(get, &ctx, end - begin,
                          [&](Record r, std::uint64_t fp) { return seen_.contains(r, fp); });
      // Merge: union of worker results, canonical order.
      SystemTable merged(words_);
      std::size_t local_bytes = 0;
      for (auto& t : local) {
        for (std::size_t i = 0; i < t.size(); ++i) merged.insert(t.at(i), fingerprint_words(t.at(i)));
        local_bytes += t.bytes();
        t.clear();
      }
      check_budget(merged.bytes() + local_bytes);
      next = sorted_records(merged, words_);
    } else {
      next.clear();
      spill_layer(layer);
      if (result_.stratum_counts.size() == layer + 1) break;
      report(layer + 1, result_.stratum_counts.back());
      continue;
    }

    const std::size_t fresh = next.size() / words_;
    if (fresh == 0) break;
    for (std::size_t i = 0; i < fresh; ++i) {
      const Record r(next.data() + i * words_, words_);
      seen_.insert(r, fingerprint_words(r));
    }
    layer_start_.push_back(seen_.size());
    result_.stratum_counts.push_back(fresh);
    result_.total_count += fresh;
    report(layer + 1, fresh);
    check_budget(0);

    if (opts_.spill_dir && seen_.bytes() > opts_.spill_threshold_bytes) spill_existing_layers();
  }

  if (opts_.store && !spilled_) {
    result_.systems.reserve(seen_.size());
    for (std::size_t layer = 0; layer + 1 < layer_start_.size(); ++layer)
      for (std::size_t i = layer_start_[layer]; i < layer_start_[layer + 1]; ++i)
        result_.systems.push_back({to_set(seen_.at(i)), layer});
  }
  result_.spilled = spilled_;
  return std::move(result_);
}

void Enumeration::spill_existing_layers() {
  std::filesystem::create_directories(*opts_.spill_dir);
  for (std::size_t layer = 0; layer + 1 < layer_start_.size(); ++layer) {
    detail::RecordWriter w(layer_path(layer), words_);
    for (std::size_t i = layer_start_[layer]; i < layer_start_[layer + 1]; ++i) w.write(seen_.at(i));
    w.close();
  }
  seen_.clear();
  layer_start_.clear();
  spilled_ = true;
}

// Expands the on-disk layer `layer` and writes layer + 1. Appends its count to
// the result unless it is empty.
std::uint64_t Enumeration::spill_layer(std::size_t layer) {
  const std::size_t chunk = std::max<std::size_t>(1, (std::size_t{1} << 22) / (words_ * sizeof(Word)));
  std::vector<std::filesystem::path> runs;
  SystemTable pending(words_);

  auto flush = [&]() {
    if (pending.size() == 0) return;
    const auto sorted = sorted_records(pending, words_);
    runs.push_back(*opts_.spill_dir / ("run_" + std::to_string(run_counter_++) + ".bin"));
    detail::RecordWriter w(runs.back(), words_);
    for (std::size_t i = 0; i < sorted.size() / words_; ++i) w.write(Record(sorted.data() + i * words_, words_));
    w.close();
    pending.clear();
  };

  detail::RecordReader frontier(layer_path(layer), words_);
  std::vector<Word> block;
  while (frontier.valid()) {
    block.clear();
    std::size_t n = 0;
    while (frontier.valid() && n < chunk) {
      block.insert(block.end(), frontier.current().begin(), frontier.current().end());
      frontier.advance();
      ++n;
    }
    struct Ctx {
      const std::vector<Word>* b;
      std::size_t w;
    } ctx{&block, words_};
    auto get = [](const void* c, std::size_t i) {
      const auto* x = static_cast<const Ctx*>(c);
      return Record(x->b->data() + i * x->w, x->w);
    };
    auto local = expand(get, &ctx, n, [](Record, std::uint64_t) { return false; });
    for (auto& t : local) {
      for (std::size_t i = 0; i < t.size(); ++i) pending.insert(t.at(i), fingerprint_words(t.at(i)));
      t.clear();
    }
    if (pending.bytes() > opts_.spill_threshold_bytes) flush();
  }
  flush();

  // Merge runs, drop duplicates and anything already in an earlier layer.
  std::vector<detail::RecordReader> run_readers;
  for (const auto& p : runs) run_readers.emplace_back(p, words_);
  std::vector<detail::RecordReader> old;
  for (std::size_t l = 0; l <= layer; ++l) old.emplace_back(layer_path(l), words_);

  detail::RecordWriter out(layer_path(layer + 1), words_);
  std::vector<Word> last;
  while (true) {
    detail::RecordReader* best = nullptr;
    for (auto& r : run_readers)
      if (r.valid() && (!best || record_less(r.current(), best->current()))) best = &r;
    if (!best) break;
    const std::vector<Word> rec(best->current().begin(), best->current().end());
    best->advance();
    if (!last.empty() && rec == last) continue;
    last = rec;
    bool known = false;
    for (auto& o : old) {
      while (o.valid() && record_less(o.current(), rec)) o.advance();
      if (o.valid() && detail::compare_records(o.current(), rec) == 0) known = true;
    }
    if (!known) out.write(rec);
  }
  out.close();
  run_readers.clear();
  for (const auto& p : runs) std::filesystem::remove(p);

  const std::uint64_t fresh = out.count();
  if (fresh > 0) {
    result_.stratum_counts.push_back(fresh);
    result_.total_count += fresh;
  } else {
    std::filesystem::remove(layer_path(layer + 1));
  }
  return fresh;
}

}  // namespace

EnumerationResult enumerate(const ArrowTables& tables, const EnumerateOptions& opts) {
  if (opts.store && opts.spill_dir) throw DomainError("enumerate: store and spill_dir cannot be combined");
  return Enumeration(tables, opts).run();
}

std::uint64_t count(const ArrowTables& tables, unsigned jobs) {
  EnumerateOptions o;
  o.jobs = jobs;
  return enumerate(tables, o).total_count;
}

std::vector<std::uint64_t> distribution(const ArrowTables& tables, unsigned jobs) {
  EnumerateOptions o;
  o.jobs = jobs;
  return enumerate(tables, o).stratum_counts;
}

std::vector<ArrowSet> brute_force_transfer_systems(const ArrowTables& tables) {
  const std::size_t m = tables.arrow_count();
  if (m > 24) throw CapExceeded("brute-force enumeration is limited to 24 arrows");
  std::vector<ArrowSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ArrowSet s(m);
    if (m > 0) s.words()[0] = mask;
    if (is_closed(tables, s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace transfersys
