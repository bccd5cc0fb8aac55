#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "transfersys/basis.hpp"
#include "transfersys/closure.hpp"
#include "transfersys/enumerator.hpp"
#include "transfersys/errors.hpp"
#include "transfersys/grid_rainbow.hpp"
#include "transfersys/interchange.hpp"
#include "transfersys/lattice.hpp"
#include "transfersys/lattice_source.hpp"
#include "transfersys/rainbow.hpp"

namespace transfersys::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct SourceOptions {
  std::string builtin;
  std::string file;
};

struct CommonOptions {
  unsigned jobs = 1;
  std::string json_path;
  bool quiet = false;
};

struct EnumerateArgs {
  SourceOptions source;
  bool store = false;
  std::string csv_path;
  std::string systems_path;
  std::string spill_dir;
  std::size_t memory_budget_mb = 0;
};

struct InvariantsArgs {
  SourceOptions source;
  bool width_only = false;
};

struct RainbowArgs {
  std::optional<unsigned> square_free;
  std::vector<unsigned> grid;
  bool brute_force = true;
};

struct DistributionArgs {
  SourceOptions source;
  std::string csv_path;
};

void add_source(CLI::App* cmd, SourceOptions& s) {
  auto* pos = cmd->add_option("source", s.builtin,
                              "Builtin lattice: cyclic:p^2*q, boolean:4, subspace:p=2,n=3");
  auto* file = cmd->add_option("--file", s.file, "Lattice interchange document")->check(CLI::ExistingFile);
  pos->excludes(file);
  file->excludes(pos);
}

GroupLattice load_source(const SourceOptions& s) {
  if (!s.file.empty()) return load_lattice_file(s.file);
  if (s.builtin.empty()) throw FormatError("no lattice given: pass a builtin source or --file");
  return parse_builtin_lattice(s.builtin);
}

Json lattice_summary(const ArrowTables& t) {
  const GroupLattice& L = t.lattice();
  Json j;
  j["name"] = L.group_name();
  j["elements"] = L.size();
  j["arrows"] = t.arrow_count();
  j["arrow_classes"] = t.orbit_reps().size();
  return j;
}

std::string arrow_label(const GroupLattice& L, const Arrow& a) {
  return L.element(a.source).label + " -> " + L.element(a.target).label;
}

void write_strata_csv(const std::string& path, const std::vector<std::uint64_t>& strata) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << "stratum,count\n";
  for (std::size_t i = 0; i < strata.size(); ++i) f << i << ',' << strata[i] << '\n';
  if (!f) throw Error("write to " + path + " failed");
}

void print_strata(std::ostream& out, const std::vector<std::uint64_t>& strata) {
  for (std::size_t i = 0; i < strata.size(); ++i) out << "  stratum " << i << ": " << strata[i] << '\n';
}

// Shared state of one invocation.
struct Run {
  Run(const CommonOptions& c, std::ostream& o, std::ostream& e) : common(c), out(o), err(e) {}

  const CommonOptions& common;
  std::ostream& out;
  std::ostream& err;
  Json report = Json::object();
  Clock::time_point start = Clock::now();

  std::function<void(const LayerProgress&)> progress() const {
    if (common.quiet) return {};
    return [this](const LayerProgress& p) {
      err << "layer " << p.layer << ": frontier " << p.frontier_size << ", total " << p.total_so_far << '\n';
    };
  }

  bool json_to_stdout() const { return common.json_path == "-"; }
  std::ostringstream discarded;
  std::ostream& text() { return json_to_stdout() ? discarded : out; }

  void finish() {
    report["wall_time"] = std::chrono::duration<double>(Clock::now() - start).count();
    report["jobs"] = common.jobs;
    if (common.json_path.empty()) return;
    const std::string body = report.dump(2) + "\n";
    if (json_to_stdout()) {
      out << body;
      return;
    }
    std::ofstream f(common.json_path, std::ios::binary);
    if (!f) throw Error("cannot open " + common.json_path + " for writing");
    f << body;
  }
};

void cmd_enumerate(Run& run, const EnumerateArgs& a) {
  const GroupLattice L = load_source(a.source);
  const ArrowTables t(L);
  run.report["lattice"] = lattice_summary(t);

  EnumerateOptions opts;
  opts.jobs = run.common.jobs;
  opts.store = a.store || !a.systems_path.empty();
  opts.memory_budget_bytes = a.memory_budget_mb << 20;
  if (!a.spill_dir.empty()) opts.spill_dir = a.spill_dir;
  opts.progress = run.progress();
  const EnumerationResult r = enumerate(t, opts);

  Json res;
  res["total"] = r.total_count;
  res["strata"] = r.stratum_counts;
  res["stored"] = r.systems.size();
  res["spilled"] = r.spilled;
  run.report["results"] = res;

  if (!a.csv_path.empty()) write_strata_csv(a.csv_path, r.stratum_counts);
  if (!a.systems_path.empty()) {
    std::ofstream f(a.systems_path, std::ios::binary);
    if (!f) throw Error("cannot open " + a.systems_path + " for writing");
    f << "stratum,arrows\n";
    for (const StoredSystem& s : r.systems) {
      f << s.stratum << ',';
      bool first = true;
      s.arrows.for_each([&](std::size_t i) {
        f << (first ? "" : " ") << i;
        first = false;
      });
      f << '\n';
    }
  }

  std::ostream& o = run.text();
  o << "lattice " << L.group_name() << ": " << L.size() << " elements, " << t.arrow_count() << " arrows\n";
  o << "transfer systems: " << r.total_count << '\n';
  print_strata(o, r.stratum_counts);
}

void cmd_invariants(Run& run, const InvariantsArgs& a) {
  const GroupLattice L = load_source(a.source);
  const ArrowTables t(L);
  run.report["lattice"] = lattice_summary(t);
  Json res;
  std::ostream& o = run.text();
  o << "lattice " << L.group_name() << ": " << L.size() << " elements, " << t.arrow_count() << " arrows\n";

  const std::size_t w = checked_width(t);
  res["width"] = w;
  o << "width: " << w << '\n';
  run.report["results"] = res;

  if (!a.width_only) {
    const ComplexityResult c = complexity(t, run.common.jobs);
    res["complexity"] = c.value;
    res["realizer_count"] = c.realizers.size();
    res["transfer_systems"] = c.total_systems;
    res["strata"] = c.stratum_counts;
    res["greedy_fallbacks"] = c.fallback_uses;
    Json basis = Json::array();
    if (!c.realizers.empty()) {
      for (ArrowIndex i : minimal_basis(t, c.realizers.front()).arrows) basis.push_back(arrow_label(L, t.arrow(i)));
    }
    res["realizer_basis"] = basis;
    run.report["results"] = res;

    o << "complexity: " << c.value << '\n';
    o << "realizers: " << c.realizers.size() << '\n';
    o << "first realizer basis:";
    for (const auto& s : basis) o << "\n  " << s.get<std::string>();
    o << '\n';
    if (c.stratum_mismatches != 0)
      throw CrossCheckError("stratum-vs-basis-size",
                            std::to_string(c.stratum_mismatches) + " systems have a basis size other than their layer");
  }
}

void cmd_distribution(Run& run, const DistributionArgs& a) {
  const GroupLattice L = load_source(a.source);
  const ArrowTables t(L);
  run.report["lattice"] = lattice_summary(t);
  EnumerateOptions opts;
  opts.jobs = run.common.jobs;
  opts.progress = run.progress();
  const EnumerationResult r = enumerate(t, opts);
  run.report["results"] = Json{{"total", r.total_count}, {"strata", r.stratum_counts}};
  if (!a.csv_path.empty()) write_strata_csv(a.csv_path, r.stratum_counts);

  std::ostream& o = run.text();
  o << "lattice " << L.group_name() << ": " << r.total_count << " transfer systems\n";
  print_strata(o, r.stratum_counts);
}

void rainbow_square_free(Run& run, unsigned n, bool brute) {
  std::ostream& o = run.text();
  const BigInt bound = square_free_complexity_lower(n);
  Json res;
  res["n"] = n;
  res["lower_bound"] = to_string(bound);
  Json list = Json::array();
  o << "square-free, " << n << " primes\n";
  for (const Rainbow& r : canonical_max_rainbows(n)) {
    const std::string size = to_string(rainbow_size(r));
    list.push_back(Json{{"rainbow", r.to_string()}, {"size", size}});
    o << "  " << r.to_string() << "  size " << size << '\n';
  }
  res["maximal_rainbows"] = list;
  o << "lower bound: " << to_string(bound) << '\n';
  run.report["results"] = res;

  if (brute && n <= 14) {
    const MaxRainbowSearch s = brute_force_max_rainbow(n);
    res["brute_force_size"] = to_string(s.size);
    run.report["results"] = res;
    if (s.size != bound)
      throw CrossCheckError("max-rainbow-formula-vs-brute-force",
                            "formula " + to_string(bound) + ", exhaustive search " + to_string(s.size));
    if (s.argmax != canonical_max_rainbows(n))
      throw CrossCheckError("max-rainbow-maximizers", "exhaustive maximizers differ from the canonical list");
  }
}

void rainbow_grid(Run& run, unsigned n, unsigned m) {
  std::ostream& o = run.text();
  Json res;
  res["n"] = n;
  res["m"] = m;
  o << "grid [" << n << "] x [" << m << "]\n";

  const RainbowNumber sr = sr_number(n, m);
  res["sr"] = Json{{"closed_form", sr.closed_form}, {"enumerated", sr.enumerated}};
  o << "SR: " << sr.closed_form << " (enumerated " << sr.enumerated << ")\n";

  if (n >= 2 && m >= 2 && (n + m) % 2 == 0) {
    const RainbowNumber dr = dr_number(n, m);
    res["dr"] = Json{{"closed_form", dr.closed_form}, {"enumerated", dr.enumerated}};
    o << "DR: " << dr.closed_form << " (enumerated " << dr.enumerated << ")\n";

    const unsigned hi = std::max(n, m), lo = std::min(n, m);
    const std::vector<unsigned> exps{hi, lo};
    const GroupLattice L = build_chain_product(exps);
    const ArrowTables t(L);
    const std::size_t aug = double_rainbow_augmented(t, hi, lo).size();
    res["augmented_double_rainbow"] = aug;
    o << "augmented double rainbow: " << aug << '\n';
  }
  if (n >= 2 && m >= 2) {
    const std::uint64_t conj = conjectured_cpnqm_complexity(n, m);
    res["conjectured_complexity"] = conj;
    o << "conjectured complexity: " << conj << '\n';
  }
  run.report["results"] = res;
}

void cmd_rainbow(Run& run, const RainbowArgs& a) {
  if (a.square_free) {
    rainbow_square_free(run, *a.square_free, a.brute_force);
  } else {
    if (a.grid.size() != 2) throw DomainError("--grid expects n,m");
    rainbow_grid(run, a.grid[0], a.grid[1]);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfer systems on finite lattices", "transfersys"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonOptions common;
  app.add_option("-j,--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--json", common.json_path, "Write the run report as JSON to this path ('-' for stdout)");
  app.add_flag("-q,--quiet", common.quiet, "No progress output");

  EnumerateArgs en;
  auto* c_en = app.add_subcommand("enumerate", "Count transfer systems by layer");
  add_source(c_en, en.source);
  c_en->add_flag("--store", en.store, "Keep every system in memory");
  c_en->add_option("--out", en.csv_path, "Stratum CSV path");
  c_en->add_option("--systems", en.systems_path, "Write stored systems as arrow index lists");
  c_en->add_option("--spill-dir", en.spill_dir, "Move layers to sorted files in this directory");
  c_en->add_option("--memory-budget-mb", en.memory_budget_mb, "Abort above this many MiB of dedup state");

  InvariantsArgs inv;
  auto* c_inv = app.add_subcommand("invariants", "Width, complexity and a realizer basis");
  add_source(c_inv, inv.source);
  c_inv->add_flag("--width-only", inv.width_only, "Skip the complexity enumeration");

  RainbowArgs rb;
  auto* c_rb = app.add_subcommand("rainbow", "Maximal rainbows and SR/DR numbers");
  auto* o_sf = c_rb->add_option("--square-free", rb.square_free, "Number of distinct primes");
  auto* o_grid = c_rb->add_option("--grid", rb.grid, "Exponents n,m")->delimiter(',')->expected(2);
  o_sf->excludes(o_grid);
  c_rb->require_option(1);
  c_rb->add_flag("!--no-brute-force", rb.brute_force, "Skip the exhaustive cross-check");

  DistributionArgs dist;
  auto* c_dist = app.add_subcommand("distribution", "Transfer systems per minimal basis size");
  add_source(c_dist, dist.source);
  c_dist->add_option("--out", dist.csv_path, "Stratum CSV path");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Run r(common, out, err);
  try {
    if (c_en->parsed()) {
      r.report["command"] = "enumerate";
      cmd_enumerate(r, en);
    } else if (c_inv->parsed()) {
      r.report["command"] = "invariants";
      cmd_invariants(r, inv);
    } else if (c_rb->parsed()) {
      r.report["command"] = "rainbow";
      cmd_rainbow(r, rb);
    } else {
      r.report["command"] = "distribution";
      cmd_distribution(r, dist);
    }
    r.finish();
    return kOk;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    r.report["failed_check"] = e.check();
    try {
      r.finish();
    } catch (const std::exception&) {
    }
    return kCrossCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace transfersys::cli
