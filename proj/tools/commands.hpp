#pragma once

// Subcommand bodies for the `tg` tool. Each returns the process exit status
// and writes only to the streams it is given, so tests can drive them
// in-process.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "takegrant/takegrant.hpp"
#include "takegrant/report_json.hpp"

namespace takegrant::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kAbsent = 1,
  kUsageError = 2,
  kInvariantViolation = 3,
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Reads a TGG graph from `path`, or from `io.in` when `path` is "-".
inline ProtectionGraph load_graph(const std::string& path, Io io) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(io.in), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_graph(text);
}

namespace detail {

inline void print_names(std::ostream& out, const ProtectionGraph& g,
                        const std::vector<VertexId>& ids) {
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out << ' ';
    out << g.name(ids[k]);
  }
}

inline void report_error(Io io, const std::string& path, const std::exception& e) {
  io.err << "tg: " << (path == "-" ? std::string("<stdin>") : path) << ": "
         << e.what() << '\n';
}

}  // namespace detail

inline int cmd_islands(const std::string& path, Io io) {
  ProtectionGraph g;
  try {
    g = load_graph(path, io);
  } catch (const std::exception& e) {
    detail::report_error(io, path, e);
    return kUsageError;
  }
  for (const Island& island : compute_islands(g)) {
    io.out << "island " << island.index << ":";
    for (VertexId v : island.members) io.out << ' ' << g.name(v);
    io.out << '\n';
  }
  return kSuccess;
}

struct BridgeOptions {
  std::string file;
  std::string from;
  std::string to;
  bool backward = false;
  bool json = false;
  bool show_path = false;
};

inline int cmd_bridge(const BridgeOptions& opts, Io io) {
  ProtectionGraph g;
  VertexId s, f;
  try {
    g = load_graph(opts.file, io);
    s = g.id_of(opts.from);
    f = g.id_of(opts.to);
  } catch (const std::exception& e) {
    detail::report_error(io, opts.file, e);
    return kUsageError;
  }

  const Direction dir = opts.backward ? Direction::Backward : Direction::Forward;
  SearchReport report;
  try {
    report = bridge_exists(g, s, f, dir);
  } catch (const Error& e) {
    io.err << "tg: " << e.what() << '\n';
    return kUsageError;
  }

  if (opts.json) {
    io.out << report_json_line(g, report);
  } else {
    io.out << "bridge " << bridge_label(dir) << ' ' << opts.from << " ~> "
           << opts.to << ": ";
    if (report.exists) {
      io.out << "FOUND (length " << report.path->length() << ", passes "
             << report.passes << ")\n";
    } else {
      io.out << "NOT FOUND (passes " << report.passes << ")\n";
    }
    if (opts.show_path && report.path) {
      io.out << "path: ";
      detail::print_names(io.out, g, report.path->vertices);
      io.out << '\n';
    }
  }

  if (report.path && report.path->length() == 1 &&
      g.kind(s) == VertexKind::Subject && g.kind(f) == VertexKind::Subject) {
    io.err << "warning: length-1 bridge; '" << opts.from << "' and '"
           << opts.to << "' belong to the same island\n";
  }
  return report.exists ? kSuccess : kAbsent;
}

struct BridgesOptions {
  std::string file;
  long long from_island = -1;
  long long to_island = -1;
  bool backward = false;
};

inline int cmd_bridges(const BridgesOptions& opts, Io io) {
  ProtectionGraph g;
  try {
    g = load_graph(opts.file, io);
  } catch (const std::exception& e) {
    detail::report_error(io, opts.file, e);
    return kUsageError;
  }
  const auto islands = compute_islands(g);
  auto valid = [&](long long i) {
    return i >= 0 && static_cast<std::size_t>(i) < islands.size();
  };
  if (!valid(opts.from_island) || !valid(opts.to_island)) {
    io.err << "tg: island index out of range (graph has " << islands.size()
           << " islands)\n";
    return kUsageError;
  }
  if (opts.from_island == opts.to_island) {
    io.err << "tg: island indices must differ\n";
    return kUsageError;
  }

  const Direction dir = opts.backward ? Direction::Backward : Direction::Forward;
  const auto found = bridges_between_islands(
      g, islands[static_cast<std::size_t>(opts.from_island)],
      islands[static_cast<std::size_t>(opts.to_island)], dir);
  for (const IslandBridge& b : found) {
    io.out << "bridge " << bridge_label(dir) << ' ' << g.name(b.from) << " ~> "
           << g.name(b.to) << " (length " << b.path.length() << "): ";
    detail::print_names(io.out, g, b.path.vertices);
    io.out << '\n';
  }
  return found.empty() ? kAbsent : kSuccess;
}

using BridgeSearchFn =
    std::function<SearchReport(const ProtectionGraph&, VertexId, VertexId, Direction)>;

struct CheckOptions {
  std::size_t subjects = 3;
  std::size_t objects = 5;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

/// Empty string when every query on `g` agrees; otherwise a description of
/// the first disagreement. Checks every ordered endpoint pair in both
/// directions against the brute-force oracle, the faithful variant, the
/// path validator and the pass bound.
inline std::string first_disagreement(const ProtectionGraph& g,
                                      const BridgeSearchFn& search) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const VertexId s{i}, f{j};
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const std::string where = std::string(bridge_label(dir)) + " " +
                                  g.name(s) + " ~> " + g.name(f);
        const SearchReport report = search(g, s, f, dir);
        const bool oracle = oracle::brute_force_bridge(g, s, f, dir).has_value();
        if (report.exists != oracle) {
          return where + ": search says " + (report.exists ? "found" : "absent") +
                 ", oracle says " + (oracle ? "found" : "absent");
        }
        if (report != bridge_exists_faithful(g, s, f, dir)) {
          return where + ": faithful variant report differs";
        }
        if (report.passes > report.traversal_size + 1) {
          return where + ": pass bound exceeded";
        }
        if (report.exists != report.path.has_value()) {
          return where + ": path presence does not match verdict";
        }
        if (report.path) {
          if (auto why = bridge_path_violation(g, *report.path, s, f)) {
            return where + ": " + *why;
          }
        }
      }
    }
  }
  return {};
}

inline int cmd_check(const CheckOptions& opts, Io io,
                     const BridgeSearchFn& search = bridge_exists) {
  if (!(opts.p >= 0.0 && opts.p <= 1.0)) {
    io.err << "tg: --p must lie in [0, 1]\n";
    return kUsageError;
  }
  if (opts.trials > 0 && opts.subjects + opts.objects == 0) {
    io.err << "tg: need at least one vertex\n";
    return kUsageError;
  }

  std::size_t agree = 0;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const oracle::RandomGraphSpec spec{opts.subjects, opts.objects, opts.p,
                                       Rights{Right::T, Right::G, Right::R, Right::W},
                                       opts.seed + t};
    const ProtectionGraph g = oracle::random_graph(spec);
    const std::string problem = first_disagreement(g, search);
    if (problem.empty()) {
      ++agree;
    } else {
      io.err << "trial " << t << " (seed " << spec.seed << "): " << problem << '\n';
    }
  }
  io.out << agree << '/' << opts.trials << " agree\n";
  return agree == opts.trials ? kSuccess : kInvariantViolation;
}

struct GenOptions {
  std::size_t subjects = 3;
  std::size_t objects = 5;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::string rights = "t";
  std::string out_path;
};

inline int cmd_gen(const GenOptions& opts, Io io) {
  const auto pool = Rights::from_string(opts.rights);
  if (!pool) {
    io.err << "tg: bad rights pool '" << opts.rights << "'\n";
    return kUsageError;
  }
  ProtectionGraph g;
  try {
    g = oracle::random_graph(
        oracle::RandomGraphSpec{opts.subjects, opts.objects, opts.p, *pool, opts.seed});
  } catch (const Error& e) {
    io.err << "tg: " << e.what() << '\n';
    return kUsageError;
  }
  const std::string text = serialize_graph(g);
  if (opts.out_path == "-") {
    io.out << text;
    return kSuccess;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    io.err << "tg: cannot write '" << opts.out_path << "'\n";
    return kUsageError;
  }
  return kSuccess;
}

inline constexpr std::size_t kBenchTrials = 10;

struct BenchOptions {
  std::vector<std::size_t> sizes;
  double density = 0.05;
  std::uint64_t seed = 1;
  std::string variant = "both";
};

/// Graph used by the bench for `n` traversal vertices: subject s0, n - 2
/// random objects, and an isolated subject `sink`. Querying s0 ~> sink
/// never finds a bridge, so the search explores everything s0 reaches.
inline ProtectionGraph bench_graph(std::size_t n, double density, std::uint64_t seed) {
  ProtectionGraph g =
      oracle::random_graph(oracle::RandomGraphSpec{1, n - 2, density, {Right::T}, seed});
  g.add_vertex("sink", VertexKind::Subject);
  return g;
}

inline int cmd_bench(const BenchOptions& opts, Io io) {
  if (opts.sizes.empty()) {
    io.err << "tg: --sizes must list at least one size\n";
    return kUsageError;
  }
  for (std::size_t n : opts.sizes) {
    if (n < 2) {
      io.err << "tg: sizes must be at least 2\n";
      return kUsageError;
    }
  }
  if (!(opts.density >= 0.0 && opts.density <= 1.0)) {
    io.err << "tg: --density must lie in [0, 1]\n";
    return kUsageError;
  }

  struct Variant {
    const char* name;
    SearchReport (*run)(const ProtectionGraph&, VertexId, VertexId, Direction);
  };
  std::vector<Variant> variants;
  if (opts.variant == "both" || opts.variant == "optimized")
    variants.push_back({"optimized", &bridge_exists});
  if (opts.variant == "both" || opts.variant == "faithful")
    variants.push_back({"faithful", &bridge_exists_faithful});
  if (variants.empty()) {
    io.err << "tg: --variant must be both, optimized or faithful\n";
    return kUsageError;
  }

  io.out << "variant,n,arcs,passes,nanos\n";
  for (const Variant& variant : variants) {
    for (std::size_t n : opts.sizes) {
      std::uint64_t arcs = 0, passes = 0, nanos = 0;
      for (std::size_t t = 0; t < kBenchTrials; ++t) {
        const ProtectionGraph g = bench_graph(n, opts.density, opts.seed + t);
        const VertexId s = g.id_of("s0"), f = g.id_of("sink");
        const auto start = std::chrono::steady_clock::now();
        const SearchReport report = variant.run(g, s, f, Direction::Forward);
        const auto stop = std::chrono::steady_clock::now();
        arcs += g.edge_count();
        passes += report.passes;
        nanos += static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      io.out << variant.name << ',' << n << ',' << arcs / kBenchTrials << ','
             << passes / kBenchTrials << ',' << nanos / kBenchTrials << '\n';
    }
  }
  return kSuccess;
}

}  // namespace takegrant::cli
