#pragma once

// Search for t->* and t<-* bridges between two vertices of a protection graph.
//
// The search keeps the traversal vertices split into a reached set and an
// unreached set. It starts with only the source reached. Each pass scans the
// t-labeled arcs of the vertices that were reached when the pass began and
// moves every unreached endpoint into the reached set. The search stops after
// the first pass that leaves the target reached (bridge exists) or the first
// pass that moves nothing (no bridge). Vertices added during a pass are not
// scanned until the next pass, so a bridge of length l is found on pass l.
//
// Traversal vertices are the two endpoints plus every object vertex. Other
// subjects never enter the reached set, so path interiors are always objects.
//
// t<-* is the same search with every arc followed against its direction.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "takegrant/error.hpp"
#include "takegrant/graph.hpp"
#include "takegrant/islands.hpp"

namespace takegrant {

enum class Direction { Forward, Backward };

inline const char* to_string(Direction dir) {
  return dir == Direction::Forward ? "forward" : "backward";
}

/// "t->*" or "t<-*".
inline const char* bridge_label(Direction dir) {
  return dir == Direction::Forward ? "t->*" : "t<-*";
}

/// Simple path from the source (first) to the target (last). Interior
/// vertices are objects; each step follows a t-arc in `direction`.
struct BridgePath {
  std::vector<VertexId> vertices;
  Direction direction = Direction::Forward;

  /// Number of arcs.
  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend bool operator==(const BridgePath&, const BridgePath&) = default;
};

/// Vertices that entered the reached set during one pass, ascending.
struct FrontierStep {
  std::size_t pass = 0;
  std::vector<VertexId> added;

  friend bool operator==(const FrontierStep&, const FrontierStep&) = default;
};

struct SearchReport {
  bool exists = false;
  Direction direction = Direction::Forward;
  /// Number of scan passes executed, including a final pass that added
  /// nothing when the search ended without a bridge.
  std::size_t passes = 0;
  /// Present iff `exists`.
  std::optional<BridgePath> path;
  /// One entry per pass.
  std::vector<FrontierStep> frontier_trace;
  /// Size of the traversal vertex set: endpoints plus objects.
  std::size_t traversal_size = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Returns a description of the first violated path invariant, or nullopt
/// if `path` is a valid bridge from `s` to `f` in `g`.
inline std::optional<std::string> bridge_path_violation(
    const ProtectionGraph& g, const BridgePath& path, VertexId s, VertexId f) {
  const auto& vs = path.vertices;
  if (vs.size() < 2) return "path has fewer than two vertices";
  if (vs.front() != s) return "path does not start at the source";
  if (vs.back() != f) return "path does not end at the target";
  for (VertexId v : vs) {
    if (!g.contains(v)) return "path vertex out of range";
  }
  std::vector<VertexId> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "path repeats a vertex";
  }
  for (std::size_t k = 1; k + 1 < vs.size(); ++k) {
    if (g.kind(vs[k]) != VertexKind::Object) {
      return "interior vertex '" + g.name(vs[k]) + "' is not an object";
    }
  }
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    const bool ok = path.direction == Direction::Forward
                        ? g.has_right(vs[k], vs[k + 1], Right::T)
                        : g.has_right(vs[k + 1], vs[k], Right::T);
    if (!ok) {
      return "no t-arc for step " + g.name(vs[k]) + " -> " + g.name(vs[k + 1]);
    }
  }
  return std::nullopt;
}

namespace detail {

enum class Membership : unsigned char { Excluded, Unreached, Reached };

struct SearchState {
  std::vector<Membership> membership;
  std::vector<std::optional<VertexId>> predecessor;
  std::size_t traversal_size = 0;
};

inline void check_endpoints(const ProtectionGraph& g, VertexId s, VertexId f) {
  if (!g.contains(s) || !g.contains(f)) {
    throw Error(ErrorCode::UnknownVertex, "bridge endpoint out of range");
  }
  if (s == f) {
    throw Error(ErrorCode::SameVertex,
                "bridge endpoints must differ ('" + g.name(s) + "')");
  }
}

/// Places the source in the reached set and every other traversal vertex in
/// the unreached set.
inline SearchState initial_state(const ProtectionGraph& g, VertexId s,
                                 VertexId f) {
  SearchState state;
  const std::size_t n = g.vertex_count();
  state.membership.assign(n, Membership::Excluded);
  state.predecessor.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.vertices()[i].kind == VertexKind::Object) {
      state.membership[i] = Membership::Unreached;
    }
  }
  state.membership[s.value] = Membership::Reached;
  state.membership[f.value] = Membership::Unreached;
  state.traversal_size = static_cast<std::size_t>(std::count_if(
      state.membership.begin(), state.membership.end(),
      [](Membership m) { return m != Membership::Excluded; }));
  return state;
}

inline BridgePath trace_back(const SearchState& state, VertexId s, VertexId f,
                             Direction dir) {
  BridgePath path{{}, dir};
  for (VertexId v = f;; v = *state.predecessor[v.value]) {
    path.vertices.push_back(v);
    if (v == s) break;
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

}  // namespace detail

/// Decides whether a bridge from `s` to `f` exists and reconstructs the
/// witness path from first-discovery predecessors.
///
/// Only the vertices added in the previous pass are scanned: any older
/// reached vertex already had all its neighbors moved when it was scanned,
/// so the report is identical to bridge_exists_faithful().
inline SearchReport bridge_exists(const ProtectionGraph& g, VertexId s,
                                  VertexId f, Direction dir) {
  detail::check_endpoints(g, s, f);
  auto state = detail::initial_state(g, s, f);

  SearchReport report;
  report.direction = dir;
  report.traversal_size = state.traversal_size;

  std::vector<VertexId> frontier{s};
  for (;;) {
    ++report.passes;
    std::vector<VertexId> added;
    for (VertexId u : frontier) {
      const auto& arcs = dir == Direction::Forward ? g.out_arcs(u) : g.in_arcs(u);
      for (const auto& [w, rights] : arcs) {
        if (!rights.contains(Right::T)) continue;
        if (state.membership[w.value] != detail::Membership::Unreached) continue;
        state.membership[w.value] = detail::Membership::Reached;
        state.predecessor[w.value] = u;
        added.push_back(w);
      }
    }
    std::sort(added.begin(), added.end());
    report.frontier_trace.push_back(FrontierStep{report.passes, added});

    if (state.membership[f.value] == detail::Membership::Reached) {
      report.exists = true;
      report.path = detail::trace_back(state, s, f, dir);
      return report;
    }
    if (added.empty()) return report;
    frontier = std::move(added);
  }
}

/// Literal form of the search: every pass rescans all arcs incident to every
/// vertex reached so far, t-labeled or not, and the no-progress test compares
/// set cardinalities before and after the pass. Cost per pass is bounded by
/// the arc count, giving O(N^3) overall. Produces the same report as
/// bridge_exists().
inline SearchReport bridge_exists_faithful(const ProtectionGraph& g, VertexId s,
                                           VertexId f, Direction dir) {
  detail::check_endpoints(g, s, f);
  auto state = detail::initial_state(g, s, f);

  SearchReport report;
  report.direction = dir;
  report.traversal_size = state.traversal_size;

  std::vector<VertexId> reached{s};
  std::size_t unreached_count = state.traversal_size - 1;
  for (;;) {
    ++report.passes;
    const std::size_t reached_before = reached.size();
    const std::size_t unreached_before = unreached_count;
    std::vector<VertexId> added;

    for (std::size_t k = 0; k < reached_before; ++k) {
      const VertexId r = reached[k];
      const auto& arcs = dir == Direction::Forward ? g.out_arcs(r) : g.in_arcs(r);
      for (const auto& [other, rights] : arcs) {
        if (rights.contains(Right::T) &&
            state.membership[other.value] == detail::Membership::Unreached) {
          state.membership[other.value] = detail::Membership::Reached;
          state.predecessor[other.value] = r;
          --unreached_count;
          added.push_back(other);
        }
      }
    }
    reached.insert(reached.end(), added.begin(), added.end());
    std::sort(reached.begin(), reached.end());
    std::sort(added.begin(), added.end());
    report.frontier_trace.push_back(FrontierStep{report.passes, added});

    if (state.membership[f.value] == detail::Membership::Reached) {
      report.exists = true;
      report.path = detail::trace_back(state, s, f, dir);
      return report;
    }
    if (reached.size() == reached_before && unreached_count == unreached_before) {
      return report;
    }
  }
}

inline std::optional<BridgePath> find_bridge_path(const ProtectionGraph& g,
                                                  VertexId s, VertexId f,
                                                  Direction dir) {
  return bridge_exists(g, s, f, dir).path;
}

struct IslandBridge {
  VertexId from;
  VertexId to;
  BridgePath path;

  friend bool operator==(const IslandBridge&, const IslandBridge&) = default;
};

/// Every bridge from a member of `from` to a member of `to`, sorted by
/// (source, target).
inline std::vector<IslandBridge> bridges_between_islands(
    const ProtectionGraph& g, const Island& from, const Island& to,
    Direction dir) {
  if (from.index == to.index) {
    throw Error(ErrorCode::SameIsland, "islands must differ (index " +
                                           std::to_string(from.index) + ")");
  }
  std::vector<IslandBridge> result;
  for (VertexId s : from.members) {
    for (VertexId f : to.members) {
      if (auto path = find_bridge_path(g, s, f, dir)) {
        result.push_back(IslandBridge{s, f, std::move(*path)});
      }
    }
  }
  return result;
}

}  // namespace takegrant
