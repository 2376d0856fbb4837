#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "takegrant/error.hpp"
#include "takegrant/graph.hpp"

namespace takegrant {

/// Maximal tg-connected set of subjects. `members` is ascending.
struct Island {
  std::size_t index = 0;
  std::vector<VertexId> members;

  bool contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }

  friend bool operator==(const Island&, const Island&) = default;
};

namespace detail {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

inline bool is_tg(Rights rights) {
  return rights.contains(Right::T) || rights.contains(Right::G);
}

}  // namespace detail

/// Connected components of the undirected graph on subject vertices whose
/// edges are subject-subject arcs carrying t or g (either direction).
/// Objects never join islands. Sorted by smallest member; `index` follows.
inline std::vector<Island> compute_islands(const ProtectionGraph& g) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSet sets(n);
  for (const Edge& e : g.edges()) {
    if (g.kind(e.from) == VertexKind::Subject &&
        g.kind(e.to) == VertexKind::Subject && detail::is_tg(e.rights)) {
      sets.unite(e.from.value, e.to.value);
    }
  }

  // Iterating ids in ascending order means each root is first seen at its
  // component's smallest member, so insertion order is already sorted.
  std::map<std::size_t, std::size_t> slot_of_root;
  std::vector<Island> islands;
  for (VertexId v : vertices_of_kind(g, VertexKind::Subject)) {
    const std::size_t root = sets.find(v.value);
    auto [it, inserted] = slot_of_root.try_emplace(root, islands.size());
    if (inserted) islands.push_back(Island{islands.size(), {}});
    islands[it->second].members.push_back(v);
  }
  return islands;
}

/// Index of the island containing subject `v`, or throws NotASubject.
inline std::size_t island_of(const std::vector<Island>& islands,
                             const ProtectionGraph& g, VertexId v) {
  if (g.kind(v) != VertexKind::Subject) {
    throw Error(ErrorCode::NotASubject, "'" + g.name(v) + "' is not a subject");
  }
  for (const Island& island : islands) {
    if (island.contains(v)) return island.index;
  }
  throw Error(ErrorCode::NotASubject, "'" + g.name(v) + "' is in no island");
}

inline bool same_island(const ProtectionGraph& g, VertexId u, VertexId v) {
  const auto islands = compute_islands(g);
  return island_of(islands, g, u) == island_of(islands, g, v);
}

}  // namespace takegrant
