#pragma once

// Ground truth for the bridge search and island computation, plus test-input
// generators. Nothing here shares code with bridge.hpp or the union-find in
// islands.hpp.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "takegrant/bridge.hpp"
#include "takegrant/error.hpp"
#include "takegrant/graph.hpp"

namespace takegrant::oracle {

namespace detail {

struct PathSearch {
  const ProtectionGraph& g;
  VertexId target;
  Direction dir;
  std::vector<bool> usable;
  std::vector<bool> on_path;
  std::vector<VertexId> path;

  bool step_allowed(VertexId a, VertexId b) const {
    return dir == Direction::Forward ? g.has_right(a, b, Right::T)
                                     : g.has_right(b, a, Right::T);
  }

  // Depth-first over simple paths of exactly `remaining` more arcs, trying
  // successors in ascending id order. The first hit is the lexicographically
  // smallest path of that length.
  bool extend(VertexId at, std::size_t remaining) {
    if (remaining == 0) return at == target;
    if (at == target) return false;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
      const VertexId next{i};
      if (!usable[i] || on_path[i] || !step_allowed(at, next)) continue;
      on_path[i] = true;
      path.push_back(next);
      if (extend(next, remaining - 1)) return true;
      path.pop_back();
      on_path[i] = false;
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive simple-path search over the same traversal set and arc rule as
/// the bridge search. Returns the shortest witness, lexicographically
/// smallest by vertex-id sequence among those of that length.
inline std::optional<BridgePath> brute_force_bridge(const ProtectionGraph& g,
                                                    VertexId s, VertexId f,
                                                    Direction dir) {
  if (!g.contains(s) || !g.contains(f)) {
    throw Error(ErrorCode::UnknownVertex, "bridge endpoint out of range");
  }
  if (s == f) throw Error(ErrorCode::SameVertex, "bridge endpoints must differ");

  const std::size_t n = g.vertex_count();
  detail::PathSearch search{g, f, dir, std::vector<bool>(n), std::vector<bool>(n), {}};
  std::size_t traversal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    search.usable[i] = g.vertices()[i].kind == VertexKind::Object ||
                       i == s.value || i == f.value;
    if (search.usable[i]) ++traversal;
  }

  for (std::size_t length = 1; length < traversal; ++length) {
    search.on_path.assign(n, false);
    search.on_path[s.value] = true;
    search.path = {s};
    if (search.extend(s, length)) return BridgePath{search.path, dir};
  }
  return std::nullopt;
}

/// Island partition as sets of subject ids, computed by boolean transitive
/// closure of the symmetric subject-subject tg relation.
inline std::vector<std::vector<VertexId>> naive_island_partition(
    const ProtectionGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> joined(n, std::vector<bool>(n, false));
  auto subject = [&](std::size_t i) {
    return g.vertices()[i].kind == VertexKind::Subject;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!subject(i)) continue;
    joined[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (!subject(j)) continue;
      auto rs = g.rights(VertexId{static_cast<std::uint32_t>(i)},
                         VertexId{static_cast<std::uint32_t>(j)});
      if (rs && (rs->contains(Right::T) || rs->contains(Right::G))) {
        joined[i][j] = joined[j][i] = true;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (joined[i][k] && joined[k][j]) joined[i][j] = true;

  std::vector<std::vector<VertexId>> classes;
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!subject(i) || placed[i]) continue;
    std::vector<VertexId> cls;
    for (std::size_t j = 0; j < n; ++j) {
      if (joined[i][j]) {
        placed[j] = true;
        cls.push_back(VertexId{static_cast<std::uint32_t>(j)});
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

struct VertexSpec {
  std::string name;
  VertexKind kind;
};

inline constexpr std::size_t kMaxEnumeratedVertices = 5;

/// Every graph over a fixed vertex list in which each ordered pair (i, j),
/// i != j, independently has or lacks a {t} arc. Graph k has the arc for
/// pair p iff bit p of k is set; pairs are ordered by (i, j).
class TArcGraphs {
 public:
  TArcGraphs(std::vector<VertexSpec> vertices, std::size_t max_vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.size() > max_vertices ||
        vertices_.size() > kMaxEnumeratedVertices) {
      throw Error(ErrorCode::TooLarge,
                  "cannot enumerate t-arc graphs on " +
                      std::to_string(vertices_.size()) + " vertices");
    }
    for (std::uint32_t i = 0; i < vertices_.size(); ++i)
      for (std::uint32_t j = 0; j < vertices_.size(); ++j)
        if (i != j) pairs_.emplace_back(VertexId{i}, VertexId{j});
  }

  std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }

  ProtectionGraph operator[](std::uint64_t mask) const {
    ProtectionGraph g;
    for (const auto& v : vertices_) g.add_vertex(v.name, v.kind);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if ((mask >> p) & 1u) g.add_edge(pairs_[p].first, pairs_[p].second, {Right::T});
    }
    return g;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ProtectionGraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const TArcGraphs* owner, std::uint64_t mask)
        : owner_(owner), mask_(mask) {}

    ProtectionGraph operator*() const { return (*owner_)[mask_]; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    bool operator==(const iterator& other) const { return mask_ == other.mask_; }

   private:
    const TArcGraphs* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<std::pair<VertexId, VertexId>> pairs_;
};

inline TArcGraphs enumerate_t_arc_graphs(std::vector<VertexSpec> vertices,
                                         std::size_t max_vertices = kMaxEnumeratedVertices) {
  return TArcGraphs(std::move(vertices), max_vertices);
}

struct RandomGraphSpec {
  std::size_t n_subjects = 0;
  std::size_t n_objects = 0;
  double arc_probability = 0.0;
  Rights rights_pool{Right::T};
  std::uint64_t seed = 0;
};

/// Maps one mt19937_64 output to [0, 1) using its top 53 bits.
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Subjects s0..s{k-1} then objects o0..o{m-1}, in that id order. The
/// generator is std::mt19937_64 seeded with `spec.seed`. For every ordered
/// pair (i, j) with i != j, ascending by i then j, and for every right in the
/// pool in t, g, r, w order, one draw u = (next() >> 11) * 2^-53 is taken and
/// the right is added to arc i -> j iff u < arc_probability.
inline ProtectionGraph random_graph(const RandomGraphSpec& spec) {
  if (spec.n_subjects + spec.n_objects == 0) {
    throw Error(ErrorCode::EmptySpec, "random graph needs at least one vertex");
  }
  if (!(spec.arc_probability >= 0.0 && spec.arc_probability <= 1.0)) {
    throw Error(ErrorCode::InvalidSpec, "arc probability must lie in [0, 1]");
  }

  ProtectionGraph g;
  for (std::size_t i = 0; i < spec.n_subjects; ++i)
    g.add_vertex("s" + std::to_string(i), VertexKind::Subject);
  for (std::size_t i = 0; i < spec.n_objects; ++i)
    g.add_vertex("o" + std::to_string(i), VertexKind::Object);

  std::vector<Right> pool;
  for (Right r : kAllRights)
    if (spec.rights_pool.contains(r)) pool.push_back(r);

  std::mt19937_64 rng(spec.seed);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rights rights;
      for (Right r : pool) {
        if (unit_interval(rng()) < spec.arc_probability) rights.insert(r);
      }
      if (!rights.empty()) g.add_edge(VertexId{i}, VertexId{j}, rights);
    }
  }
  return g;
}

}  // namespace takegrant::oracle
