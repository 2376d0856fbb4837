#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "takegrant/error.hpp"

namespace takegrant {

/// Dense index into a graph's vertex table, assigned in declaration order.
struct VertexId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const VertexId&) const = default;
};

enum class VertexKind { Subject, Object };

enum class Right : std::uint8_t { T, G, R, W };

inline constexpr Right kAllRights[] = {Right::T, Right::G, Right::R, Right::W};

inline constexpr char right_letter(Right r) {
  switch (r) {
    case Right::T: return 't';
    case Right::G: return 'g';
    case Right::R: return 'r';
    case Right::W: return 'w';
  }
  return '?';
}

inline constexpr std::optional<Right> right_from_letter(char c) {
  switch (c) {
    case 't': return Right::T;
    case 'g': return Right::G;
    case 'r': return Right::R;
    case 'w': return Right::W;
    default: return std::nullopt;
  }
}

/// Set of rights carried by one arc. Insertion is idempotent.
class Rights {
 public:
  constexpr Rights() = default;
  constexpr Rights(std::initializer_list<Right> rights) {
    for (Right r : rights) insert(r);
  }

  constexpr void insert(Right r) { bits_ |= bit(r); }
  constexpr bool contains(Right r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr Rights& operator|=(Rights other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr Rights operator|(Rights a, Rights b) { return a |= b; }
  friend constexpr bool operator==(Rights, Rights) = default;

  /// Letters in the fixed order t, g, r, w.
  std::string to_string() const {
    std::string out;
    for (Right r : kAllRights) {
      if (contains(r)) out.push_back(right_letter(r));
    }
    return out;
  }

  /// Parses a string over {t,g,r,w}; duplicates are ignored. Returns nullopt
  /// on an unknown letter or an empty string.
  static std::optional<Rights> from_string(std::string_view letters) {
    Rights rights;
    for (char c : letters) {
      auto r = right_from_letter(c);
      if (!r) return std::nullopt;
      rights.insert(*r);
    }
    if (rights.empty()) return std::nullopt;
    return rights;
  }

 private:
  static constexpr std::uint8_t bit(Right r) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }

  std::uint8_t bits_ = 0;
};

struct Edge {
  VertexId from;
  VertexId to;
  Rights rights;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Names accepted for vertices: `[A-Za-z0-9_.-]+`.
inline bool is_valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

/// Take-Grant protection graph: subject/object vertices joined by arcs that
/// carry a non-empty set of rights. Parallel arcs between the same ordered
/// pair are merged into one rights set. Self-loops are allowed.
///
/// Const member functions may be called concurrently; mutation needs
/// exclusive access.
class ProtectionGraph {
 public:
  using Adjacency = std::map<VertexId, Rights>;

  struct Vertex {
    std::string name;
    VertexKind kind;

    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  ProtectionGraph() = default;

  VertexId add_vertex(std::string name, VertexKind kind) {
    if (!is_valid_vertex_name(name)) {
      throw Error(ErrorCode::InvalidName, "invalid vertex name '" + name + "'");
    }
    if (index_.contains(name)) {
      throw Error(ErrorCode::DuplicateName, "duplicate vertex name '" + name + "'");
    }
    const VertexId id{static_cast<std::uint32_t>(vertices_.size())};
    index_.emplace(name, id);
    vertices_.push_back(Vertex{std::move(name), kind});
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  /// Inserts the arc or unions `rights` into the existing one.
  void add_edge(VertexId from, VertexId to, Rights rights) {
    check(from);
    check(to);
    if (rights.empty()) {
      throw Error(ErrorCode::EmptyRights, "arc " + name(from) + " -> " +
                                              name(to) + " has no rights");
    }
    auto [it, inserted] = out_[from.value].try_emplace(to, rights);
    if (inserted) {
      ++edge_count_;
    } else {
      it->second |= rights;
    }
    in_[to.value][from] |= rights;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(VertexId v) const { return v.value < vertices_.size(); }

  const Vertex& vertex(VertexId v) const {
    check(v);
    return vertices_[v.value];
  }
  const std::string& name(VertexId v) const { return vertex(v).name; }
  VertexKind kind(VertexId v) const { return vertex(v).kind; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  std::optional<VertexId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Like find(), but throws UnknownVertex.
  VertexId id_of(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw Error(ErrorCode::UnknownVertex,
                "unknown vertex '" + std::string(name) + "'");
  }

  std::optional<Rights> rights(VertexId from, VertexId to) const {
    check(from);
    check(to);
    const auto& adj = out_[from.value];
    auto it = adj.find(to);
    if (it == adj.end()) return std::nullopt;
    return it->second;
  }

  bool has_right(VertexId from, VertexId to, Right r) const {
    auto rs = rights(from, to);
    return rs && rs->contains(r);
  }

  /// All outgoing arcs of `v`, keyed by target in ascending id order.
  const Adjacency& out_arcs(VertexId v) const {
    check(v);
    return out_[v.value];
  }

  /// All incoming arcs of `v`, keyed by source in ascending id order.
  const Adjacency& in_arcs(VertexId v) const {
    check(v);
    return in_[v.value];
  }

  std::vector<VertexId> out_neighbors_with_right(VertexId v, Right r) const {
    return filter(out_arcs(v), r);
  }

  std::vector<VertexId> in_neighbors_with_right(VertexId v, Right r) const {
    return filter(in_arcs(v), r);
  }

  /// Every arc, sorted by (from, to).
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (std::uint32_t i = 0; i < out_.size(); ++i) {
      for (const auto& [to, rights] : out_[i]) {
        result.push_back(Edge{VertexId{i}, to, rights});
      }
    }
    return result;
  }

  /// Structural equality: same vertex names and kinds in id order, same
  /// merged arc set.
  friend bool operator==(const ProtectionGraph& a, const ProtectionGraph& b) {
    return a.vertices_ == b.vertices_ && a.out_ == b.out_;
  }

 private:
  void check(VertexId v) const {
    if (!contains(v)) {
      throw Error(ErrorCode::UnknownVertex,
                  "vertex id " + std::to_string(v.value) + " out of range");
    }
  }

  static std::vector<VertexId> filter(const Adjacency& adj, Right r) {
    std::vector<VertexId> result;
    for (const auto& [w, rights] : adj) {
      if (rights.contains(r)) result.push_back(w);
    }
    return result;
  }

  std::vector<Vertex> vertices_;
  std::vector<Adjacency> out_;
  std::vector<Adjacency> in_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t edge_count_ = 0;
};

inline ProtectionGraph new_graph() { return ProtectionGraph{}; }

/// Same vertices; every arc (a, b, R) becomes (b, a, R).
inline ProtectionGraph reverse_graph(const ProtectionGraph& g) {
  ProtectionGraph reversed;
  for (const auto& v : g.vertices()) reversed.add_vertex(v.name, v.kind);
  for (const Edge& e : g.edges()) reversed.add_edge(e.to, e.from, e.rights);
  return reversed;
}

/// Ids of all vertices of the given kind, ascending.
inline std::vector<VertexId> vertices_of_kind(const ProtectionGraph& g,
                                              VertexKind kind) {
  std::vector<VertexId> result;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
    if (g.vertices()[i].kind == kind) result.push_back(VertexId{i});
  }
  return result;
}

}  // namespace takegrant

template <>
struct std::hash<takegrant::VertexId> {
  std::size_t operator()(takegrant::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};
