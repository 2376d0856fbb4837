#include <gtest/gtest.h>

#include <cstdint>
#include <set>

#include "takegrant/bridge.hpp"
#include "takegrant/format.hpp"
#include "takegrant/islands.hpp"
#include "takegrant/oracle.hpp"
#include "test_util.hpp"

namespace takegrant {
namespace {

using testing::ids;

void expect_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// Every report-level invariant that does not need an oracle.
void expect_report_invariants(const ProtectionGraph& g, VertexId s, VertexId f,
                              const SearchReport& report) {
  ASSERT_EQ(report.frontier_trace.size(), report.passes);
  EXPECT_LE(report.passes, report.traversal_size + 1);
  EXPECT_EQ(report.exists, report.path.has_value());

  std::set<VertexId> reached{s};
  for (std::size_t k = 0; k < report.frontier_trace.size(); ++k) {
    const FrontierStep& step = report.frontier_trace[k];
    EXPECT_EQ(step.pass, k + 1);
    EXPECT_TRUE(std::is_sorted(step.added.begin(), step.added.end()));
    if (k + 1 < report.frontier_trace.size()) {
      EXPECT_FALSE(step.added.empty());
    }
    for (VertexId v : step.added) {
      EXPECT_TRUE(reached.insert(v).second) << "vertex reached twice";
      EXPECT_TRUE(v == f || g.kind(v) == VertexKind::Object);
    }
  }
  EXPECT_EQ(reached.contains(f), report.exists);
  if (!report.exists) {
    EXPECT_TRUE(report.frontier_trace.back().added.empty());
  }
  if (report.path) {
    EXPECT_EQ(bridge_path_violation(g, *report.path, s, f), std::nullopt);
    EXPECT_EQ(report.path->length(), report.passes)
        << "a vertex added on pass k sits k arcs from the source";
  }
}

TEST(BridgeSearch, Figure1Forward) {
  const ProtectionGraph g = testing::figure1();
  const VertexId s = g.id_of("s"), x = g.id_of("x"), f = g.id_of("f");
  const SearchReport report = bridge_exists(g, s, f, Direction::Forward);
  EXPECT_TRUE(report.exists);
  EXPECT_EQ(report.passes, 2u);
  EXPECT_EQ(report.traversal_size, 3u);
  EXPECT_EQ(report.frontier_trace,
            (std::vector<FrontierStep>{{1, {x}}, {2, {f}}}));
  ASSERT_TRUE(report.path);
  EXPECT_EQ(report.path->vertices, (std::vector<VertexId>{s, x, f}));
  EXPECT_EQ(report.path->length(), 2u);
  EXPECT_EQ(find_bridge_path(g, s, f, Direction::Forward), report.path);
}

TEST(BridgeSearch, Figure1BackwardIsAbsent) {
  const ProtectionGraph g = testing::figure1();
  const SearchReport report =
      bridge_exists(g, g.id_of("s"), g.id_of("f"), Direction::Backward);
  EXPECT_FALSE(report.exists);
  EXPECT_EQ(report.passes, 1u);
  EXPECT_EQ(report.frontier_trace, (std::vector<FrontierStep>{{1, {}}}));
  EXPECT_FALSE(report.path);
}

TEST(BridgeSearch, MirroredFigure1Backward) {
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject s\nobject x\nsubject f\nedge x s t\nedge f x t\n");
  const VertexId s = g.id_of("s"), f = g.id_of("f");
  const SearchReport report = bridge_exists(g, s, f, Direction::Backward);
  EXPECT_TRUE(report.exists);
  EXPECT_EQ(report.passes, 2u);
  EXPECT_EQ(report.path->vertices, ids({0, 1, 2}));
  EXPECT_EQ(report.path->direction, Direction::Backward);
  EXPECT_FALSE(bridge_exists(g, s, f, Direction::Forward).exists);
}

TEST(BridgeSearch, NoArcsEndsAfterOnePass) {
  const ProtectionGraph g = parse_graph("tgg 1\nsubject s\nsubject f\n");
  const SearchReport report =
      bridge_exists(g, VertexId{0}, VertexId{1}, Direction::Forward);
  EXPECT_FALSE(report.exists);
  EXPECT_EQ(report.passes, 1u);
  EXPECT_EQ(report.traversal_size, 2u);
}

TEST(BridgeSearch, DirectArcIsLengthOne) {
  const ProtectionGraph g = parse_graph("tgg 1\nsubject s\nsubject f\nedge s f t\n");
  const auto path = find_bridge_path(g, VertexId{0}, VertexId{1}, Direction::Forward);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->vertices, ids({0, 1}));
  EXPECT_EQ(path->length(), 1u);
}

TEST(BridgeSearch, ChainOfTenTakesTenPasses) {
  // s -> o1 -> ... -> o9 -> f: exactly one new vertex per pass.
  const ProtectionGraph g = testing::chain(10);
  const SearchReport report =
      bridge_exists(g, g.id_of("s"), g.id_of("f"), Direction::Forward);
  EXPECT_TRUE(report.exists);
  EXPECT_EQ(report.passes, 10u);
  EXPECT_EQ(report.path->length(), 10u);
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(report.frontier_trace[k].added, ids({static_cast<std::uint32_t>(k + 1)}));
  }
  EXPECT_EQ(bridge_exists_faithful(g, g.id_of("s"), g.id_of("f"), Direction::Forward),
            report);
}

TEST(BridgeSearch, LowestIdPredecessorWins) {
  // s reaches a and b on pass 1; both reach f on pass 2; a scans first.
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject s\nobject a\nobject b\nsubject f\n"
      "edge s b t\nedge s a t\nedge b f t\nedge a f t\n");
  const SearchReport report =
      bridge_exists(g, VertexId{0}, VertexId{3}, Direction::Forward);
  EXPECT_EQ(report.frontier_trace,
            (std::vector<FrontierStep>{{1, ids({1, 2})}, {2, ids({3})}}));
  EXPECT_EQ(report.path->vertices, ids({0, 1, 3}));
}

TEST(BridgeSearch, PassCompletesBeforeTermination) {
  // f and o2 both enter on pass 2; the trace records the whole pass.
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject s\nobject o1\nsubject f\nobject o2\n"
      "edge s o1 t\nedge o1 f t\nedge o1 o2 t\n");
  const SearchReport report =
      bridge_exists(g, VertexId{0}, VertexId{2}, Direction::Forward);
  EXPECT_EQ(report.frontier_trace,
            (std::vector<FrontierStep>{{1, ids({1})}, {2, ids({2, 3})}}));
}

TEST(BridgeSearch, OtherSubjectsAreNotTraversed) {
  // s -> u -> f where u is a subject: not a bridge.
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject s\nsubject u\nsubject f\nedge s u t\nedge u f t\n");
  const SearchReport report =
      bridge_exists(g, VertexId{0}, VertexId{2}, Direction::Forward);
  EXPECT_FALSE(report.exists);
  EXPECT_EQ(report.traversal_size, 2u);
  EXPECT_FALSE(oracle::brute_force_bridge(g, VertexId{0}, VertexId{2}, Direction::Forward));
}

TEST(BridgeSearch, ObjectEndpointsAreAllowed) {
  const ProtectionGraph g = parse_graph(
      "tgg 1\nobject a\nobject b\nobject c\nedge a b t\nedge b c t\n");
  const SearchReport report =
      bridge_exists(g, VertexId{0}, VertexId{2}, Direction::Forward);
  EXPECT_TRUE(report.exists);
  EXPECT_EQ(report.traversal_size, 3u);
}

TEST(BridgeSearch, SelfLoopsAndNonTakeArcsAreIgnored) {
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject s\nobject x\nsubject f\n"
      "edge s s t\nedge x x t\nedge s x grw\nedge x f g\n");
  const SearchReport report =
      bridge_exists(g, VertexId{0}, VertexId{2}, Direction::Forward);
  EXPECT_FALSE(report.exists);
  EXPECT_EQ(report.passes, 1u);
}

TEST(BridgeSearch, Errors) {
  const ProtectionGraph g = testing::figure1();
  expect_error(ErrorCode::SameVertex, [&] {
    bridge_exists(g, VertexId{0}, VertexId{0}, Direction::Forward);
  });
  expect_error(ErrorCode::SameVertex, [&] {
    bridge_exists_faithful(g, VertexId{1}, VertexId{1}, Direction::Backward);
  });
  expect_error(ErrorCode::UnknownVertex, [&] {
    bridge_exists(g, VertexId{0}, VertexId{3}, Direction::Forward);
  });
  expect_error(ErrorCode::UnknownVertex, [&] {
    find_bridge_path(g, VertexId{5}, VertexId{0}, Direction::Forward);
  });
}

TEST(BridgePathValidator, RejectsBrokenPaths) {
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject s\nobject x\nsubject f\nsubject u\n"
      "edge s x t\nedge x f t\nedge x s t\nedge s u t\nedge u f t\n");
  const VertexId s{0}, x{1}, f{2}, u{3};
  EXPECT_EQ(bridge_path_violation(g, {{s, x, f}, Direction::Forward}, s, f), std::nullopt);
  EXPECT_TRUE(bridge_path_violation(g, {{s, x, f}, Direction::Backward}, s, f));
  EXPECT_TRUE(bridge_path_violation(g, {{s, u, f}, Direction::Forward}, s, f));
  EXPECT_TRUE(bridge_path_violation(g, {{s, x, s, x, f}, Direction::Forward}, s, f));
  EXPECT_TRUE(bridge_path_violation(g, {{x, f}, Direction::Forward}, s, f));
  EXPECT_TRUE(bridge_path_violation(g, {{s}, Direction::Forward}, s, f));
  EXPECT_TRUE(bridge_path_violation(g, {{s, f}, Direction::Forward}, s, f));
}

TEST(BridgesBetweenIslands, Figure1) {
  const ProtectionGraph g = testing::figure1();
  const auto islands = compute_islands(g);
  ASSERT_EQ(islands.size(), 2u);
  const auto found = bridges_between_islands(g, islands[0], islands[1], Direction::Forward);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].from, g.id_of("s"));
  EXPECT_EQ(found[0].to, g.id_of("f"));
  EXPECT_EQ(found[0].path.vertices, ids({0, 1, 2}));
  EXPECT_TRUE(bridges_between_islands(g, islands[1], islands[0], Direction::Forward).empty());
}

TEST(BridgesBetweenIslands, NoObjectsNoBridges) {
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject a\nsubject b\nsubject c\nedge a b g\nedge c c r\n");
  const auto islands = compute_islands(g);
  ASSERT_EQ(islands.size(), 2u);
  EXPECT_TRUE(bridges_between_islands(g, islands[0], islands[1], Direction::Forward).empty());
  EXPECT_TRUE(bridges_between_islands(g, islands[0], islands[1], Direction::Backward).empty());
}

TEST(BridgesBetweenIslands, MatchesPairwiseSearch) {
  // Island {a, b} (joined by g) and island {c}, several objects.
  const ProtectionGraph g = parse_graph(
      "tgg 1\nsubject a\nsubject b\nsubject c\nobject o1\nobject o2\n"
      "edge a b g\nedge a o1 t\nedge o1 c t\nedge b o2 t\nedge o2 o1 t\nedge c o2 t\n");
  const auto islands = compute_islands(g);
  ASSERT_EQ(islands.size(), 2u);
  for (Direction dir : {Direction::Forward, Direction::Backward}) {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
      std::vector<IslandBridge> expected;
      for (VertexId s : islands[i].members)
        for (VertexId f : islands[j].members)
          if (auto p = find_bridge_path(g, s, f, dir)) expected.push_back({s, f, *p});
      EXPECT_EQ(bridges_between_islands(g, islands[i], islands[j], dir), expected);
    }
  }
  const auto forward = bridges_between_islands(g, islands[0], islands[1], Direction::Forward);
  ASSERT_EQ(forward.size(), 2u);
  EXPECT_EQ(forward[0].path.vertices, ids({0, 3, 2}));
  EXPECT_EQ(forward[1].path.vertices, ids({1, 4, 3, 2}));
}

TEST(BridgesBetweenIslands, SameIslandRejected) {
  const ProtectionGraph g = testing::figure1();
  const auto islands = compute_islands(g);
  expect_error(ErrorCode::SameIsland, [&] {
    bridges_between_islands(g, islands[0], islands[0], Direction::Forward);
  });
}

// Induction family: chain of length l found on pass l; any missing arc breaks it.
class ChainFamily : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ChainFamily, IntactAndBroken) {
  const std::size_t length = GetParam();
  const ProtectionGraph g = testing::chain(length);
  const VertexId s = g.id_of("s"), f = g.id_of("f");
  const SearchReport report = bridge_exists(g, s, f, Direction::Forward);
  ASSERT_TRUE(report.exists);
  EXPECT_EQ(report.path->length(), length);
  EXPECT_EQ(report.passes, length);
  for (std::size_t skip = 0; skip < length; ++skip) {
    const ProtectionGraph broken = testing::chain(length, skip);
    const SearchReport r = bridge_exists(broken, s, f, Direction::Forward);
    EXPECT_FALSE(r.exists) << "skip " << skip;
    EXPECT_EQ(r.passes, skip + 1);
    EXPECT_EQ(bridge_exists_faithful(broken, s, f, Direction::Forward), r);
  }
}

INSTANTIATE_TEST_SUITE_P(Lengths, ChainFamily, ::testing::Range<std::size_t>(2, 65));

// Exhaustive sweep: s, f and up to three objects, every t-arc subset. Fixing
// s = 0 and f = 1 loses nothing because the objects are interchangeable.
class ExhaustiveSweep : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ExhaustiveSweep, AgreesWithOracleAndFaithfulVariant) {
  const std::size_t n = GetParam();
  std::vector<oracle::VertexSpec> vertices{{"s", VertexKind::Subject},
                                           {"f", VertexKind::Subject}};
  for (std::size_t k = 2; k < n; ++k)
    vertices.push_back({"o" + std::to_string(k - 1), VertexKind::Object});
  const VertexId s{0}, f{1};

  std::uint64_t mismatches = 0, checked = 0;
  for (const ProtectionGraph& g : oracle::enumerate_t_arc_graphs(vertices)) {
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      const SearchReport report = bridge_exists(g, s, f, dir);
      const bool oracle = oracle::brute_force_bridge(g, s, f, dir).has_value();
      if (report.exists != oracle || report != bridge_exists_faithful(g, s, f, dir) ||
          report.passes > report.traversal_size + 1 ||
          (report.path && bridge_path_violation(g, *report.path, s, f))) {
        ++mismatches;
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 2 * (std::uint64_t{1} << (n * (n - 1))));
  EXPECT_EQ(mismatches, 0u);
}

INSTANTIATE_TEST_SUITE_P(Sizes, ExhaustiveSweep, ::testing::Values(2, 3, 4, 5));

class BridgeProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(BridgeProperties, RandomGraphs) {
  const std::uint64_t seed = GetParam();
  const ProtectionGraph g = oracle::random_graph(
      {1 + seed % 4, 1 + seed % 8, 0.1 + 0.1 * static_cast<double>(seed % 5),
       Rights{Right::T, Right::G, Right::R, Right::W}, seed});
  const ProtectionGraph reversed = reverse_graph(g);

  ProtectionGraph t_only;
  for (const auto& v : g.vertices()) t_only.add_vertex(v.name, v.kind);
  for (const Edge& e : g.edges())
    if (e.rights.contains(Right::T)) t_only.add_edge(e.from, e.to, e.rights);

  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const VertexId s{i}, f{j};
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const SearchReport report = bridge_exists(g, s, f, dir);
        expect_report_invariants(g, s, f, report);
        EXPECT_EQ(report.exists, oracle::brute_force_bridge(g, s, f, dir).has_value());
        EXPECT_EQ(report, bridge_exists_faithful(g, s, f, dir));
        EXPECT_EQ(report, bridge_exists(g, s, f, dir)) << "determinism";
        EXPECT_EQ(report, bridge_exists(t_only, s, f, dir)) << "non-t arcs matter";
      }
      const SearchReport backward = bridge_exists(g, s, f, Direction::Backward);
      const SearchReport forward_on_reversed = bridge_exists(reversed, s, f, Direction::Forward);
      EXPECT_EQ(backward.exists, forward_on_reversed.exists);
      EXPECT_EQ(backward.frontier_trace, forward_on_reversed.frontier_trace);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, BridgeProperties, ::testing::Range<std::uint64_t>(0, 300));

}  // namespace
}  // namespace takegrant
