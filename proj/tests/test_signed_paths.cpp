#include <doctest.h>

#include <random>
#include <stdexcept>

#include "boolnet/function.hpp"
#include "boolnet/network.hpp"
#include "boolnet/signed_paths.hpp"
#include "oracles.hpp"

using boolnet::Arc;
using boolnet::ArcSign;
using boolnet::enumerate_cycles;
using boolnet::shortest_signed_path;
using boolnet::SignedCycle;
using boolnet::SignedDigraph;

namespace {

SignedDigraph worked_graph()
{
  return build_graph(boolnet::BooleanNetwork({boolnet::BooleanFunction::from_decimal(3, 168),
                                              boolnet::BooleanFunction::from_decimal(3, 128),
                                              boolnet::BooleanFunction::from_decimal(3, 17)}));
}

SignedDigraph random_graph(int n, std::mt19937& rng)
{
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (rng() % 3 == 0)
        arcs.push_back({i, j, ArcSign::positive});
      if (rng() % 3 == 0)
        arcs.push_back({i, j, ArcSign::negative});
    }
  return SignedDigraph(n, std::move(arcs));
}

} // namespace

TEST_SUITE("signed_paths")
{

TEST_CASE("cycles of the worked graph")
{
  const auto cycles = enumerate_cycles(worked_graph(), 3);
  REQUIRE(cycles.size() == 6);
  CHECK(cycles[0] == SignedCycle{{1}, {ArcSign::positive}});
  CHECK(cycles[1] == SignedCycle{{2}, {ArcSign::positive}});
  CHECK(cycles[2] == SignedCycle{{3}, {ArcSign::negative}});
  CHECK(cycles[3] == SignedCycle{{1, 2}, {ArcSign::positive, ArcSign::positive}});
  CHECK(cycles[4] == SignedCycle{{2, 3}, {ArcSign::negative, ArcSign::positive}});
  CHECK(cycles[5] ==
        SignedCycle{{1, 2, 3}, {ArcSign::positive, ArcSign::negative, ArcSign::positive}});
  CHECK(!cycles[3].negative());
  CHECK(cycles[4].negative());
  CHECK(cycles[5].negative());
}

TEST_CASE("degenerate graphs")
{
  CHECK(enumerate_cycles(SignedDigraph(3, {}), 3).empty());
  const auto loop = enumerate_cycles(SignedDigraph(1, {{1, 1, ArcSign::positive}}), 1);
  REQUIRE(loop.size() == 1);
  CHECK(loop[0] == SignedCycle{{1}, {ArcSign::positive}});
  CHECK_THROWS_AS(enumerate_cycles(SignedDigraph(1, {}), 0), std::invalid_argument);
}

TEST_CASE("max length truncates the enumeration")
{
  const auto graph = worked_graph();
  CHECK(enumerate_cycles(graph, 1).size() == 3);
  CHECK(enumerate_cycles(graph, 2).size() == 5);
  CHECK(enumerate_cycles(graph, 3).size() == 6);
}

TEST_CASE("parallel signed arcs make distinct cycles")
{
  const SignedDigraph graph(2, {{1, 2, ArcSign::positive},
                                {1, 2, ArcSign::negative},
                                {2, 1, ArcSign::positive}});
  const auto cycles = enumerate_cycles(graph, 2);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == SignedCycle{{1, 2}, {ArcSign::positive, ArcSign::positive}});
  CHECK(cycles[1] == SignedCycle{{1, 2}, {ArcSign::negative, ArcSign::positive}});
}

TEST_CASE("complete positive graph cycle counts")
{
  // All ordered pairs plus self-loops, every arc positive: C(n,k)(k-1)!
  // simple cycles of each length k >= 2, plus n self-loops.
  std::vector<Arc> arcs;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      arcs.push_back({i, j, ArcSign::positive});
  const auto cycles = enumerate_cycles(SignedDigraph(3, std::move(arcs)), 3);
  CHECK(cycles.size() == 8); // 3 + 3 + 2
  for (const auto& cycle : cycles)
    CHECK(!cycle.negative());
}

TEST_CASE("shortest signed walks on the worked graph")
{
  const auto graph = worked_graph();
  CHECK(shortest_signed_path(graph, 2, 3, ArcSign::negative) == 1);
  CHECK(shortest_signed_path(graph, 1, 1, ArcSign::positive) == 1);
  CHECK(shortest_signed_path(graph, 1, 3, ArcSign::negative) == 2);
  // Positive arrival at 3 needs a revisit: 1 -> 2 -> 3 -> 3 flips twice.
  CHECK(shortest_signed_path(graph, 1, 3, ArcSign::positive) == 3);
  CHECK_THROWS_AS(shortest_signed_path(graph, 0, 3, ArcSign::positive),
                  std::invalid_argument);
  CHECK_THROWS_AS(shortest_signed_path(graph, 1, 4, ArcSign::positive),
                  std::invalid_argument);
}

TEST_CASE("unreachable parities are absent")
{
  const SignedDigraph graph(2, {{1, 2, ArcSign::positive}});
  CHECK(!shortest_signed_path(graph, 1, 2, ArcSign::negative).has_value());
  CHECK(!shortest_signed_path(graph, 2, 1, ArcSign::positive).has_value());
  CHECK(shortest_signed_path(graph, 1, 2, ArcSign::positive) == 1);
}

TEST_CASE("walk lengths match the exhaustive oracle")
{
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = int(rng() % 4) + 1;
    const auto graph = random_graph(n, rng);
    for (int from = 1; from <= n; ++from)
      for (int to = 1; to <= n; ++to)
        for (auto sign : {ArcSign::positive, ArcSign::negative}) {
          // A shortest signed walk never needs more than 2n arcs.
          const auto expected = oracles::shortest_signed_walk(graph, from, to, sign, 2 * n);
          REQUIRE(shortest_signed_path(graph, from, to, sign) == expected);
        }
  }
}

TEST_CASE("a graph without negative arcs has no negative walks")
{
  std::mt19937 rng(78);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = int(rng() % 4) + 1;
    const auto graph = random_graph(n, rng);
    std::vector<Arc> positive_only;
    for (const auto& arc : graph.arcs())
      if (arc.sign == ArcSign::positive)
        positive_only.push_back(arc);
    const SignedDigraph stripped(n, std::move(positive_only));
    for (int from = 1; from <= n; ++from)
      for (int to = 1; to <= n; ++to)
        REQUIRE(!shortest_signed_path(stripped, from, to, ArcSign::negative).has_value());
  }
}

TEST_CASE("returned signs are sound")
{
  std::mt19937 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const auto graph = random_graph(3, rng);
    for (const auto& cycle : enumerate_cycles(graph, 3)) {
      REQUIRE(cycle.vertices.size() == cycle.signs.size());
      // Arcs recorded on the cycle must exist with the recorded sign.
      for (std::size_t k = 0; k < cycle.vertices.size(); ++k) {
        const int from = cycle.vertices[k];
        const int to = cycle.vertices[(k + 1) % cycle.vertices.size()];
        REQUIRE(graph.has_arc(from, to, cycle.signs[k]));
      }
      // Canonical rotation: smallest vertex first, all distinct.
      for (std::size_t k = 1; k < cycle.vertices.size(); ++k)
        REQUIRE(cycle.vertices[0] < cycle.vertices[k]);
    }
  }
}

}
