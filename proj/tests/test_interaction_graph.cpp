#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "boolnet/interaction_graph.hpp"
#include "boolnet/literal.hpp"
#include "oracles.hpp"

using boolnet::Arc;
using boolnet::ArcSign;
using boolnet::BooleanFunction;
using boolnet::BooleanNetwork;
using boolnet::build_graph;
using boolnet::matrices;
using boolnet::SignedDigraph;
using boolnet::to_dot;

namespace {

BooleanNetwork worked_network()
{
  return BooleanNetwork({BooleanFunction::from_decimal(3, 168),
                         BooleanFunction::from_decimal(3, 128),
                         BooleanFunction::from_decimal(3, 17)});
}

int edge_statement_count(const std::string& dot)
{
  int count = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; pos += 4)
    ++count;
  return count;
}

} // namespace

TEST_SUITE("interaction_graph")
{

TEST_CASE("the worked three-node network")
{
  const auto graph = build_graph(worked_network());
  const std::vector<Arc> expected{
      {1, 1, ArcSign::positive}, {1, 2, ArcSign::positive}, {2, 1, ArcSign::positive},
      {2, 2, ArcSign::positive}, {2, 3, ArcSign::negative}, {3, 1, ArcSign::positive},
      {3, 2, ArcSign::positive}, {3, 3, ArcSign::negative}};
  CHECK(graph.arcs() == expected);

  const auto m = matrices(graph);
  CHECK(m.positive == std::vector<std::vector<int>>{{1, 1, 0}, {1, 1, 0}, {1, 1, 0}});
  CHECK(m.negative == std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, -1}, {0, 0, -1}});
}

TEST_CASE("constant rules produce no arcs")
{
  const auto zero = BooleanFunction::constant(3, false);
  const auto graph = build_graph(BooleanNetwork({zero, zero, zero}));
  CHECK(graph.arcs().empty());
  const auto m = matrices(graph);
  CHECK(m.positive == std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
  CHECK(m.negative == std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
}

TEST_CASE("the identity network carries only positive self-loops")
{
  const auto graph = build_graph(BooleanNetwork({BooleanFunction::projection(3, 1),
                                                 BooleanFunction::projection(3, 2),
                                                 BooleanFunction::projection(3, 3)}));
  CHECK(graph.arcs() == std::vector<Arc>{{1, 1, ArcSign::positive},
                                         {2, 2, ArcSign::positive},
                                         {3, 3, ArcSign::positive}});
  CHECK(matrices(graph).positive ==
        std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("dual influence yields both arcs")
{
  // Node 2 is XOR of both nodes: both variables are dual.
  const auto graph = build_graph(BooleanNetwork(
      {BooleanFunction::projection(2, 1), BooleanFunction::from_decimal(2, 6)}));
  CHECK(graph.has_arc(1, 2, ArcSign::positive));
  CHECK(graph.has_arc(1, 2, ArcSign::negative));
  CHECK(graph.has_arc(2, 2, ArcSign::positive));
  CHECK(graph.has_arc(2, 2, ArcSign::negative));
}

TEST_CASE("complementing every rule swaps the matrices")
{
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b) {
      const BooleanNetwork network{
          {BooleanFunction::from_decimal(2, a), BooleanFunction::from_decimal(2, b)}};
      const BooleanNetwork flipped{{BooleanFunction::from_decimal(2, a).complement(),
                                    BooleanFunction::from_decimal(2, b).complement()}};
      const auto m = matrices(build_graph(network));
      const auto fm = matrices(build_graph(flipped));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          REQUIRE(fm.negative[i][j] == -m.positive[i][j]);
          REQUIRE(fm.positive[i][j] == -m.negative[i][j]);
        }
    }
}

TEST_CASE("arcs rebuild from the matrices")
{
  const auto graph = build_graph(worked_network());
  const auto m = matrices(graph);
  std::vector<Arc> rebuilt;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (m.positive[i - 1][j - 1] == 1)
        rebuilt.push_back({i, j, ArcSign::positive});
      if (m.negative[i - 1][j - 1] == -1)
        rebuilt.push_back({i, j, ArcSign::negative});
    }
  CHECK(SignedDigraph(3, rebuilt).arcs() == graph.arcs());
}

TEST_CASE("rule input form does not matter")
{
  const BooleanNetwork by_decimal{{boolnet::parse_function_literal("d:168@3"),
                                   boolnet::parse_function_literal("d:128@3"),
                                   boolnet::parse_function_literal("d:17@3")}};
  const BooleanNetwork by_bits{{boolnet::parse_function_literal("b:10101000"),
                                boolnet::parse_function_literal("b:10000000"),
                                boolnet::parse_function_literal("b:00010001")}};
  const BooleanNetwork by_expr{{boolnet::parse_function_literal("e:3:x3&(x1|x2)"),
                                boolnet::parse_function_literal("e:3:x1&x2&x3"),
                                boolnet::parse_function_literal("e:3:!x2&!x3")}};
  CHECK(build_graph(by_decimal).arcs() == build_graph(by_bits).arcs());
  CHECK(build_graph(by_decimal).arcs() == build_graph(by_expr).arcs());
}

TEST_CASE("unate rules carry at most one arc per ordered pair")
{
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b) {
      const BooleanNetwork network{
          {BooleanFunction::from_decimal(2, a), BooleanFunction::from_decimal(2, b)}};
      bool unate = true;
      for (const auto& rule : network.rules())
        for (int i = 1; i <= 2; ++i)
          unate &= influence(rule, i) != boolnet::InfluenceSign::dual;
      if (!unate)
        continue;
      const auto graph = build_graph(network);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          REQUIRE((int(graph.has_arc(i, j, ArcSign::positive)) +
                   int(graph.has_arc(i, j, ArcSign::negative))) <= 1);
    }
}

TEST_CASE("dot output")
{
  const auto worked = to_dot(build_graph(worked_network()));
  CHECK(edge_statement_count(worked) == 8);

  const auto lonely = to_dot(SignedDigraph(1, {}));
  CHECK(lonely == "digraph interaction {\n  1;\n}\n");

  const auto self_loop = to_dot(SignedDigraph(1, {{1, 1, ArcSign::negative}}));
  CHECK(self_loop ==
        "digraph interaction {\n  1;\n  1 -> 1 [label=\"-\", style=dashed];\n}\n");
}

TEST_CASE("network validation")
{
  CHECK_THROWS_AS(BooleanNetwork({}), std::invalid_argument);
  CHECK_THROWS_AS(BooleanNetwork({BooleanFunction::from_decimal(2, 3)}),
                  std::invalid_argument);
}

TEST_CASE("network file parsing")
{
  std::istringstream in("# worked example\nn=3\nd:168@3\nb:10000000  # AND\ne:3:!x2&!x3\n");
  const auto network = boolnet::parse_network(in);
  CHECK(network.size() == 3);
  CHECK(network.rule(2).decimal_u64() == 128);
  CHECK(build_graph(network).arcs() == build_graph(worked_network()).arcs());

  std::istringstream missing("n=2\nd:8@2\n");
  CHECK_THROWS_AS(boolnet::parse_network(missing), std::invalid_argument);
  std::istringstream mismatch("n=2\nd:8@2\nd:128@3\n");
  CHECK_THROWS_AS(boolnet::parse_network(mismatch), std::invalid_argument);
  std::istringstream header("d:8@2\nd:8@2\n");
  CHECK_THROWS_AS(boolnet::parse_network(header), std::invalid_argument);
}

}
