#include "boolnet/interaction_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolnet/decomposition.hpp"

namespace boolnet {

SignedDigraph::SignedDigraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs))
{
  if (vertex_count_ < 0)
    throw std::invalid_argument("vertex count must be non-negative");
  for (const auto& arc : arcs_)
    if (arc.from < 1 || arc.from > vertex_count_ || arc.to < 1 || arc.to > vertex_count_)
      throw std::invalid_argument("arc endpoint out of range");
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  out_.resize(vertex_count_ + 1);
  for (const auto& arc : arcs_)
    out_[arc.from].push_back(arc);
}

bool SignedDigraph::has_arc(int from, int to, ArcSign sign) const
{
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to, sign});
}

SignedDigraph build_graph(const BooleanNetwork& network)
{
  const int n = network.size();
  std::vector<Arc> arcs;
  for (int target = 1; target <= n; ++target) {
    for (int source = 1; source <= n; ++source) {
      switch (influence(network.rule(target), source)) {
      case InfluenceSign::positive:
        arcs.push_back({source, target, ArcSign::positive});
        break;
      case InfluenceSign::negative:
        arcs.push_back({source, target, ArcSign::negative});
        break;
      case InfluenceSign::dual:
        arcs.push_back({source, target, ArcSign::positive});
        arcs.push_back({source, target, ArcSign::negative});
        break;
      case InfluenceSign::none:
        break;
      }
    }
  }
  return SignedDigraph(n, std::move(arcs));
}

SignedAdjacencyMatrices matrices(const SignedDigraph& graph)
{
  const int n = graph.vertex_count();
  SignedAdjacencyMatrices m;
  m.positive.assign(n, std::vector<int>(n, 0));
  m.negative.assign(n, std::vector<int>(n, 0));
  for (const auto& arc : graph.arcs()) {
    if (arc.sign == ArcSign::positive)
      m.positive[arc.from - 1][arc.to - 1] = 1;
    else
      m.negative[arc.from - 1][arc.to - 1] = -1;
  }
  return m;
}

std::string to_dot(const SignedDigraph& graph)
{
  std::string out = "digraph interaction {\n";
  for (int v = 1; v <= graph.vertex_count(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (const auto& arc : graph.arcs()) {
    out += "  " + std::to_string(arc.from) + " -> " + std::to_string(arc.to);
    if (arc.sign == ArcSign::positive)
      out += " [label=\"+\", style=solid];\n";
    else
      out += " [label=\"-\", style=dashed];\n";
  }
  out += "}\n";
  return out;
}

} // namespace boolnet
