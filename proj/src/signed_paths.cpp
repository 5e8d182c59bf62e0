#include "boolnet/signed_paths.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <utility>

namespace boolnet {

bool SignedCycle::negative() const
{
  int negatives = 0;
  for (auto sign : signs)
    if (sign == ArcSign::negative)
      ++negatives;
  return negatives % 2 == 1;
}

namespace {

// Depth-first enumeration anchored at each cycle's smallest vertex:
// starting from `root`, only vertices > root are visited, so every simple
// cycle is produced exactly once, already in canonical rotation.
class CycleSearch {
public:
  CycleSearch(const SignedDigraph& graph, int max_len, std::vector<SignedCycle>& out)
      : graph_(graph), max_len_(max_len), out_(out), on_path_(graph.vertex_count() + 1, 0)
  {
  }

  void run(int root)
  {
    root_ = root;
    path_.assign(1, root);
    on_path_[root] = 1;
    extend();
    on_path_[root] = 0;
  }

private:
  void extend()
  {
    const int current = path_.back();
    for (const auto& arc : graph_.arcs_from(current)) {
      if (arc.to == root_) {
        signs_.push_back(arc.sign);
        out_.push_back({path_, signs_});
        signs_.pop_back();
        continue;
      }
      if (arc.to < root_ || on_path_[arc.to] || int(path_.size()) >= max_len_)
        continue;
      on_path_[arc.to] = 1;
      path_.push_back(arc.to);
      signs_.push_back(arc.sign);
      extend();
      signs_.pop_back();
      path_.pop_back();
      on_path_[arc.to] = 0;
    }
  }

  const SignedDigraph& graph_;
  int max_len_;
  std::vector<SignedCycle>& out_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  std::vector<ArcSign> signs_;
  int root_ = 0;
};

} // namespace

std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& graph, int max_len)
{
  if (max_len < 1)
    throw std::invalid_argument("max_len must be >= 1");
  std::vector<SignedCycle> out;
  CycleSearch search(graph, max_len, out);
  for (int root = 1; root <= graph.vertex_count(); ++root)
    search.run(root);
  std::sort(out.begin(), out.end(), [](const SignedCycle& a, const SignedCycle& b) {
    if (a.length() != b.length())
      return a.length() < b.length();
    if (a.vertices != b.vertices)
      return a.vertices < b.vertices;
    return a.signs < b.signs;
  });
  return out;
}

std::optional<int> shortest_signed_path(const SignedDigraph& graph, int from, int to,
                                        ArcSign sign)
{
  const int n = graph.vertex_count();
  if (from < 1 || from > n || to < 1 || to > n)
    throw std::invalid_argument("vertex out of range");
  // Layered BFS over (vertex, parity of negative arcs so far); the start
  // itself does not count as a length-0 answer.
  std::vector<std::array<int, 2>> dist(n + 1, {-1, -1});
  std::deque<std::pair<int, int>> queue;
  for (const auto& arc : graph.arcs_from(from)) {
    const int parity = arc.sign == ArcSign::negative ? 1 : 0;
    if (dist[arc.to][parity] == -1) {
      dist[arc.to][parity] = 1;
      queue.emplace_back(arc.to, parity);
    }
  }
  while (!queue.empty()) {
    const auto [vertex, parity] = queue.front();
    queue.pop_front();
    for (const auto& arc : graph.arcs_from(vertex)) {
      const int next = parity ^ (arc.sign == ArcSign::negative ? 1 : 0);
      if (dist[arc.to][next] == -1) {
        dist[arc.to][next] = dist[vertex][parity] + 1;
        queue.emplace_back(arc.to, next);
      }
    }
  }
  const int wanted = sign == ArcSign::negative ? 1 : 0;
  if (dist[to][wanted] == -1)
    return std::nullopt;
  return dist[to][wanted];
}

} // namespace boolnet
