#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "boolnet/network.hpp"

namespace boolnet {

enum class ArcSign : std::uint8_t { positive, negative };

inline char sign_char(ArcSign sign)
{
  return sign == ArcSign::positive ? '+' : '-';
}

struct Arc {
  int from;
  int to;
  ArcSign sign;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/*! \brief Signed interaction graph over vertices 1..n.
 *
 * At most one arc per (from, to, sign); a dual-signed dependence yields
 * both a positive and a negative arc for the pair.
 */
class SignedDigraph {
public:
  SignedDigraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }

  /// Sorted by (from, to, sign), positive first.
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(int from, int to, ArcSign sign) const;
  const std::vector<Arc>& arcs_from(int vertex) const { return out_[vertex]; }

private:
  int vertex_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Arc>> out_; // index 1..n
};

/// Arc i -> j with sign s iff rule j has an s-signed 2-bit fragment in
/// variable i; dual influences contribute both arcs.
SignedDigraph build_graph(const BooleanNetwork& network);

/// Row = source variable, column = target node.
struct SignedAdjacencyMatrices {
  std::vector<std::vector<int>> positive; // entries 0 / 1
  std::vector<std::vector<int>> negative; // entries 0 / -1
};

SignedAdjacencyMatrices matrices(const SignedDigraph& graph);

/// DOT rendering with one node statement per vertex and one edge statement
/// per arc, sorted for byte-stable output.  Positive arcs are solid and
/// labeled "+", negative arcs dashed and labeled "-".
std::string to_dot(const SignedDigraph& graph);

} // namespace boolnet
