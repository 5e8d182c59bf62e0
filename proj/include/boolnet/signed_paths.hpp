#pragma once

#include <optional>
#include <vector>

#include "boolnet/interaction_graph.hpp"

namespace boolnet {

/*! \brief A simple signed cycle in canonical rotation.
 *
 * vertices[0] is the smallest vertex on the cycle; signs[k] is the sign
 * of the arc vertices[k] -> vertices[(k+1) mod length].  The overall sign
 * is negative iff the number of negative arcs is odd.
 */
struct SignedCycle {
  std::vector<int> vertices;
  std::vector<ArcSign> signs;

  int length() const { return int(vertices.size()); }
  bool negative() const;
  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// All simple signed cycles of length <= max_len, each once, sorted by
/// (length, vertex sequence, sign pattern).  Parallel arcs of different
/// signs yield distinct cycles.
std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& graph, int max_len);

/// Length of the shortest walk from -> to whose sign product matches
/// `sign` (at least one arc); nullopt when no such walk exists.  Runs a
/// breadth-first search over (vertex, negative-arc parity) pairs.
std::optional<int> shortest_signed_path(const SignedDigraph& graph, int from, int to,
                                        ArcSign sign);

} // namespace boolnet
