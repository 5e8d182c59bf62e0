#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolnet/network.hpp"

namespace boolnet {

/// Hard bound on the state space (2^20 states).
inline constexpr int state_space_max_nodes = 20;

/// Node values in order x_1..x_n.
using NetworkState = std::vector<std::uint8_t>;

std::uint32_t state_index(const NetworkState& state);
NetworkState state_from_index(std::uint32_t index, int size);

/// Bitstring x_1..x_n, e.g. (1,1,0) -> "110".
std::string state_string(std::uint32_t index, int size);

/// One synchronous update: component j of the result is rule j at `state`.
NetworkState step(const BooleanNetwork& network, const NetworkState& state);
std::uint32_t step_index(const BooleanNetwork& network, std::uint32_t state);

/*! \brief The full synchronous transition structure.
 *
 * The successor map is a functional graph; attractors are its cycles,
 * fixed points the length-1 cycles, and height the number of steps a
 * state needs to land on its attractor (0 on attractor states).
 */
struct StateTransitionSystem {
  int node_count = 0;
  std::vector<std::uint32_t> successor;           // size 2^n
  std::vector<std::uint32_t> fixed_points;        // sorted state indices
  std::vector<std::vector<std::uint32_t>> attractors; // cycle order from the
                                                      // smallest state; sorted
                                                      // by that state
  std::vector<std::int32_t> attractor_id;         // per state
  std::vector<std::uint32_t> height;              // per state
};

StateTransitionSystem state_graph(const BooleanNetwork& network);

/// States equal to their own successor, ascending.
std::vector<NetworkState> fixed_points(const BooleanNetwork& network);

} // namespace boolnet
