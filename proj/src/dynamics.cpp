#include "boolnet/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolnet/errors.hpp"

namespace boolnet {

std::uint32_t state_index(const NetworkState& state)
{
  std::uint32_t k = 0;
  for (auto b : state)
    k = (k << 1) | (b ? 1u : 0u);
  return k;
}

NetworkState state_from_index(std::uint32_t index, int size)
{
  NetworkState state(size);
  for (int m = 0; m < size; ++m)
    state[m] = (index >> (size - 1 - m)) & 1u;
  return state;
}

std::string state_string(std::uint32_t index, int size)
{
  std::string out(size, '0');
  for (int m = 0; m < size; ++m)
    if ((index >> (size - 1 - m)) & 1u)
      out[m] = '1';
  return out;
}

NetworkState step(const BooleanNetwork& network, const NetworkState& state)
{
  if (int(state.size()) != network.size())
    throw std::invalid_argument("state length does not match network size");
  return state_from_index(step_index(network, state_index(state)), network.size());
}

std::uint32_t step_index(const BooleanNetwork& network, std::uint32_t state)
{
  std::uint32_t next = 0;
  for (int j = 1; j <= network.size(); ++j)
    next = (next << 1) | (network.rule(j).bit(state) ? 1u : 0u);
  return next;
}

namespace {

void check_state_cap(int size)
{
  if (size > state_space_max_nodes)
    throw cap_error("network size " + std::to_string(size) + " exceeds the state-space cap of " +
                    std::to_string(state_space_max_nodes));
}

} // namespace

StateTransitionSystem state_graph(const BooleanNetwork& network)
{
  check_state_cap(network.size());
  const std::uint32_t count = std::uint32_t(1) << network.size();

  StateTransitionSystem sts;
  sts.node_count = network.size();
  sts.successor.resize(count);
  for (std::uint32_t s = 0; s < count; ++s)
    sts.successor[s] = step_index(network, s);

  // Cycle detection on the functional graph: walk unexplored chains,
  // marking the walk with a per-pass color; revisiting the current pass
  // closes a new cycle, anything older is a resolved tail.
  sts.attractor_id.assign(count, -1);
  std::vector<std::int32_t> pass(count, -1);
  std::vector<char> resolved(count, 0);
  for (std::uint32_t start = 0; start < count; ++start) {
    if (resolved[start])
      continue;
    std::vector<std::uint32_t> walk;
    std::uint32_t s = start;
    while (!resolved[s] && pass[s] != std::int32_t(start)) {
      pass[s] = std::int32_t(start);
      walk.push_back(s);
      s = sts.successor[s];
    }
    if (!resolved[s]) {
      // s is the first repeated state: the cycle runs from s onward.
      auto cycle_begin = std::find(walk.begin(), walk.end(), s);
      std::vector<std::uint32_t> cycle(cycle_begin, walk.end());
      const auto smallest = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), smallest, cycle.end());
      sts.attractors.push_back(std::move(cycle));
    }
    for (auto state : walk)
      resolved[state] = 1;
  }

  std::sort(sts.attractors.begin(), sts.attractors.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t id = 0; id < sts.attractors.size(); ++id)
    for (auto s : sts.attractors[id])
      sts.attractor_id[s] = std::int32_t(id);

  // Heights: 0 on attractor states, else 1 + height of the successor.
  sts.height.assign(count, 0);
  std::vector<char> done(count, 0);
  for (const auto& cycle : sts.attractors)
    for (auto s : cycle)
      done[s] = 1;
  for (std::uint32_t start = 0; start < count; ++start) {
    if (done[start])
      continue;
    std::vector<std::uint32_t> chain;
    std::uint32_t s = start;
    while (!done[s]) {
      chain.push_back(s);
      s = sts.successor[s];
    }
    std::uint32_t h = sts.height[s];
    std::int32_t id = sts.attractor_id[s];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      sts.height[*it] = ++h;
      sts.attractor_id[*it] = id;
      done[*it] = 1;
    }
  }

  for (std::uint32_t s = 0; s < count; ++s)
    if (sts.successor[s] == s)
      sts.fixed_points.push_back(s);
  return sts;
}

std::vector<NetworkState> fixed_points(const BooleanNetwork& network)
{
  check_state_cap(network.size());
  const std::uint32_t count = std::uint32_t(1) << network.size();
  std::vector<NetworkState> out;
  for (std::uint32_t s = 0; s < count; ++s)
    if (step_index(network, s) == s)
      out.push_back(state_from_index(s, network.size()));
  return out;
}

} // namespace boolnet
