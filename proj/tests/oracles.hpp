#pragma once

// Test-only reference implementations, kept deliberately naive and
// independent of the library's index arithmetic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "boolnet/decomposition.hpp"
#include "boolnet/function.hpp"
#include "boolnet/interaction_graph.hpp"
#include "boolnet/network.hpp"

namespace oracles {

using boolnet::ArcSign;
using boolnet::BooleanFunction;
using boolnet::InfluenceSign;

inline std::vector<std::uint8_t> assignment_of(std::uint32_t k, int n)
{
  std::vector<std::uint8_t> a(n);
  for (int m = 0; m < n; ++m)
    a[m] = (k >> (n - 1 - m)) & 1u;
  return a;
}

// Monotone nondecreasing: f(x) <= f(y) whenever x <= y componentwise,
// checked over all ordered pairs of assignments.
inline bool monotone_nondecreasing(const BooleanFunction& f)
{
  const int n = f.arity();
  for (std::uint32_t x = 0; x < f.table_size(); ++x) {
    for (std::uint32_t y = 0; y < f.table_size(); ++y) {
      const auto ax = assignment_of(x, n);
      const auto ay = assignment_of(y, n);
      bool dominated = true;
      for (int m = 0; m < n; ++m)
        dominated &= ax[m] <= ay[m];
      if (dominated && f.evaluate(ax) && !f.evaluate(ay))
        return false;
    }
  }
  return true;
}

// Influence sign by direct evaluation over explicit assignment vectors.
inline InfluenceSign influence_sign(const BooleanFunction& f, int variable)
{
  const int n = f.arity();
  bool saw01 = false;
  bool saw10 = false;
  for (std::uint32_t k = 0; k < f.table_size(); ++k) {
    auto a = assignment_of(k, n);
    if (a[variable - 1] != 0)
      continue;
    const bool at0 = f.evaluate(a);
    a[variable - 1] = 1;
    const bool at1 = f.evaluate(a);
    saw01 |= !at0 && at1;
    saw10 |= at0 && !at1;
  }
  if (saw01 && saw10)
    return InfluenceSign::dual;
  if (saw01)
    return InfluenceSign::positive;
  if (saw10)
    return InfluenceSign::negative;
  return InfluenceSign::none;
}

// Shortest signed walk by exhaustive length-by-length walk enumeration:
// reach[v][p] after exactly L arcs, relaxed one arc at a time.
inline std::optional<int> shortest_signed_walk(const boolnet::SignedDigraph& graph, int from,
                                               int to, ArcSign sign, int max_len)
{
  const int n = graph.vertex_count();
  std::vector<std::array<bool, 2>> reach(n + 1, {false, false});
  reach[from][0] = true;
  const int wanted = sign == ArcSign::negative ? 1 : 0;
  for (int length = 1; length <= max_len; ++length) {
    std::vector<std::array<bool, 2>> next(n + 1, {false, false});
    for (int v = 1; v <= n; ++v)
      for (int p = 0; p < 2; ++p)
        if (reach[v][p])
          for (const auto& arc : graph.arcs_from(v))
            next[arc.to][p ^ (arc.sign == ArcSign::negative ? 1 : 0)] = true;
    if (next[to][wanted])
      return length;
    reach = std::move(next);
  }
  return std::nullopt;
}

inline BooleanFunction random_function(int arity, std::mt19937& rng)
{
  std::string bits(std::size_t(1) << arity, '0');
  for (auto& c : bits)
    c = (rng() & 1u) ? '1' : '0';
  return BooleanFunction::from_bitstring(bits);
}

// Random network whose rules read only variables earlier in a shuffled
// order, making the interaction graph a subgraph of a DAG.
inline boolnet::BooleanNetwork random_acyclic_network(int size, std::mt19937& rng)
{
  std::vector<int> order(size);
  for (int i = 0; i < size; ++i)
    order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<BooleanFunction> rules(size, BooleanFunction::constant(size, false));
  for (int position = 0; position < size; ++position) {
    std::vector<int> support;
    for (int earlier = 0; earlier < position; ++earlier)
      if (rng() & 1u)
        support.push_back(order[earlier]);
    std::string bits(std::size_t(1) << size, '0');
    const auto pattern = random_function(std::max<int>(1, int(support.size())), rng);
    for (std::uint32_t k = 0; k < bits.size(); ++k) {
      std::uint32_t reduced = 0;
      for (int variable : support)
        reduced = (reduced << 1) | ((k >> (size - variable)) & 1u);
      const bool value = support.empty() ? pattern.bit(0) : pattern.bit(reduced);
      if (value)
        bits[bits.size() - 1 - k] = '1';
    }
    rules[order[position] - 1] = BooleanFunction::from_bitstring(bits);
  }
  return boolnet::BooleanNetwork(std::move(rules));
}

} // namespace oracles
