#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/function.hpp"

namespace boolnet {

/// Direction of a variable's effect on a function, read off the 2-bit
/// fragments: "01" witnesses positive, "10" negative, both make the
/// variable dual, neither makes it inessential.
enum class InfluenceSign { none, positive, negative, dual };

std::string_view to_string(InfluenceSign sign);

/*! \brief One restriction of a function, with a fixed subset of variables
 * bound to constants.
 *
 * Rendering convention: a 2-bit fragment reads low free-assignment first
 * ("01" means f is 0 with the free variable at 0 and 1 with it at 1);
 * wider fragments use the usual most-significant-first table rendering.
 */
struct Fragment {
  BooleanFunction restriction;
  std::string to_string() const;
};

/*! \brief All restrictions of a function over one fixed variable set.
 *
 * Entry r holds the restriction with the fixed variables bound to the
 * bits of r, lower-numbered fixed variables more significant.
 */
struct DecompositionTable {
  int arity = 0;               // arity of the decomposed function
  std::vector<int> fixed_set;  // ascending, 1-based
  std::vector<Fragment> entries;

  std::string assignment_string(std::uint32_t rank) const;
};

/// Segment f by every assignment of the fixed variables.  The fixed set
/// may be any nonempty subset of 1..n; fixing all n variables yields
/// 1-bit fragments.
DecompositionTable decompose(const BooleanFunction& f, std::vector<int> fixed_set);

/// Inverse of decompose: reassemble the original table from the fragments.
BooleanFunction reconstruct(const DecompositionTable& table);

/// Sign of variable i in f, from the 2-bit fragments with every other
/// variable fixed.
InfluenceSign influence(const BooleanFunction& f, int variable);

/// influence() for every variable, index 0 holding x_1.
std::vector<InfluenceSign> influences(const BooleanFunction& f);

} // namespace boolnet
