#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "boolnet/function.hpp"

namespace boolnet {

/*! \brief A synchronous Boolean network of n nodes.
 *
 * Rule j governs node j and is an n-variable function of the full state,
 * variable i standing for the current value of node i.
 */
class BooleanNetwork {
public:
  explicit BooleanNetwork(std::vector<BooleanFunction> rules);

  int size() const { return int(rules_.size()); }
  const BooleanFunction& rule(int node) const { return rules_[node - 1]; }
  const std::vector<BooleanFunction>& rules() const { return rules_; }

private:
  std::vector<BooleanFunction> rules_;
};

/*! \brief Read the text network format.
 *
 * Line 1 is "n=<size>"; the next n non-blank lines each hold one function
 * literal (d:/b:/e: forms).  '#' starts a comment.
 */
BooleanNetwork parse_network(std::istream& in);

BooleanNetwork load_network(const std::string& path);

} // namespace boolnet
