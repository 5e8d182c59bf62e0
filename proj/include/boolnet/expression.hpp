#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "boolnet/function.hpp"

namespace boolnet {

/*! \brief Abstract syntax tree for Boolean formulas over x_1..x_n.
 *
 * Nodes are immutable and shared; copies are cheap.
 */
class Expression {
public:
  enum class Kind { variable, negation, conjunction, disjunction };

  static Expression variable(int index);
  static Expression negation(Expression operand);
  static Expression conjunction(Expression lhs, Expression rhs);
  static Expression disjunction(Expression lhs, Expression rhs);

  Kind kind() const;
  int variable_index() const;
  Expression operand() const; // negation only
  Expression lhs() const;     // binary nodes
  Expression rhs() const;

  /// Largest variable index referenced anywhere in the tree.
  int max_variable() const;

  bool evaluate(std::span<const std::uint8_t> assignment) const;

  /// Renders with "!", "&", "|" and minimal parentheses.
  std::string to_string() const;

private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/*! \brief Parse a formula over variables "x1".."x<arity>".
 *
 * Operators: "!" (highest), "&", "|" (lowest); parentheses; whitespace
 * ignored.  The Unicode glyphs U+00AC, U+2227, U+2228 are accepted as
 * synonyms.  Errors carry a 1-based byte column.
 */
Expression parse(std::string_view text, int arity);

/// Truth table of the expression at the given arity.
BooleanFunction compile(const Expression& expr, int arity);

} // namespace boolnet
