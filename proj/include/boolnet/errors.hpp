#pragma once

#include <stdexcept>

namespace boolnet {

// Thrown when an input exceeds a hard resource bound (function arity,
// census arity, state-space size).  The CLI maps this to exit code 2,
// keeping it distinct from ordinary usage errors.
class cap_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace boolnet
