#pragma once

#include <string>
#include <string_view>

#include "boolnet/function.hpp"

namespace boolnet {

/*! \brief Parse a textual function literal.
 *
 * Accepted forms:
 *   d:<decimal>@<arity>   e.g. "d:21@3"
 *   b:<bitstring>         e.g. "b:00010101"
 *   e:<arity>:<formula>   e.g. "e:3:!x2&!x3"
 */
BooleanFunction parse_function_literal(std::string_view text);

} // namespace boolnet
