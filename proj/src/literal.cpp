#include "boolnet/literal.hpp"

#include <stdexcept>

#include "boolnet/expression.hpp"

namespace boolnet {

namespace {

int parse_arity(std::string_view text)
{
  if (text.empty())
    throw std::invalid_argument("missing arity");
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid arity '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > 1000)
      break; // let the arity cap produce the diagnostic
  }
  return value;
}

} // namespace

BooleanFunction parse_function_literal(std::string_view text)
{
  if (text.size() < 2 || text[1] != ':')
    throw std::invalid_argument("function literal must start with 'd:', 'b:' or 'e:' (got '" +
                                std::string(text) + "')");
  const std::string_view body = text.substr(2);
  switch (text[0]) {
  case 'd': {
    const auto at = body.rfind('@');
    if (at == std::string_view::npos)
      throw std::invalid_argument("decimal literal needs '@<arity>' (got '" +
                                  std::string(text) + "')");
    return BooleanFunction::from_decimal(parse_arity(body.substr(at + 1)),
                                         body.substr(0, at));
  }
  case 'b':
    return BooleanFunction::from_bitstring(body);
  case 'e': {
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("expression literal needs 'e:<arity>:<formula>' (got '" +
                                  std::string(text) + "')");
    const int arity = parse_arity(body.substr(0, colon));
    return compile(parse(body.substr(colon + 1), arity), arity);
  }
  default:
    throw std::invalid_argument("unknown function literal prefix '" +
                                std::string(text.substr(0, 1)) + "'");
  }
}

} // namespace boolnet
