#include "boolnet/network.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "boolnet/literal.hpp"

namespace boolnet {

BooleanNetwork::BooleanNetwork(std::vector<BooleanFunction> rules) : rules_(std::move(rules))
{
  if (rules_.empty())
    throw std::invalid_argument("network needs at least one rule");
  for (std::size_t j = 0; j < rules_.size(); ++j)
    if (rules_[j].arity() != int(rules_.size()))
      throw std::invalid_argument("rule " + std::to_string(j + 1) + " has arity " +
                                  std::to_string(rules_[j].arity()) + ", expected " +
                                  std::to_string(rules_.size()));
}

namespace {

std::string strip(std::string line)
{
  if (auto hash = line.find('#'); hash != std::string::npos)
    line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return {};
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

} // namespace

BooleanNetwork parse_network(std::istream& in)
{
  std::string line;
  std::vector<std::string> items;
  while (std::getline(in, line)) {
    auto text = strip(line);
    if (!text.empty())
      items.push_back(std::move(text));
  }
  if (items.empty())
    throw std::invalid_argument("network file is empty");
  if (items.front().rfind("n=", 0) != 0)
    throw std::invalid_argument("network file must start with 'n=<size>'");
  int size = 0;
  try {
    size = std::stoi(items.front().substr(2));
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid network size '" + items.front() + "'");
  }
  if (size < 1)
    throw std::invalid_argument("network size must be >= 1");
  if (int(items.size()) - 1 != size)
    throw std::invalid_argument("expected " + std::to_string(size) + " rules, found " +
                                std::to_string(items.size() - 1));
  std::vector<BooleanFunction> rules;
  rules.reserve(size);
  for (int j = 1; j <= size; ++j)
    rules.push_back(parse_function_literal(items[j]));
  return BooleanNetwork(std::move(rules));
}

BooleanNetwork load_network(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open network file '" + path + "'");
  return parse_network(in);
}

} // namespace boolnet
