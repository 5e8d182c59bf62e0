#include "boolnet/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolnet {

std::string_view to_string(InfluenceSign sign)
{
  switch (sign) {
  case InfluenceSign::none: return "none";
  case InfluenceSign::positive: return "positive";
  case InfluenceSign::negative: return "negative";
  default: return "dual";
  }
}

std::string Fragment::to_string() const
{
  if (restriction.arity() == 1) {
    std::string out;
    out.push_back(restriction.bit(0) ? '1' : '0');
    out.push_back(restriction.bit(1) ? '1' : '0');
    return out;
  }
  if (restriction.arity() == 0)
    return restriction.bit(0) ? "1" : "0";
  return restriction.bitstring();
}

std::string DecompositionTable::assignment_string(std::uint32_t rank) const
{
  std::string out;
  for (std::size_t m = fixed_set.size(); m-- > 0;)
    out.push_back((rank >> m) & 1u ? '1' : '0');
  return out;
}

namespace {

std::vector<int> checked_fixed_set(std::vector<int> fixed_set, int arity)
{
  if (fixed_set.empty())
    throw std::invalid_argument("fixed set must be nonempty");
  std::sort(fixed_set.begin(), fixed_set.end());
  if (std::adjacent_find(fixed_set.begin(), fixed_set.end()) != fixed_set.end())
    throw std::invalid_argument("fixed set contains a duplicate variable");
  if (fixed_set.front() < 1 || fixed_set.back() > arity)
    throw std::invalid_argument("fixed-set variable index out of range");
  return fixed_set;
}

// Full-table index for one fixed assignment and one free assignment,
// both encoded with lower-numbered variables more significant.
std::uint32_t full_index(int arity, const std::vector<int>& fixed_set,
                         std::uint32_t fixed_bits, std::uint32_t free_bits)
{
  std::uint32_t k = 0;
  std::size_t next_fixed = 0;
  int fixed_left = int(fixed_set.size());
  int free_left = arity - fixed_left;
  for (int variable = 1; variable <= arity; ++variable) {
    bool value;
    if (next_fixed < fixed_set.size() && fixed_set[next_fixed] == variable) {
      value = (fixed_bits >> (fixed_left - 1 - int(next_fixed))) & 1u;
      ++next_fixed;
    } else {
      --free_left;
      value = (free_bits >> free_left) & 1u;
    }
    k = (k << 1) | (value ? 1u : 0u);
  }
  return k;
}

} // namespace

DecompositionTable decompose(const BooleanFunction& f, std::vector<int> fixed_set)
{
  const int n = f.arity();
  DecompositionTable table;
  table.arity = n;
  table.fixed_set = checked_fixed_set(std::move(fixed_set), n);
  const int free_count = n - int(table.fixed_set.size());
  const std::uint32_t assignments = std::uint32_t(1) << table.fixed_set.size();
  table.entries.reserve(assignments);
  for (std::uint32_t a = 0; a < assignments; ++a) {
    if (free_count == 0) {
      // Fixing every variable leaves a 1-bit fragment.
      table.entries.push_back(
          {BooleanFunction::constant(0, f.bit(full_index(n, table.fixed_set, a, 0)))});
      continue;
    }
    std::string bits(std::size_t(1) << free_count, '0');
    for (std::uint32_t k = 0; k < bits.size(); ++k)
      if (f.bit(full_index(n, table.fixed_set, a, k)))
        bits[bits.size() - 1 - k] = '1'; // MSB-first for from_bitstring
    table.entries.push_back({BooleanFunction::from_bitstring(bits)});
  }
  return table;
}

BooleanFunction reconstruct(const DecompositionTable& table)
{
  const int n = table.arity;
  std::string bits(std::size_t(1) << n, '0');
  for (std::uint32_t a = 0; a < table.entries.size(); ++a) {
    const auto& restriction = table.entries[a].restriction;
    for (std::uint32_t k = 0; k < restriction.table_size(); ++k)
      if (restriction.bit(k))
        bits[bits.size() - 1 - full_index(n, table.fixed_set, a, k)] = '1';
  }
  return BooleanFunction::from_bitstring(bits);
}

InfluenceSign influence(const BooleanFunction& f, int variable)
{
  const int n = f.arity();
  if (variable < 1 || variable > n)
    throw std::invalid_argument("variable index out of range");
  const std::uint32_t var_bit = std::uint32_t(1) << (n - variable);
  bool saw01 = false;
  bool saw10 = false;
  for (std::uint32_t k = 0; k < f.table_size(); ++k) {
    if (k & var_bit)
      continue;
    const bool at0 = f.bit(k);
    const bool at1 = f.bit(k | var_bit);
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

std::vector<InfluenceSign> influences(const BooleanFunction& f)
{
  std::vector<InfluenceSign> out;
  out.reserve(f.arity());
  for (int variable = 1; variable <= f.arity(); ++variable)
    out.push_back(influence(f, variable));
  return out;
}

} // namespace boolnet
