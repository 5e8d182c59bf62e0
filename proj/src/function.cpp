#include "boolnet/function.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

std::size_t word_count(int arity)
{
  return arity <= 6 ? 1 : (std::size_t(1) << (arity - 6));
}

// Little-endian 64-bit limbs from a decimal digit string.
std::vector<std::uint64_t> limbs_from_decimal(std::string_view digits)
{
  if (digits.empty())
    throw std::invalid_argument("empty decimal value");
  std::vector<std::uint64_t> limbs{0};
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string("invalid decimal digit '") + c + "'");
    unsigned __int128 carry = unsigned(c - '0');
    for (auto& limb : limbs) {
      unsigned __int128 t = (unsigned __int128)limb * 10 + carry;
      limb = std::uint64_t(t);
      carry = t >> 64;
    }
    if (carry)
      limbs.push_back(std::uint64_t(carry));
  }
  return limbs;
}

std::string limbs_to_decimal(std::vector<std::uint64_t> limbs)
{
  constexpr std::uint64_t chunk = 1'000'000'000;
  std::vector<std::uint32_t> groups;
  auto all_zero = [&] {
    return std::all_of(limbs.begin(), limbs.end(), [](auto w) { return w == 0; });
  };
  while (!all_zero()) {
    unsigned __int128 rem = 0;
    for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) {
      unsigned __int128 cur = (rem << 64) | *it;
      *it = std::uint64_t(cur / chunk);
      rem = cur % chunk;
    }
    groups.push_back(std::uint32_t(rem));
  }
  if (groups.empty())
    return "0";
  std::string out = std::to_string(groups.back());
  for (auto it = groups.rbegin() + 1; it != groups.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

} // namespace

int BooleanFunction::checked_arity(int arity)
{
  if (arity < 0)
    throw std::invalid_argument("arity must be non-negative");
  if (arity > max_arity)
    throw cap_error("arity " + std::to_string(arity) + " exceeds the cap of " +
                    std::to_string(max_arity));
  return arity;
}

std::uint64_t BooleanFunction::tail_mask() const
{
  if (arity_ >= 6)
    return ~std::uint64_t(0);
  return (std::uint64_t(1) << table_size()) - 1;
}

BooleanFunction BooleanFunction::constant(int arity, bool value)
{
  checked_arity(arity);
  BooleanFunction f(arity, std::vector<std::uint64_t>(word_count(arity), 0));
  if (value)
    for (auto& w : f.words_)
      w = ~std::uint64_t(0);
  f.words_.back() &= f.tail_mask();
  return f;
}

BooleanFunction BooleanFunction::projection(int arity, int variable)
{
  checked_arity(arity);
  if (arity < 1)
    throw std::invalid_argument("projection requires arity >= 1");
  if (variable < 1 || variable > arity)
    throw std::invalid_argument("variable index out of range");
  BooleanFunction f(arity, std::vector<std::uint64_t>(word_count(arity), 0));
  for (std::uint32_t k = 0; k < f.table_size(); ++k)
    if ((k >> (arity - variable)) & 1u)
      f.words_[k >> 6] |= std::uint64_t(1) << (k & 63);
  return f;
}

BooleanFunction BooleanFunction::from_bitstring(std::string_view text)
{
  const auto len = text.size();
  if (len < 2 || !std::has_single_bit(len))
    throw std::invalid_argument("bitstring length must be a power of two >= 2");
  const int arity = std::countr_zero(len);
  checked_arity(arity);
  BooleanFunction f(arity, std::vector<std::uint64_t>(word_count(arity), 0));
  for (std::size_t pos = 0; pos < len; ++pos) {
    const char c = text[pos];
    if (c != '0' && c != '1')
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    if (c == '1') {
      const std::uint32_t k = std::uint32_t(len - 1 - pos);
      f.words_[k >> 6] |= std::uint64_t(1) << (k & 63);
    }
  }
  return f;
}

BooleanFunction BooleanFunction::from_decimal(int arity, std::uint64_t value)
{
  checked_arity(arity);
  if (arity < 1)
    throw std::invalid_argument("arity must be >= 1");
  BooleanFunction f(arity, std::vector<std::uint64_t>(word_count(arity), 0));
  if (arity < 6 && value > f.tail_mask())
    throw std::invalid_argument("decimal value too large for arity " + std::to_string(arity));
  f.words_[0] = value;
  return f;
}

BooleanFunction BooleanFunction::from_decimal(int arity, std::string_view digits)
{
  checked_arity(arity);
  if (arity < 1)
    throw std::invalid_argument("arity must be >= 1");
  auto limbs = limbs_from_decimal(digits);
  BooleanFunction f(arity, std::vector<std::uint64_t>(word_count(arity), 0));
  const auto words = f.words_.size();
  for (std::size_t i = words; i < limbs.size(); ++i)
    if (limbs[i])
      throw std::invalid_argument("decimal value too large for arity " + std::to_string(arity));
  limbs.resize(words, 0);
  if (limbs.back() & ~f.tail_mask())
    throw std::invalid_argument("decimal value too large for arity " + std::to_string(arity));
  f.words_ = std::move(limbs);
  return f;
}

bool BooleanFunction::evaluate(std::span<const std::uint8_t> assignment) const
{
  if (int(assignment.size()) != arity_)
    throw std::invalid_argument("assignment length does not match arity");
  std::uint32_t k = 0;
  for (auto b : assignment)
    k = (k << 1) | (b ? 1u : 0u);
  return bit(k);
}

BooleanFunction BooleanFunction::complement() const
{
  BooleanFunction f(*this);
  for (auto& w : f.words_)
    w = ~w;
  f.words_.back() &= f.tail_mask();
  return f;
}

BooleanFunction BooleanFunction::cofactor(int variable, bool value) const
{
  if (arity_ < 1)
    throw std::invalid_argument("cannot restrict an arity-0 function");
  if (variable < 1 || variable > arity_)
    throw std::invalid_argument("variable index out of range");
  const int m = arity_ - 1;
  BooleanFunction g(m, std::vector<std::uint64_t>(word_count(m), 0));
  const std::uint32_t low_span = std::uint32_t(1) << (arity_ - variable);
  for (std::uint32_t k = 0; k < g.table_size(); ++k) {
    const std::uint32_t high = k / low_span;
    const std::uint32_t low = k % low_span;
    const std::uint32_t full = high * (low_span << 1) + (value ? low_span : 0) + low;
    if (bit(full))
      g.words_[k >> 6] |= std::uint64_t(1) << (k & 63);
  }
  return g;
}

std::optional<bool> BooleanFunction::constant_value() const
{
  const bool first = bit(0);
  const std::uint64_t want = first ? ~std::uint64_t(0) : 0;
  for (std::size_t i = 0; i + 1 < words_.size(); ++i)
    if (words_[i] != want)
      return std::nullopt;
  if (words_.back() != (want & tail_mask()))
    return std::nullopt;
  return first;
}

bool BooleanFunction::depends_on(int variable) const
{
  return cofactor(variable, false) != cofactor(variable, true);
}

std::string BooleanFunction::bitstring() const
{
  std::string out;
  out.reserve(table_size());
  for (std::uint32_t k = table_size(); k-- > 0;)
    out.push_back(bit(k) ? '1' : '0');
  return out;
}

std::string BooleanFunction::decimal() const
{
  return limbs_to_decimal(words_);
}

std::optional<std::uint64_t> BooleanFunction::decimal_u64() const
{
  if (words_.size() > 1)
    return std::nullopt;
  return words_[0];
}

BooleanFunction operator~(const BooleanFunction& f)
{
  return f.complement();
}

BooleanFunction operator&(const BooleanFunction& lhs, const BooleanFunction& rhs)
{
  if (lhs.arity() != rhs.arity())
    throw std::invalid_argument("arity mismatch");
  auto out = lhs;
  for (std::size_t i = 0; i < out.words_.size(); ++i)
    out.words_[i] &= rhs.words_[i];
  return out;
}

BooleanFunction operator|(const BooleanFunction& lhs, const BooleanFunction& rhs)
{
  if (lhs.arity() != rhs.arity())
    throw std::invalid_argument("arity mismatch");
  return ~(~lhs & ~rhs);
}

} // namespace boolnet
