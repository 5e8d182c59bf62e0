#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolnet {

inline constexpr int max_arity = 16;

/*! \brief An n-variable Boolean function stored as a packed truth table.
 *
 * The table bit at input index k is the value of f at the assignment
 * encoded by k, with x_1 as the most significant index bit:
 * k = sum over m of x_m * 2^(n-m).  The decimal label of a function is
 * sum over k of table[k] * 2^k, so the packed words are literally the
 * binary digits of the decimal value.  Bitstring rendering is
 * most-significant index first (index 2^n-1 on the left).
 *
 * Values are immutable after construction and cheap to copy for small
 * arity; the arity cap of 16 keeps a single table at 8 KiB.
 */
class BooleanFunction {
public:
  /// Arity-0 constant zero.
  BooleanFunction() : arity_(0), words_(1, 0) {}

  static BooleanFunction constant(int arity, bool value);

  /// The function f(x_1..x_n) = x_variable (1-based).
  static BooleanFunction projection(int arity, int variable);

  /// Decode an MSB-first bitstring; length must be a power of two >= 2.
  static BooleanFunction from_bitstring(std::string_view text);

  static BooleanFunction from_decimal(int arity, std::uint64_t value);

  /// Decimal-digit-string form; handles values wider than 64 bits.
  static BooleanFunction from_decimal(int arity, std::string_view digits);

  int arity() const { return arity_; }
  std::uint32_t table_size() const { return std::uint32_t(1) << arity_; }

  bool bit(std::uint32_t index) const
  {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }

  /// Value at an explicit assignment (x_1 first); size must equal arity.
  bool evaluate(std::span<const std::uint8_t> assignment) const;

  BooleanFunction complement() const;

  /// Restriction with x_variable fixed to value; remaining variables keep
  /// their relative order.  Result has arity n-1.
  BooleanFunction cofactor(int variable, bool value) const;

  /// Engaged iff the function is constant; holds the constant bit.
  std::optional<bool> constant_value() const;

  /// True iff the two cofactors in the variable differ.
  bool depends_on(int variable) const;

  std::string bitstring() const;
  std::string decimal() const;

  /// Decimal value when it fits in 64 bits (arity <= 6), else nullopt.
  std::optional<std::uint64_t> decimal_u64() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
  friend BooleanFunction operator&(const BooleanFunction& lhs, const BooleanFunction& rhs);
  friend BooleanFunction operator|(const BooleanFunction& lhs, const BooleanFunction& rhs);

private:
  BooleanFunction(int arity, std::vector<std::uint64_t> words)
      : arity_(arity), words_(std::move(words))
  {
  }

  std::uint64_t tail_mask() const;
  static int checked_arity(int arity);

  int arity_;
  std::vector<std::uint64_t> words_; // little-endian, tail bits zero
};

BooleanFunction operator~(const BooleanFunction& f);
BooleanFunction operator&(const BooleanFunction& lhs, const BooleanFunction& rhs);
BooleanFunction operator|(const BooleanFunction& lhs, const BooleanFunction& rhs);

} // namespace boolnet
