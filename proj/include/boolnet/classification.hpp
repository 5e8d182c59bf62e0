#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/decomposition.hpp"
#include "boolnet/function.hpp"

namespace boolnet {

/// Census scans cover 2^(2^arity) candidates; 4 is the practical limit.
inline constexpr int census_max_arity = 4;

enum class FunctionClass {
  only_positive,     // every variable none/positive, at least one positive
  only_negative,     // every variable none/negative, at least one negative
  complete_positive, // every variable positive
  complete_negative, // every variable negative
  nested_canalizing,
};

std::string_view to_string(FunctionClass cls);
std::optional<FunctionClass> class_from_name(std::string_view name);

/*! \brief Canalizing structure of a nested canalizing function.
 *
 * Reading order[k], inputs[k], outputs[k] top-down: f(x) equals
 * outputs[k] for the first k with x[order[k]] == inputs[k], and the
 * complement of outputs.back() when every layer misses.
 */
struct NcfWitness {
  std::vector<int> order;            // 1-based variable indices
  std::vector<std::uint8_t> inputs;  // canalizing input per layer
  std::vector<std::uint8_t> outputs; // canalized output per layer
};

struct ClassificationReport {
  int arity = 0;
  std::string decimal;
  std::string bitstring;
  std::vector<InfluenceSign> influence; // index 0 holds x_1
  std::vector<int> essential;           // ascending variable indices
  bool only_positive = false;
  bool only_negative = false;
  bool complete_positive = false;
  bool complete_negative = false;
  bool nested_canalizing = false;
  std::optional<NcfWitness> witness;
};

ClassificationReport classify(const BooleanFunction& f);

/// Engaged iff f is nested canalizing; the witness is deterministic
/// (layers pick the smallest variable, canalizing input 0 before 1).
std::optional<NcfWitness> nested_canalizing_witness(const BooleanFunction& f);

bool is_nested_canalizing(const BooleanFunction& f);

bool in_class(const BooleanFunction& f, FunctionClass cls);

/// Exhaustive scan of all 2^(2^arity) functions; ascending decimal values.
std::vector<std::uint64_t> enumerate_class(int arity, FunctionClass cls);

} // namespace boolnet
