#include "boolnet/classification.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "boolnet/errors.hpp"

namespace boolnet {

std::string_view to_string(FunctionClass cls)
{
  switch (cls) {
  case FunctionClass::only_positive: return "only-positive";
  case FunctionClass::only_negative: return "only-negative";
  case FunctionClass::complete_positive: return "complete-positive";
  case FunctionClass::complete_negative: return "complete-negative";
  default: return "ncf";
  }
}

std::optional<FunctionClass> class_from_name(std::string_view name)
{
  if (name == "only-positive")
    return FunctionClass::only_positive;
  if (name == "only-negative")
    return FunctionClass::only_negative;
  if (name == "complete-positive")
    return FunctionClass::complete_positive;
  if (name == "complete-negative")
    return FunctionClass::complete_negative;
  if (name == "ncf" || name == "nested-canalizing")
    return FunctionClass::nested_canalizing;
  return std::nullopt;
}

namespace {

// Backtracking search for the canalizing layers: each layer needs some
// (variable, input) whose cofactor is constant while the opposite cofactor
// is again nested canalizing.  Variables keep their original indices via
// `names`; functions already known non-canalizing are memoized so dead
// branches are not re-explored.
class WitnessSearch {
public:
  bool run(const BooleanFunction& f, const std::vector<int>& names, NcfWitness& witness)
  {
    const int n = f.arity();
    if (n == 1) {
      const bool at0 = f.bit(0);
      const bool at1 = f.bit(1);
      if (at0 == at1)
        return false; // constant, not x or !x
      witness.order.push_back(names[0]);
      witness.inputs.push_back(0);
      witness.outputs.push_back(at0 ? 1 : 0);
      return true;
    }
    if (f.constant_value() || failed_.count(f.bitstring()))
      return false;
    for (int variable = 1; variable <= n; ++variable) {
      for (int input = 0; input <= 1; ++input) {
        const auto canalized = f.cofactor(variable, input != 0).constant_value();
        if (!canalized)
          continue;
        witness.order.push_back(names[variable - 1]);
        witness.inputs.push_back(std::uint8_t(input));
        witness.outputs.push_back(*canalized ? 1 : 0);
        std::vector<int> rest = names;
        rest.erase(rest.begin() + (variable - 1));
        if (run(f.cofactor(variable, input == 0), rest, witness))
          return true;
        witness.order.pop_back();
        witness.inputs.pop_back();
        witness.outputs.pop_back();
      }
    }
    failed_.insert(f.bitstring());
    return false;
  }

private:
  std::unordered_set<std::string> failed_;
};

bool signs_match(const std::vector<InfluenceSign>& signs, InfluenceSign wanted, bool all)
{
  bool any = false;
  for (auto sign : signs) {
    if (sign == wanted)
      any = true;
    else if (sign != InfluenceSign::none || all)
      return false;
  }
  return any;
}

} // namespace

std::optional<NcfWitness> nested_canalizing_witness(const BooleanFunction& f)
{
  if (f.arity() < 1)
    return std::nullopt;
  NcfWitness witness;
  std::vector<int> names(f.arity());
  for (int i = 0; i < f.arity(); ++i)
    names[i] = i + 1;
  WitnessSearch search;
  if (!search.run(f, names, witness))
    return std::nullopt;
  return witness;
}

bool is_nested_canalizing(const BooleanFunction& f)
{
  return nested_canalizing_witness(f).has_value();
}

bool in_class(const BooleanFunction& f, FunctionClass cls)
{
  if (cls == FunctionClass::nested_canalizing)
    return is_nested_canalizing(f);
  const auto signs = influences(f);
  switch (cls) {
  case FunctionClass::only_positive:
    return signs_match(signs, InfluenceSign::positive, false);
  case FunctionClass::only_negative:
    return signs_match(signs, InfluenceSign::negative, false);
  case FunctionClass::complete_positive:
    return signs_match(signs, InfluenceSign::positive, true);
  default:
    return signs_match(signs, InfluenceSign::negative, true);
  }
}

ClassificationReport classify(const BooleanFunction& f)
{
  if (f.arity() < 1)
    throw std::invalid_argument("classification needs arity >= 1");
  ClassificationReport report;
  report.arity = f.arity();
  report.decimal = f.decimal();
  report.bitstring = f.bitstring();
  report.influence = influences(f);
  for (int i = 0; i < f.arity(); ++i)
    if (report.influence[i] != InfluenceSign::none)
      report.essential.push_back(i + 1);
  report.only_positive = signs_match(report.influence, InfluenceSign::positive, false);
  report.only_negative = signs_match(report.influence, InfluenceSign::negative, false);
  report.complete_positive = signs_match(report.influence, InfluenceSign::positive, true);
  report.complete_negative = signs_match(report.influence, InfluenceSign::negative, true);
  report.witness = nested_canalizing_witness(f);
  report.nested_canalizing = report.witness.has_value();
  return report;
}

std::vector<std::uint64_t> enumerate_class(int arity, FunctionClass cls)
{
  if (arity < 1)
    throw std::invalid_argument("arity must be >= 1");
  if (arity > census_max_arity)
    throw cap_error("census arity " + std::to_string(arity) + " exceeds the cap of " +
                    std::to_string(census_max_arity));
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t(1) << (std::uint64_t(1) << arity);
  for (std::uint64_t value = 0; value < count; ++value)
    if (in_class(BooleanFunction::from_decimal(arity, value), cls))
      out.push_back(value);
  return out;
}

} // namespace boolnet
