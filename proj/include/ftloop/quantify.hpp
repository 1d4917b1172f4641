#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ftloop/dnf.hpp"
#include "ftloop/tree.hpp"

namespace ftloop {

enum class QuantMethod { ExhaustiveEnumeration, InclusionExclusion, RareEventApprox };

std::string_view to_string(QuantMethod m);
std::optional<QuantMethod> parse_quant_method(std::string_view name);

inline constexpr std::size_t kMaxEnumerationBasics = 20;
inline constexpr std::size_t kMaxInclusionExclusionCutSets = 20;

struct QuantResult {
  QuantMethod method = QuantMethod::ExhaustiveEnumeration;
  double value = 0.0;
  // Number of minimal cut sets used; absent for exhaustive enumeration.
  std::optional<std::size_t> cutset_count;
  // Rare-event sum exceeded 1 and was clamped.
  bool clamped = false;
};

/// Probability that `top` has failed, with independent basic events that
/// every carry a probability. Throws UnknownGate, RepairableUnsupported,
/// MissingProbability, TooLarge or CapExceeded.
QuantResult top_probability(const FaultTree& tree, std::string_view top, QuantMethod method,
                            std::size_t product_cap = kDefaultProductCap);

}  // namespace ftloop
