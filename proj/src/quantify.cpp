#include "ftloop/quantify.hpp"

#include <string>
#include <vector>

#include "ftloop/cutset.hpp"
#include "ftloop/error.hpp"
#include "ftloop/fixpoint.hpp"

namespace ftloop {

std::string_view to_string(QuantMethod m) {
  switch (m) {
    case QuantMethod::ExhaustiveEnumeration: return "ExhaustiveEnumeration";
    case QuantMethod::InclusionExclusion: return "InclusionExclusion";
    case QuantMethod::RareEventApprox: return "RareEventApprox";
  }
  return "Unknown";
}

std::optional<QuantMethod> parse_quant_method(std::string_view name) {
  if (name == "enumeration" || name == "exact" || name == "ExhaustiveEnumeration") {
    return QuantMethod::ExhaustiveEnumeration;
  }
  if (name == "inclusion-exclusion" || name == "InclusionExclusion") {
    return QuantMethod::InclusionExclusion;
  }
  if (name == "rare-event" || name == "RareEventApprox") return QuantMethod::RareEventApprox;
  return std::nullopt;
}

namespace {

double enumerate(const FaultTree& tree, std::size_t top, const std::vector<std::size_t>& basics) {
  if (basics.size() > kMaxEnumerationBasics) {
    throw Error(ErrorCode::TooLarge, std::to_string(basics.size()) +
                                         " reachable basic events exceed the enumeration limit of " +
                                         std::to_string(kMaxEnumerationBasics));
  }
  double total = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << basics.size()); ++mask) {
    Assignment a(tree.basic_count(), false);
    double weight = 1.0;
    for (std::size_t i = 0; i < basics.size(); ++i) {
      const double p = *tree.basics()[basics[i]].prob;
      const bool failed = (mask >> i) & 1U;
      a.set(basics[i], failed);
      weight *= failed ? p : 1.0 - p;
    }
    if (eval_least_fixpoint(tree, a)[top]) total += weight;
  }
  return total;
}

// Alternating sum over every nonempty subset of cut sets; the probability
// of a union of cut sets is the product over its distinct events.
class InclusionExclusion {
 public:
  InclusionExclusion(const FaultTree& tree, const Dnf& cut_sets)
      : tree_(tree), sets_(cut_sets.products()), in_union_(tree.basic_count(), 0) {}

  double run() {
    visit(0, 1.0, 0);
    return total_;
  }

 private:
  void visit(std::size_t next, double union_prob, std::size_t chosen) {
    for (std::size_t i = next; i < sets_.size(); ++i) {
      double prob = union_prob;
      for (auto l : sets_[i]) {
        if (in_union_[l]++ == 0) prob *= *tree_.basics()[l].prob;
      }
      total_ += (chosen % 2 == 0) ? prob : -prob;
      visit(i + 1, prob, chosen + 1);
      for (auto l : sets_[i]) --in_union_[l];
    }
  }

  const FaultTree& tree_;
  const std::vector<Product>& sets_;
  std::vector<int> in_union_;
  double total_ = 0.0;
};

}  // namespace

QuantResult top_probability(const FaultTree& tree, std::string_view top, QuantMethod method,
                            std::size_t product_cap) {
  const std::size_t g = tree.require_gate(top);
  const auto basics = reachable_basics(tree, g);

  std::string repairable, missing;
  for (auto b : basics) {
    const auto& def = tree.basics()[b];
    if (def.kind == EventKind::Repairable) repairable += (repairable.empty() ? "" : ",") + def.id;
    if (!def.prob) missing += (missing.empty() ? "" : ",") + def.id;
  }
  if (!repairable.empty()) throw Error(ErrorCode::RepairableUnsupported, repairable, repairable);
  if (!missing.empty()) throw Error(ErrorCode::MissingProbability, missing, missing);

  QuantResult result;
  result.method = method;
  if (method == QuantMethod::ExhaustiveEnumeration) {
    result.value = enumerate(tree, g, basics);
    return result;
  }

  CutSetOptions options;
  options.product_cap = product_cap;
  const Dnf cut_sets = minimal_cut_sets(tree, top, options);
  result.cutset_count = cut_sets.size();

  if (method == QuantMethod::InclusionExclusion) {
    if (cut_sets.size() > kMaxInclusionExclusionCutSets) {
      throw Error(ErrorCode::TooLarge,
                  std::to_string(cut_sets.size()) + " cut sets exceed the inclusion-exclusion limit of " +
                      std::to_string(kMaxInclusionExclusionCutSets));
    }
    result.value = InclusionExclusion(tree, cut_sets).run();
    return result;
  }

  double sum = 0.0;
  for (const auto& p : cut_sets.products()) {
    double prob = 1.0;
    for (auto l : p) prob *= *tree.basics()[l].prob;
    sum += prob;
  }
  if (sum > 1.0) {
    result.clamped = true;
    sum = 1.0;
  }
  result.value = sum;
  return result;
}

}  // namespace ftloop
