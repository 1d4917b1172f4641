#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ftloop/dnf.hpp"
#include "ftloop/tree.hpp"

namespace ftloop {

inline Literal basic_literal(std::size_t basic) { return static_cast<Literal>(basic); }
inline Literal gate_literal(const FaultTree& tree, std::size_t gate) {
  return static_cast<Literal>(tree.basic_count() + gate);
}
inline bool is_gate_literal(const FaultTree& tree, Literal l) { return l >= tree.basic_count(); }
inline std::size_t literal_gate(const FaultTree& tree, Literal l) { return l - tree.basic_count(); }
std::string literal_name(const FaultTree& tree, Literal l);

/// Sum-of-products form of an expression, over basic and gate literals.
Dnf to_dnf(const FaultTree& tree, const Expr& expr, std::size_t cap = kDefaultProductCap);

/// Truth of a Dnf whose gate literals (if any) are read from `gates`.
bool evaluate(const FaultTree& tree, const Dnf& dnf, const Assignment& basics,
              const StateVector& gates);

/// Gate equations of one strongly connected component. Gates outside the
/// component are already replaced by their basic-only cut sets, so each
/// equation is over basics and member gates only:
///
///   G = Q0 | (Q1 & G1) | (Q12 & G1 & G2) | ...
///
/// basic_part() extracts the Q0 coefficient.
struct EquationSystem {
  std::vector<std::size_t> members;          // sorted by gate name
  std::map<std::size_t, Dnf> equations;      // gate index -> right-hand side
};

struct CutSetOptions {
  std::size_t product_cap = kDefaultProductCap;
  // Order in which loop members are eliminated; gates not listed follow in
  // lexicographic order. The result does not depend on it.
  std::vector<std::string> elimination_order;
};

/// Equation system of the component containing `gate`.
EquationSystem equation_system(const FaultTree& tree, std::string_view gate,
                               const CutSetOptions& options = {});

/// Products of `dnf` that contain basic events only.
Dnf basic_part(const FaultTree& tree, const Dnf& dnf);

/// Minimal cut sets of `top` as a normalized Dnf over basic events. Loops are
/// solved for their least solution by repeatedly dropping self-dependent
/// products and substituting. Throws RepairableUnsupported (detail lists the
/// offending events), UnknownGate or CapExceeded.
Dnf minimal_cut_sets(const FaultTree& tree, std::string_view top,
                     const CutSetOptions& options = {});

/// Cut sets as names; each set sorted, sets ordered by (size, names).
std::vector<std::vector<std::string>> cut_set_names(const FaultTree& tree, const Dnf& dnf);

/// Basic events reachable from `gate` through gate bodies, sorted by index.
std::vector<std::size_t> reachable_basics(const FaultTree& tree, std::size_t gate);

}  // namespace ftloop
