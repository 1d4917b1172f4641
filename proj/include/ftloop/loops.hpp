#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftloop/dnf.hpp"
#include "ftloop/tree.hpp"

namespace ftloop {

/// Edge g -> h when gate g's body references gate h. Node i is gate i.
struct DependencyGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<std::size_t>> successors;

  bool has_edge(std::size_t from, std::size_t to) const;
};

DependencyGraph build_dependency_graph(const FaultTree& tree);

/// Strongly connected components in reverse topological order (every
/// component appears after all components it depends on). Among components
/// that are ready at the same time, the one with the lexicographically
/// smallest member name comes first. Members are sorted by name.
std::vector<std::vector<std::size_t>> strongly_connected_components(const DependencyGraph& graph);

enum class LoopClass {
  Acyclic,
  Ordinary,
  LinearInterrelated,
  NonLinearInterrelated,
  // Classification could not finish, see Component::diagnostic.
  Unclassified,
};

std::string_view to_string(LoopClass c);

struct Component {
  std::vector<std::string> members;
  std::vector<std::size_t> gates;  // same order as members
  LoopClass loop_class = LoopClass::Acyclic;
  std::optional<std::string> diagnostic;
};

struct SccReport {
  std::vector<Component> components;
};

/// True for a component of two or more gates or a single gate that refers
/// to itself.
bool is_cyclic(const DependencyGraph& graph, const std::vector<std::size_t>& component);

/// Computes SCCs and classifies each one:
///  - Ordinary: each member references exactly one member, forming one cycle;
///  - LinearInterrelated: no product of any member's sum-of-products form has
///    two or more member references;
///  - NonLinearInterrelated: otherwise.
/// A component whose sum-of-products form exceeds `product_cap` is reported
/// Unclassified with a CapExceeded diagnostic instead of failing.
SccReport analyze_structure(const FaultTree& tree, std::size_t product_cap = kDefaultProductCap);

}  // namespace ftloop
