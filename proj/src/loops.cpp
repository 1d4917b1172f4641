#include "ftloop/loops.hpp"

#include <algorithm>
#include <queue>

#include "ftloop/cutset.hpp"
#include "ftloop/error.hpp"

namespace ftloop {

bool DependencyGraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& succ = successors[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

DependencyGraph build_dependency_graph(const FaultTree& tree) {
  DependencyGraph graph;
  graph.nodes.reserve(tree.gate_count());
  graph.successors.reserve(tree.gate_count());
  for (std::size_t g = 0; g < tree.gate_count(); ++g) {
    graph.nodes.push_back(tree.gates()[g].id);
    graph.successors.push_back(tree.gate_refs(g));
  }
  return graph;
}

namespace {

// Iterative Tarjan; returns the component id of every node.
std::vector<std::size_t> tarjan(const DependencyGraph& graph, std::size_t& count) {
  const std::size_t n = graph.nodes.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // node, next successor
  std::size_t counter = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto& succ = graph.successors[v];
      if (next < succ.size()) {
        std::size_t w = succ[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const DependencyGraph& graph) {
  std::size_t count = 0;
  auto comp = tarjan(graph, count);

  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t v = 0; v < comp.size(); ++v) members[comp[v]].push_back(v);
  for (auto& m : members) {
    std::sort(m.begin(), m.end(),
              [&](std::size_t a, std::size_t b) { return graph.nodes[a] < graph.nodes[b]; });
  }

  // Kahn over the condensation: a component is ready once every component
  // it depends on has been emitted.
  std::vector<std::size_t> pending(count, 0);
  std::vector<std::vector<std::size_t>> dependents(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> deps;
    for (auto v : members[c]) {
      for (auto w : graph.successors[v]) {
        if (comp[w] != c) deps.push_back(comp[w]);
      }
    }
    std::sort(deps.begin(), deps.end());
    deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
    pending[c] = deps.size();
    for (auto d : deps) dependents[d].push_back(c);
  }

  auto later = [&](std::size_t a, std::size_t b) {
    return graph.nodes[members[a].front()] > graph.nodes[members[b].front()];
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t c = 0; c < count; ++c) {
    if (pending[c] == 0) ready.push(c);
  }
  std::vector<std::vector<std::size_t>> ordered;
  ordered.reserve(count);
  while (!ready.empty()) {
    auto c = ready.top();
    ready.pop();
    ordered.push_back(members[c]);
    for (auto d : dependents[c]) {
      if (--pending[d] == 0) ready.push(d);
    }
  }
  return ordered;
}

bool is_cyclic(const DependencyGraph& graph, const std::vector<std::size_t>& component) {
  if (component.size() > 1) return true;
  return !component.empty() && graph.has_edge(component.front(), component.front());
}

std::string_view to_string(LoopClass c) {
  switch (c) {
    case LoopClass::Acyclic: return "Acyclic";
    case LoopClass::Ordinary: return "Ordinary";
    case LoopClass::LinearInterrelated: return "LinearInterrelated";
    case LoopClass::NonLinearInterrelated: return "NonLinearInterrelated";
    case LoopClass::Unclassified: return "Unclassified";
  }
  return "Unknown";
}

namespace {

bool single_cycle(const DependencyGraph& graph, const std::vector<std::size_t>& component,
                  const std::vector<bool>& in_component) {
  std::vector<std::size_t> next(graph.nodes.size(), 0);
  for (auto v : component) {
    std::size_t inside = 0;
    for (auto w : graph.successors[v]) {
      if (in_component[w]) {
        ++inside;
        next[v] = w;
      }
    }
    if (inside != 1) return false;
  }
  // Out-degree one inside the component: walk from any member and require
  // a return after visiting every member.
  std::size_t start = component.front();
  std::size_t v = start;
  for (std::size_t steps = 1; steps <= component.size(); ++steps) {
    v = next[v];
    if (v == start) return steps == component.size();
  }
  return false;
}

LoopClass classify_products(const FaultTree& tree, const std::vector<std::size_t>& component,
                            const std::vector<bool>& in_component, std::size_t cap) {
  for (auto g : component) {
    Dnf dnf = to_dnf(tree, tree.expanded_body(g), cap);
    for (const auto& p : dnf.products()) {
      std::size_t refs = 0;
      for (auto l : p) {
        if (is_gate_literal(tree, l) && in_component[literal_gate(tree, l)]) ++refs;
      }
      if (refs >= 2) return LoopClass::NonLinearInterrelated;
    }
  }
  return LoopClass::LinearInterrelated;
}

}  // namespace

SccReport analyze_structure(const FaultTree& tree, std::size_t product_cap) {
  auto graph = build_dependency_graph(tree);
  SccReport report;
  for (auto& members : strongly_connected_components(graph)) {
    Component c;
    c.gates = members;
    for (auto g : members) c.members.push_back(graph.nodes[g]);

    if (!is_cyclic(graph, members)) {
      c.loop_class = LoopClass::Acyclic;
    } else {
      std::vector<bool> in_component(graph.nodes.size(), false);
      for (auto g : members) in_component[g] = true;
      if (single_cycle(graph, members, in_component)) {
        c.loop_class = LoopClass::Ordinary;
      } else {
        try {
          c.loop_class = classify_products(tree, members, in_component, product_cap);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::CapExceeded) throw;
          c.loop_class = LoopClass::Unclassified;
          c.diagnostic = e.what();
        }
      }
    }
    report.components.push_back(std::move(c));
  }
  return report;
}

}  // namespace ftloop
