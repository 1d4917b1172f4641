#include "ftloop/cutset.hpp"

#include <algorithm>
#include <optional>

#include "ftloop/error.hpp"
#include "ftloop/loops.hpp"

namespace ftloop {

std::string literal_name(const FaultTree& tree, Literal l) {
  if (is_gate_literal(tree, l)) return tree.gates()[literal_gate(tree, l)].id;
  return tree.basics()[l].id;
}

Dnf to_dnf(const FaultTree& tree, const Expr& expr, std::size_t cap) {
  switch (expr.kind) {
    case Expr::Kind::Basic:
      return Dnf::literal(basic_literal(expr.index));
    case Expr::Kind::Gate:
      return Dnf::literal(gate_literal(tree, expr.index));
    case Expr::Kind::Or: {
      std::vector<Product> all;
      for (const auto& c : expr.children) {
        Dnf part = to_dnf(tree, c, cap);
        all.insert(all.end(), part.products().begin(), part.products().end());
        if (all.size() > cap) return normalize(Dnf(std::move(all)), cap);
      }
      return normalize(Dnf(std::move(all)), cap);
    }
    case Expr::Kind::And: {
      Dnf acc = Dnf::constant(true);
      for (const auto& c : expr.children) acc = conjoin(acc, to_dnf(tree, c, cap), cap);
      return acc;
    }
    case Expr::Kind::KooN:
      return to_dnf(tree, expand_koon(expr), cap);
    case Expr::Kind::Ref:
      break;
  }
  throw std::logic_error("to_dnf: unresolved reference " + expr.id);
}

bool evaluate(const FaultTree& tree, const Dnf& dnf, const Assignment& basics,
              const StateVector& gates) {
  return dnf.evaluate([&](Literal l) {
    return is_gate_literal(tree, l) ? gates[literal_gate(tree, l)] : basics[l];
  });
}

Dnf basic_part(const FaultTree& tree, const Dnf& dnf) {
  std::vector<Product> kept;
  for (const auto& p : dnf.products()) {
    bool basic_only = std::none_of(p.begin(), p.end(),
                                   [&](Literal l) { return is_gate_literal(tree, l); });
    if (basic_only) kept.push_back(p);
  }
  return Dnf(std::move(kept));
}

std::vector<std::size_t> reachable_basics(const FaultTree& tree, std::size_t gate) {
  std::vector<bool> seen_gate(tree.gate_count(), false);
  std::vector<bool> seen_basic(tree.basic_count(), false);
  std::vector<std::size_t> todo{gate};
  seen_gate[gate] = true;

  auto walk = [&](auto&& self, const Expr& e) -> void {
    if (e.kind == Expr::Kind::Basic) {
      seen_basic[e.index] = true;
    } else if (e.kind == Expr::Kind::Gate) {
      if (!seen_gate[e.index]) {
        seen_gate[e.index] = true;
        todo.push_back(e.index);
      }
    } else {
      for (const auto& c : e.children) self(self, c);
    }
  };
  while (!todo.empty()) {
    auto g = todo.back();
    todo.pop_back();
    walk(walk, tree.gates()[g].body);
  }
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < seen_basic.size(); ++b) {
    if (seen_basic[b]) out.push_back(b);
  }
  return out;
}

namespace {

/// Resolves gates to basic-only Dnfs, one strongly connected component at a
/// time, dependencies first.
class Resolver {
 public:
  Resolver(const FaultTree& tree, const CutSetOptions& options)
      : tree_(tree),
        options_(options),
        graph_(build_dependency_graph(tree)),
        components_(strongly_connected_components(graph_)),
        component_of_(tree.gate_count()),
        resolved_(tree.gate_count()) {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      for (auto g : components_[c]) component_of_[g] = c;
    }
  }

  const Dnf& resolve(std::size_t gate) {
    resolve_dependencies_of(component_of_[gate], /*include_self=*/true);
    return *resolved_[gate];
  }

  EquationSystem equations_for(std::size_t gate) {
    std::size_t c = component_of_[gate];
    resolve_dependencies_of(c, /*include_self=*/false);
    return build_system(c);
  }

 private:
  void resolve_dependencies_of(std::size_t target, bool include_self) {
    // Components only depend on earlier ones, so one backward sweep marks
    // everything `target` needs.
    std::vector<bool> needed(components_.size(), false);
    needed[target] = true;
    for (std::size_t c = target + 1; c-- > 0;) {
      if (!needed[c]) continue;
      for (auto g : components_[c]) {
        for (auto h : graph_.successors[g]) needed[component_of_[h]] = true;
      }
    }
    for (std::size_t c = 0; c <= target; ++c) {
      if (!needed[c] || (c == target && !include_self)) continue;
      if (!resolved_[components_[c].front()]) solve_component(c);
    }
  }

  EquationSystem build_system(std::size_t c) {
    EquationSystem system;
    system.members = components_[c];
    const std::size_t cap = options_.product_cap;
    for (auto g : system.members) {
      Dnf body = to_dnf(tree_, tree_.expanded_body(g), cap);
      std::vector<Product> out;
      for (const auto& p : body.products()) {
        Dnf acc = Dnf::constant(true);
        Product kept;
        for (auto l : p) {
          if (is_gate_literal(tree_, l) && component_of_[literal_gate(tree_, l)] != c) {
            acc = conjoin(acc, *resolved_[literal_gate(tree_, l)], cap);
          } else {
            kept.push_back(l);
          }
        }
        acc = conjoin(acc, Dnf({kept}), cap);
        out.insert(out.end(), acc.products().begin(), acc.products().end());
        if (out.size() > cap) out = normalize(Dnf(std::move(out)), cap).products();
      }
      system.equations.emplace(g, normalize(Dnf(std::move(out)), cap));
    }
    return system;
  }

  std::vector<std::size_t> elimination_order(std::vector<std::size_t> members) const {
    const auto& order = options_.elimination_order;
    auto rank = [&](std::size_t g) {
      auto it = std::find(order.begin(), order.end(), tree_.gates()[g].id);
      return static_cast<std::size_t>(it - order.begin());
    };
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      auto ra = rank(a), rb = rank(b);
      if (ra != rb) return ra < rb;
      return tree_.gates()[a].id < tree_.gates()[b].id;
    });
    return members;
  }

  void solve_component(std::size_t c) {
    const std::size_t cap = options_.product_cap;
    EquationSystem system = build_system(c);
    auto order = elimination_order(system.members);

    // Forward pass: each eliminated gate ends up expressed over basics and
    // the members eliminated after it.
    std::map<std::size_t, Dnf> solved;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t x = order[i];
      Literal lx = gate_literal(tree_, x);
      Dnf dx = eliminate_self(lx, system.equations.at(x));
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        auto& eq = system.equations.at(order[j]);
        if (eq.contains_literal(lx)) eq = substitute(eq, lx, dx, cap);
      }
      solved.emplace(x, std::move(dx));
    }
    // Backward pass.
    for (std::size_t i = order.size(); i-- > 0;) {
      std::size_t x = order[i];
      Dnf dx = std::move(solved.at(x));
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        Literal lz = gate_literal(tree_, order[j]);
        if (dx.contains_literal(lz)) dx = substitute(dx, lz, *resolved_[order[j]], cap);
      }
      resolved_[x] = std::move(dx);
    }
  }

  const FaultTree& tree_;
  const CutSetOptions& options_;
  DependencyGraph graph_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
  std::vector<std::optional<Dnf>> resolved_;
};

}  // namespace

EquationSystem equation_system(const FaultTree& tree, std::string_view gate,
                               const CutSetOptions& options) {
  std::size_t g = tree.require_gate(gate);
  return Resolver(tree, options).equations_for(g);
}

Dnf minimal_cut_sets(const FaultTree& tree, std::string_view top, const CutSetOptions& options) {
  std::size_t g = tree.require_gate(top);
  std::string repairable;
  for (auto b : reachable_basics(tree, g)) {
    if (tree.basics()[b].kind == EventKind::Repairable) {
      if (!repairable.empty()) repairable += ",";
      repairable += tree.basics()[b].id;
    }
  }
  if (!repairable.empty()) {
    throw Error(ErrorCode::RepairableUnsupported, repairable, repairable);
  }
  return Resolver(tree, options).resolve(g);
}

std::vector<std::vector<std::string>> cut_set_names(const FaultTree& tree, const Dnf& dnf) {
  std::vector<std::vector<std::string>> out;
  out.reserve(dnf.size());
  for (const auto& p : dnf.products()) {
    std::vector<std::string> names;
    names.reserve(p.size());
    for (auto l : p) names.push_back(literal_name(tree, l));
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace ftloop
