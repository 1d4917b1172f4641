#include "ftloop/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ftloop/error.hpp"

namespace ftloop {

Expr Expr::ref(std::string id) {
  Expr e;
  e.kind = Kind::Ref;
  e.id = std::move(id);
  return e;
}

Expr Expr::basic(std::string id) {
  Expr e = ref(std::move(id));
  e.kind = Kind::Basic;
  return e;
}

Expr Expr::gate(std::string id) {
  Expr e = ref(std::move(id));
  e.kind = Kind::Gate;
  return e;
}

Expr Expr::any_of(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::Or;
  e.children = std::move(children);
  return e;
}

Expr Expr::all_of(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::And;
  e.children = std::move(children);
  return e;
}

Expr Expr::koon(int k, std::vector<std::string> inputs) {
  Expr e;
  e.kind = Kind::KooN;
  e.k = k;
  for (auto& id : inputs) e.children.push_back(ref(std::move(id)));
  return e;
}

bool operator==(const Expr& lhs, const Expr& rhs) {
  if (lhs.is_leaf() != rhs.is_leaf()) return false;
  if (lhs.is_leaf()) {
    // Ref compares equal to a resolved leaf of the same name.
    bool kinds_match = lhs.kind == rhs.kind || lhs.kind == Expr::Kind::Ref ||
                       rhs.kind == Expr::Kind::Ref;
    return kinds_match && lhs.id == rhs.id;
  }
  return lhs.kind == rhs.kind && lhs.k == rhs.k && lhs.children == rhs.children;
}

std::optional<std::size_t> FaultTree::basic_index(std::string_view id) const {
  auto it = basic_by_id_.find(std::string(id));
  if (it == basic_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FaultTree::gate_index(std::string_view id) const {
  auto it = gate_by_id_.find(std::string(id));
  if (it == gate_by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t FaultTree::require_gate(std::string_view id) const {
  auto index = gate_index(id);
  if (!index) {
    throw Error(ErrorCode::UnknownGate, "no gate named " + std::string(id), std::string(id));
  }
  return *index;
}

Assignment FaultTree::assignment(const std::map<std::string, bool>& values) const {
  Assignment a(basics_.size());
  std::vector<bool> seen(basics_.size(), false);
  for (const auto& [id, value] : values) {
    auto index = basic_index(id);
    if (!index) throw Error(ErrorCode::UnknownBasic, "no basic event named " + id, id);
    a.set(*index, value);
    seen[*index] = true;
  }
  for (std::size_t i = 0; i < basics_.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::BadAssignment, "missing value for basic event " + basics_[i].id,
                  basics_[i].id);
    }
  }
  return a;
}

std::map<std::string, bool> FaultTree::to_map(const Assignment& a) const {
  std::map<std::string, bool> out;
  for (std::size_t i = 0; i < basics_.size(); ++i) out[basics_[i].id] = a[i];
  return out;
}

StateVector FaultTree::state(const std::map<std::string, bool>& values) const {
  StateVector s(gates_.size());
  std::vector<bool> seen(gates_.size(), false);
  for (const auto& [id, value] : values) {
    std::size_t index = require_gate(id);
    s.set(index, value);
    seen[index] = true;
  }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::BadAssignment, "missing value for gate " + gates_[i].id,
                  gates_[i].id);
    }
  }
  return s;
}

std::map<std::string, bool> FaultTree::to_map(const StateVector& s) const {
  std::map<std::string, bool> out;
  for (std::size_t i = 0; i < gates_.size(); ++i) out[gates_[i].id] = s[i];
  return out;
}

namespace {

void check_koon(const Expr& expr, const std::string& gate) {
  if (expr.kind == Expr::Kind::KooN) {
    auto n = static_cast<int>(expr.children.size());
    if (expr.k < 1 || n < 1 || expr.k > n) {
      throw Error(ErrorCode::BadKooN,
                  "gate " + gate + ": koon(" + std::to_string(expr.k) + ") over " +
                      std::to_string(n) + " inputs",
                  gate);
    }
    for (const auto& child : expr.children) {
      if (!child.is_leaf()) {
        throw Error(ErrorCode::BadKooN, "gate " + gate + ": koon inputs must be identifiers",
                    gate);
      }
    }
  }
  if ((expr.kind == Expr::Kind::Or || expr.kind == Expr::Kind::And) && expr.children.empty()) {
    throw Error(ErrorCode::UnresolvedReference, "gate " + gate + ": empty operand list", gate);
  }
  for (const auto& child : expr.children) check_koon(child, gate);
}

Expr collapse(Expr expr) {
  for (auto& child : expr.children) child = collapse(std::move(child));
  if ((expr.kind == Expr::Kind::Or || expr.kind == Expr::Kind::And) &&
      expr.children.size() == 1) {
    return std::move(expr.children.front());
  }
  return expr;
}

void collect_gate_refs(const Expr& expr, std::set<std::size_t>& out) {
  if (expr.kind == Expr::Kind::Gate) out.insert(expr.index);
  for (const auto& child : expr.children) collect_gate_refs(child, out);
}

}  // namespace

FaultTree build_tree(std::vector<BasicEventDef> basics, std::vector<GateDef> gates,
                     std::vector<std::string> tops) {
  FaultTree tree;
  for (std::size_t i = 0; i < basics.size(); ++i) {
    const auto& b = basics[i];
    if (b.id.empty()) throw Error(ErrorCode::DuplicateId, "empty basic event id");
    if (!tree.basic_by_id_.emplace(b.id, i).second) {
      throw Error(ErrorCode::DuplicateId, "basic event " + b.id + " declared twice", b.id);
    }
    if (b.prob && !(*b.prob >= 0.0 && *b.prob <= 1.0)) {
      throw Error(ErrorCode::BadProbability,
                  "basic event " + b.id + " has probability outside [0,1]", b.id);
    }
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    if (g.id.empty()) throw Error(ErrorCode::DuplicateId, "empty gate id");
    if (tree.basic_by_id_.count(g.id) != 0 || !tree.gate_by_id_.emplace(g.id, i).second) {
      throw Error(ErrorCode::DuplicateId, "identifier " + g.id + " declared twice", g.id);
    }
  }

  std::function<void(Expr&, const std::string&)> resolve = [&](Expr& e, const std::string& gate) {
    if (e.is_leaf()) {
      if (auto b = tree.basic_by_id_.find(e.id); b != tree.basic_by_id_.end()) {
        e.kind = Expr::Kind::Basic;
        e.index = b->second;
      } else if (auto g = tree.gate_by_id_.find(e.id); g != tree.gate_by_id_.end()) {
        e.kind = Expr::Kind::Gate;
        e.index = g->second;
      } else {
        throw Error(ErrorCode::UnresolvedReference,
                    "gate " + gate + " references undeclared " + e.id, e.id);
      }
      return;
    }
    for (auto& child : e.children) resolve(child, gate);
  };

  for (auto& g : gates) {
    check_koon(g.body, g.id);
    resolve(g.body, g.id);
    g.body = collapse(std::move(g.body));
  }

  if (tops.empty()) throw Error(ErrorCode::EmptyTops, "no top gate declared");
  std::vector<std::string> unique_tops;
  for (auto& t : tops) {
    if (tree.gate_by_id_.count(t) == 0) {
      throw Error(ErrorCode::UnresolvedReference, "top " + t + " is not a gate", t);
    }
    if (std::find(unique_tops.begin(), unique_tops.end(), t) == unique_tops.end()) {
      unique_tops.push_back(std::move(t));
    }
  }

  tree.basics_ = std::move(basics);
  tree.gates_ = std::move(gates);
  tree.tops_ = std::move(unique_tops);
  tree.expanded_.reserve(tree.gates_.size());
  tree.gate_refs_.reserve(tree.gates_.size());
  for (const auto& g : tree.gates_) {
    tree.expanded_.push_back(expand_koon(g.body));
    std::set<std::size_t> refs;
    collect_gate_refs(g.body, refs);
    tree.gate_refs_.emplace_back(refs.begin(), refs.end());
  }
  return tree;
}

Expr expand_koon(const Expr& expr) {
  if (expr.is_leaf()) return expr;
  if (expr.kind != Expr::Kind::KooN) {
    Expr out = expr;
    for (auto& child : out.children) child = expand_koon(child);
    return out;
  }

  const auto& inputs = expr.children;
  const auto n = inputs.size();
  const auto k = static_cast<std::size_t>(expr.k);
  if (k == 1) {
    if (n == 1) return inputs.front();
    return Expr::any_of(inputs);
  }
  if (k == n) return Expr::all_of(inputs);

  // Enumerate k-subsets of input positions in lexicographic order.
  std::vector<Expr> terms;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<Expr> factors;
    factors.reserve(k);
    for (auto p : pick) factors.push_back(inputs[p]);
    terms.push_back(Expr::all_of(std::move(factors)));

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Expr::any_of(std::move(terms));
}

bool evaluate(const Expr& expr, const Assignment& basics, const StateVector& gates) {
  switch (expr.kind) {
    case Expr::Kind::Basic:
      return basics[expr.index];
    case Expr::Kind::Gate:
      return gates[expr.index];
    case Expr::Kind::Or:
      return std::any_of(expr.children.begin(), expr.children.end(),
                         [&](const Expr& c) { return evaluate(c, basics, gates); });
    case Expr::Kind::And:
      return std::all_of(expr.children.begin(), expr.children.end(),
                         [&](const Expr& c) { return evaluate(c, basics, gates); });
    case Expr::Kind::KooN: {
      int count = 0;
      for (const auto& c : expr.children) count += evaluate(c, basics, gates) ? 1 : 0;
      return count >= expr.k;
    }
    case Expr::Kind::Ref:
      break;
  }
  throw std::logic_error("evaluate: unresolved reference " + expr.id);
}

}  // namespace ftloop
