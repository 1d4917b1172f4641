#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ftloop {

enum class EventKind { NonRepairable, Repairable };

struct BasicEventDef {
  std::string id;
  EventKind kind = EventKind::NonRepairable;
  // Absent means "not given"; quantification refuses to guess.
  std::optional<double> prob;

  bool operator==(const BasicEventDef&) const = default;
};

/// Negation-free gate expression. There is deliberately no NOT node.
///
/// Leaves built by hand or by the parser may use `Kind::Ref`; build_tree()
/// resolves every leaf name to `Basic` or `Gate` and fills in `index`.
struct Expr {
  enum class Kind : std::uint8_t { Ref, Basic, Gate, Or, And, KooN };

  Kind kind = Kind::Ref;
  std::string id;              // leaves only
  int k = 0;                   // KooN threshold
  std::vector<Expr> children;  // Or / And operands, KooN inputs (leaves)
  std::size_t index = 0;       // basic or gate index after resolution

  static Expr ref(std::string id);
  static Expr basic(std::string id);
  static Expr gate(std::string id);
  static Expr any_of(std::vector<Expr> children);
  static Expr all_of(std::vector<Expr> children);
  static Expr koon(int k, std::vector<std::string> inputs);

  bool is_leaf() const { return kind == Kind::Ref || kind == Kind::Basic || kind == Kind::Gate; }

  // Structural equality; `index` is derived data and not compared.
  friend bool operator==(const Expr& lhs, const Expr& rhs);
};

struct GateDef {
  std::string id;
  Expr body;

  friend bool operator==(const GateDef&, const GateDef&) = default;
};

/// Fixed-size Boolean vector tagged by what it indexes, so an assignment of
/// basic events cannot be passed where a gate state is expected.
template <class Tag>
class BoolVector {
 public:
  BoolVector() = default;
  explicit BoolVector(std::size_t size, bool value = false) : bits_(size, value) {}
  explicit BoolVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value; }
  const std::vector<bool>& bits() const { return bits_; }

  // Pointwise order (FALSE < TRUE in every component).
  bool leq(const BoolVector& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const BoolVector&, const BoolVector&) = default;
  friend auto operator<=>(const BoolVector& lhs, const BoolVector& rhs) {
    return lhs.bits_ <=> rhs.bits_;
  }

 private:
  std::vector<bool> bits_;
};

struct BasicTag {};
struct GateTag {};

/// Valuation of basic events, indexed by declaration order.
using Assignment = BoolVector<BasicTag>;
/// Valuation of gates, indexed by declaration order.
using StateVector = BoolVector<GateTag>;

/// A validated fault tree. Immutable after construction; gates may form
/// arbitrary cycles.
class FaultTree {
 public:
  const std::vector<BasicEventDef>& basics() const { return basics_; }
  const std::vector<GateDef>& gates() const { return gates_; }
  const std::vector<std::string>& tops() const { return tops_; }

  std::size_t basic_count() const { return basics_.size(); }
  std::size_t gate_count() const { return gates_.size(); }

  std::optional<std::size_t> basic_index(std::string_view id) const;
  std::optional<std::size_t> gate_index(std::string_view id) const;
  // Throws UnknownGate.
  std::size_t require_gate(std::string_view id) const;

  /// Gate body with every KooN node replaced by its AND/OR expansion.
  const Expr& expanded_body(std::size_t gate) const { return expanded_[gate]; }

  /// Indices of gates referenced by `gate`'s body, sorted, no duplicates.
  const std::vector<std::size_t>& gate_refs(std::size_t gate) const { return gate_refs_[gate]; }

  Assignment assignment(const std::map<std::string, bool>& values) const;
  std::map<std::string, bool> to_map(const Assignment& a) const;
  StateVector state(const std::map<std::string, bool>& values) const;
  std::map<std::string, bool> to_map(const StateVector& s) const;

  friend bool operator==(const FaultTree& lhs, const FaultTree& rhs) {
    return lhs.basics_ == rhs.basics_ && lhs.gates_ == rhs.gates_ && lhs.tops_ == rhs.tops_;
  }

 private:
  friend FaultTree build_tree(std::vector<BasicEventDef>, std::vector<GateDef>,
                              std::vector<std::string>);

  std::vector<BasicEventDef> basics_;
  std::vector<GateDef> gates_;
  std::vector<std::string> tops_;
  std::vector<Expr> expanded_;
  std::vector<std::vector<std::size_t>> gate_refs_;
  std::unordered_map<std::string, std::size_t> basic_by_id_;
  std::unordered_map<std::string, std::size_t> gate_by_id_;
};

/// Validates and resolves a model. Single-child AND/OR nodes are collapsed
/// into their child. Throws Error with DuplicateId, UnresolvedReference,
/// EmptyTops, BadKooN or BadProbability.
FaultTree build_tree(std::vector<BasicEventDef> basics, std::vector<GateDef> gates,
                     std::vector<std::string> tops);

/// Replaces every KooN node with an OR over all k-element AND terms of its
/// inputs, in lexicographic order of input positions. 1-of-n becomes a plain
/// OR and n-of-n a plain AND. Idempotent.
Expr expand_koon(const Expr& expr);

/// Truth value of an expression. KooN nodes are evaluated as thresholds.
bool evaluate(const Expr& expr, const Assignment& basics, const StateVector& gates);

}  // namespace ftloop
