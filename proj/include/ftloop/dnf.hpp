#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ftloop {

inline constexpr std::size_t kDefaultProductCap = 100000;

/// Positive literal. Within a tree, basic event i is literal i and gate j is
/// literal basic_count() + j (see LiteralSpace).
using Literal = std::uint32_t;

/// Conjunction of positive literals; sorted and duplicate-free. The empty
/// product is the constant TRUE.
using Product = std::vector<Literal>;

/// Negation-free sum of products. Invariant after normalize(): products are
/// sorted, unique, and none is a superset of another. No products means
/// constant FALSE; a single empty product means constant TRUE.
class Dnf {
 public:
  Dnf() = default;
  explicit Dnf(std::vector<Product> products) : products_(std::move(products)) {}
  Dnf(std::initializer_list<Product> products) : products_(products) {}

  static Dnf constant(bool value) { return value ? Dnf({Product{}}) : Dnf(); }
  static Dnf literal(Literal l) { return Dnf({Product{l}}); }

  const std::vector<Product>& products() const { return products_; }
  std::size_t size() const { return products_.size(); }
  bool empty() const { return products_.empty(); }
  bool is_false() const { return products_.empty(); }
  bool is_true() const { return products_.size() == 1 && products_.front().empty(); }

  bool contains_literal(Literal l) const;

  template <class Pred>
  bool evaluate(Pred&& literal_true) const {
    for (const auto& p : products_) {
      bool all = true;
      for (auto l : p) {
        if (!literal_true(l)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  friend bool operator==(const Dnf&, const Dnf&) = default;

 private:
  std::vector<Product> products_;
};

/// Applies idempotence (per product and across products) and absorption
/// until no product contains another. Throws CapExceeded when the input or
/// result has more than `cap` products.
Dnf normalize(Dnf dnf, std::size_t cap = kDefaultProductCap);

Dnf disjoin(const Dnf& lhs, const Dnf& rhs, std::size_t cap = kDefaultProductCap);
Dnf conjoin(const Dnf& lhs, const Dnf& rhs, std::size_t cap = kDefaultProductCap);

/// Replaces literal `var` by `replacement` and renormalizes.
Dnf substitute(const Dnf& dnf, Literal var, const Dnf& replacement,
               std::size_t cap = kDefaultProductCap);

/// Least solution of X = A | (B & X) for X's defining sum of products: drops
/// every product that mentions X, leaving A.
Dnf eliminate_self(Literal x, const Dnf& dnf);

}  // namespace ftloop
