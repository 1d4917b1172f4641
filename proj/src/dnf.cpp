#include "ftloop/dnf.hpp"

#include <algorithm>
#include <string>

#include "ftloop/error.hpp"

namespace ftloop {

namespace {

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap) {
    throw Error(ErrorCode::CapExceeded,
                std::to_string(count) + " products exceed the cap of " + std::to_string(cap));
  }
}

bool shorter_first(const Product& a, const Product& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

bool Dnf::contains_literal(Literal l) const {
  return std::any_of(products_.begin(), products_.end(), [l](const Product& p) {
    return std::binary_search(p.begin(), p.end(), l);
  });
}

Dnf normalize(Dnf dnf, std::size_t cap) {
  std::vector<Product> products = dnf.products();
  check_cap(products.size(), cap);
  for (auto& p : products) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  std::sort(products.begin(), products.end(), shorter_first);
  products.erase(std::unique(products.begin(), products.end()), products.end());

  // A product can only be absorbed by a strictly shorter one, all of which
  // precede it in this order.
  std::vector<Product> kept;
  kept.reserve(products.size());
  for (auto& p : products) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Product& q) {
      return q.size() < p.size() && std::includes(p.begin(), p.end(), q.begin(), q.end());
    });
    if (!absorbed) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end());
  return Dnf(std::move(kept));
}

Dnf disjoin(const Dnf& lhs, const Dnf& rhs, std::size_t cap) {
  std::vector<Product> all = lhs.products();
  all.insert(all.end(), rhs.products().begin(), rhs.products().end());
  return normalize(Dnf(std::move(all)), cap);
}

Dnf conjoin(const Dnf& lhs, const Dnf& rhs, std::size_t cap) {
  check_cap(lhs.size() * rhs.size(), cap);
  std::vector<Product> all;
  all.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.products()) {
    for (const auto& b : rhs.products()) {
      Product merged;
      merged.reserve(a.size() + b.size());
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
      all.push_back(std::move(merged));
    }
  }
  return normalize(Dnf(std::move(all)), cap);
}

Dnf substitute(const Dnf& dnf, Literal var, const Dnf& replacement, std::size_t cap) {
  std::vector<Product> out;
  for (const auto& p : dnf.products()) {
    auto it = std::lower_bound(p.begin(), p.end(), var);
    if (it == p.end() || *it != var) {
      out.push_back(p);
      continue;
    }
    Product rest(p.begin(), it);
    rest.insert(rest.end(), it + 1, p.end());
    for (const auto& r : replacement.products()) {
      Product merged;
      merged.reserve(rest.size() + r.size());
      std::set_union(rest.begin(), rest.end(), r.begin(), r.end(), std::back_inserter(merged));
      out.push_back(std::move(merged));
      check_cap(out.size(), cap);
    }
  }
  return normalize(Dnf(std::move(out)), cap);
}

Dnf eliminate_self(Literal x, const Dnf& dnf) {
  std::vector<Product> kept;
  for (const auto& p : dnf.products()) {
    if (std::find(p.begin(), p.end(), x) == p.end()) kept.push_back(p);
  }
  return Dnf(std::move(kept));
}

}  // namespace ftloop
