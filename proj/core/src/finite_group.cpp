#include "knotgrp/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotgrp/error.hpp"

namespace knotgrp {

FiniteGroupTable::FiniteGroupTable(std::string name, std::size_t order,
                                   std::vector<Element> table)
    : name_(std::move(name)), order_(order), mul_(std::move(table)) {
  if (order_ == 0 || mul_.size() != order_ * order_) {
    throw ValidationError("group table '" + name_ + "' has wrong shape");
  }
  for (Element v : mul_) {
    if (v >= order_) {
      throw ValidationError("group table '" + name_ + "' is not closed");
    }
  }
  for (Element x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      throw ValidationError("element 0 of '" + name_ + "' is not an identity");
    }
  }
  inv_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    Element found = static_cast<Element>(order_);
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        found = y;
        break;
      }
    }
    if (found == order_ || mul(found, x) != 0) {
      throw ValidationError("element " + std::to_string(x) + " of '" + name_ +
                            "' has no two-sided inverse");
    }
    inv_[x] = found;
  }
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      Element xy = mul(x, y);
      for (Element z = 0; z < order_; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          throw ValidationError("group table '" + name_ + "' is not associative");
        }
      }
    }
  }
  orders_.assign(order_, 1);
  for (Element x = 0; x < order_; ++x) {
    for (Element y = x; y != 0; y = mul(y, x)) ++orders_[x];
  }
}

FiniteGroupTable FiniteGroupTable::from_permutations(
    std::string name, const std::vector<Permutation>& generators) {
  if (generators.empty()) {
    throw ValidationError("permutation group needs at least one generator");
  }
  const std::size_t degree = generators.front().size();
  auto compose = [](const Permutation& p, const Permutation& q) {
    // Apply p first, then q.
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::map<Permutation, bool> seen{{id, true}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      if (g.size() != degree) {
        throw ValidationError("permutation generators of mixed degree");
      }
      Permutation next = compose(elems[i], g);
      if (seen.emplace(next, true).second) elems.push_back(std::move(next));
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = static_cast<Element>(i);
  }
  const std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = index.at(compose(elems[i], elems[j]));
    }
  }
  FiniteGroupTable table(std::move(name), n, std::move(mul));
  table.perms_ = std::move(elems);
  return table;
}

Element FiniteGroupTable::pow(Element x, Exponent k) const {
  Element base = k < 0 ? inv(x) : x;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  // Exponents only matter modulo the element order.
  n %= element_order(base);
  Element result = identity();
  while (n != 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n != 0) base = mul(base, base);
  }
  return result;
}

namespace {

FiniteGroupTable cyclic(std::size_t n) {
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = static_cast<Element>((i + j) % n);
    }
  }
  return FiniteGroupTable("Z" + std::to_string(n), n, std::move(mul));
}

Permutation cycle(std::size_t degree, std::vector<std::uint32_t> points) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = 0; i < points.size(); ++i) {
    p[points[i]] = points[(i + 1) % points.size()];
  }
  return p;
}

}  // namespace

FiniteGroupTable builtin_table(std::string_view name) {
  if (name.size() >= 2 && name[0] == 'Z') {
    std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 2) {
      int n = std::stoi(digits);
      if (n >= 2 && n <= 12 && std::to_string(n) == digits) {
        return cyclic(static_cast<std::size_t>(n));
      }
    }
  }
  if (name == "S3") {
    return FiniteGroupTable::from_permutations(
        "S3", {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  }
  if (name == "S4") {
    return FiniteGroupTable::from_permutations(
        "S4", {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  }
  if (name == "S5") {
    return FiniteGroupTable::from_permutations(
        "S5", {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})});
  }
  if (name == "D4") {
    // Symmetries of a square: rotation and a reflection.
    return FiniteGroupTable::from_permutations(
        "D4", {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})});
  }
  if (name == "A4") {
    return FiniteGroupTable::from_permutations(
        "A4", {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  }
  if (name == "A5") {
    return FiniteGroupTable::from_permutations(
        "A5", {cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})});
  }
  throw DomainError("unknown group table '" + std::string(name) + "'");
}

std::vector<std::string> builtin_table_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
  for (const char* s : {"S3", "S4", "S5", "D4", "A4", "A5"}) names.emplace_back(s);
  return names;
}

}  // namespace knotgrp
