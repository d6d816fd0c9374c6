#pragma once

// Finite groups given by explicit multiplication tables. Element 0 is the
// identity.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotgrp/words.hpp"

namespace knotgrp {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

class FiniteGroupTable {
 public:
  // `mul` is row-major order x order. Validates closure, identity at index
  // 0, inverses and associativity; throws ValidationError.
  FiniteGroupTable(std::string name, std::size_t order,
                   std::vector<Element> table);

  // Closure of the generators under composition. Elements are sorted
  // lexicographically, so the identity permutation lands at index 0.
  static FiniteGroupTable from_permutations(
      std::string name, const std::vector<Permutation>& generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element x, Element y) const { return mul_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  // x^k for any integer k, by repeated squaring.
  Element pow(Element x, Exponent k) const;
  std::uint64_t element_order(Element x) const { return orders_[x]; }

  // Element i as a permutation, for tables built from permutations; empty
  // otherwise.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<Permutation> perms_;
};

// Z2..Z12, S3, S4, S5, D4, A4, A5. Throws DomainError on unknown names.
FiniteGroupTable builtin_table(std::string_view name);
std::vector<std::string> builtin_table_names();

}  // namespace knotgrp
