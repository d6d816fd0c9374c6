#pragma once

// Computable isomorphism invariants of finitely presented groups.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotgrp/finite_group.hpp"
#include "knotgrp/presentation.hpp"

namespace knotgrp {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += k * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const BigInt& k);
  // col_i += k * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const BigInt& k);
  void negate_row(std::size_t i);

  bool is_diagonal() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
// Exact determinant by fraction-free (Bareiss) elimination. Square only.
BigInt determinant(const IntMatrix& a);
std::string format_matrix(const IntMatrix& a);

// One row per relator, one column per generator (alphabet order); entries
// are exponent sums.
IntMatrix relation_matrix(const Presentation& p);

struct SmithForm {
  IntMatrix diagonal;  // D = U A V
  IntMatrix left;      // U, rows x rows, unimodular
  IntMatrix right;     // V, cols x cols, unimodular
};

// Deterministic: the pivot is a nonzero entry of least absolute value in
// the remaining block, ties broken row-major. Diagonal entries are
// nonnegative with d1 | d2 | ...
SmithForm smith_normal_form(const IntMatrix& a);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors >= 2, d_i | d_{i+1}

  // Order of the torsion part, or 0 when free_rank > 0.
  BigInt order() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);
// `Z^r x Z/d1 x ...`; the trivial group prints as `0`.
std::string format_abelian(const AbelianInvariants& inv);

inline constexpr std::uint64_t kDefaultHomBudget = 100'000'000;

// Number of homomorphisms from <X | R> into the table group, counted by
// brute force over all |T|^|X| assignments. Throws BudgetError when that
// count exceeds max_evaluations.
std::uint64_t hom_count(const Presentation& p, const FiniteGroupTable& target,
                        std::uint64_t max_evaluations = kDefaultHomBudget);

struct InvariantProfile {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, std::uint64_t>> hom_counts;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const Presentation& p,
                                   const std::vector<std::string>& targets,
                                   std::uint64_t max_evaluations = kDefaultHomBudget);

// Human format: a header noting that equal profiles are necessary but not
// sufficient for isomorphism, then `abelian: ...` and `hom <T>: <count>`.
std::string format_profile(const InvariantProfile& profile);
// Flat key<TAB>value lines.
std::string format_profile_kv(const InvariantProfile& profile);

}  // namespace knotgrp
