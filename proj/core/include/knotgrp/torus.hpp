#pragma once

// Structure of the torus-knot groups G(m,n) = <a, b | a^m = b^n> and of
// their central quotients Z_m * Z_n.
//
// Words are over the two-letter alphabet returned by torus_alphabet():
// generator id 0 is `a`, id 1 is `b`. Any other id is rejected.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotgrp/words.hpp"

namespace knotgrp {

const Alphabet& torus_alphabet();

enum class Letter : std::uint8_t { a = 0, b = 1 };

struct FactorSyllable {
  Letter letter = Letter::a;
  Exponent exp = 0;

  friend bool operator==(const FactorSyllable&, const FactorSyllable&) = default;
  friend auto operator<=>(const FactorSyllable&, const FactorSyllable&) = default;
};

// Orders of the two cyclic factors, m, n >= 1.
class FactorOrders {
 public:
  FactorOrders(Exponent m, Exponent n);

  Exponent m() const noexcept { return m_; }
  Exponent n() const noexcept { return n_; }
  Exponent order(Letter l) const noexcept { return l == Letter::a ? m_ : n_; }

 private:
  Exponent m_;
  Exponent n_;
};

// Parameters of a torus knot: m, n >= 1 with gcd(m, n) = 1.
class TorusParams : public FactorOrders {
 public:
  TorusParams(Exponent m, Exponent n);
};

// Alternating syllables with exponents in [1, m-1] for a, [1, n-1] for b.
struct FreeProductNormalForm {
  std::vector<FactorSyllable> syllables;

  bool is_identity() const noexcept { return syllables.empty(); }
  friend bool operator==(const FreeProductNormalForm&,
                         const FreeProductNormalForm&) = default;
  friend auto operator<=>(const FreeProductNormalForm&,
                          const FreeProductNormalForm&) = default;
};

// c^central * syllables, where c = a^m = b^n is central.
struct TorusNormalForm {
  Exponent central = 0;
  std::vector<FactorSyllable> syllables;

  bool is_identity() const noexcept { return central == 0 && syllables.empty(); }
  friend bool operator==(const TorusNormalForm&, const TorusNormalForm&) = default;
};

TorusNormalForm torus_normal_form(const TorusParams& p, const Word& w);
bool words_equal_in_torus_group(const TorusParams& p, const Word& u, const Word& v);
// Membership in <c>; by the structure theory this is the center when
// m, n >= 2, and the whole (abelian) group when m = 1 or n = 1.
bool is_central(const TorusParams& p, const Word& w);

FreeProductNormalForm free_product_normal_form(const FactorOrders& p, const Word& w);

Word to_word(const FreeProductNormalForm& nf);
// c is written as a^m.
Word to_word(const TorusParams& p, const TorusNormalForm& nf);

// Conjugation-aware cyclic reduction of a free-product normal form: strips
// same-letter ends until the first and last letters differ or at most one
// syllable remains.
FreeProductNormalForm free_product_cyclic_core(const FactorOrders& p,
                                               const FreeProductNormalForm& nf);

class ElementOrder {
 public:
  static ElementOrder finite(std::uint64_t k) { return ElementOrder(k); }
  static ElementOrder infinite() { return ElementOrder(std::nullopt); }

  bool is_finite() const noexcept { return value_.has_value(); }
  // Precondition: is_finite().
  std::uint64_t value() const { return *value_; }
  std::string to_string() const;

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;

 private:
  explicit ElementOrder(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

ElementOrder order_in_free_product(const FactorOrders& p, const Word& w);

// Every normal form of syllable length 1..max_length (identity excluded),
// in a fixed order: by length, then first letter a before b, then
// exponents lexicographically.
std::vector<FreeProductNormalForm> enumerate_free_product_words(
    const FactorOrders& p, std::size_t max_length);

// Largest finite order among nonidentity elements of syllable length at
// most max_length. Requires m, n >= 2 and max_length >= 1.
std::uint64_t max_torsion_order(const FactorOrders& p, std::size_t max_length);

// `c^t · a b^2`; identity prints as `e`.
std::string format_normal_form(const TorusNormalForm& nf);
std::string format_normal_form(const FreeProductNormalForm& nf);

}  // namespace knotgrp
