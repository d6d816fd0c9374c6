#pragma once

// Finitely presented groups <X | R> and Tietze transformations.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "knotgrp/finite_group.hpp"
#include "knotgrp/words.hpp"

namespace knotgrp {

class Presentation {
 public:
  Presentation() = default;
  // Drops empty relators. Throws ValidationError if a relator mentions a
  // generator outside the alphabet.
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Word> relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return alphabet_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  // Sum of relator letter lengths.
  std::uint64_t total_length() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

// <a, b | a^m b^-n>. Requires m, n >= 1 and gcd(m, n) = 1; throws
// DomainError otherwise.
Presentation torus_presentation(long long m, long long n);
// <a, b | a^m, b^n>, the free product Z_m * Z_n.
Presentation free_product_presentation(long long m, long long n);

// Text format:
//   gens: a b c
//   rel: <word> [= <word>]
// Blank lines and `#` comments are ignored. A relation u = v is stored as
// the reduced relator u v^-1.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

// One factor conj * r_index^sign * conj^-1 of a consequence.
struct DerivationStep {
  std::size_t relator = 0;
  Word conjugator;
  int sign = 1;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

using Derivation = std::vector<DerivationStep>;

// Adds a relator equal in the free group to the product of its derivation.
struct AddRelation {
  static constexpr std::size_t kAppend = std::numeric_limits<std::size_t>::max();

  Word relator;
  Derivation derivation;
  std::size_t position = kAppend;

  friend bool operator==(const AddRelation&, const AddRelation&) = default;
};

// Removes relator `index`, which must equal the product of its derivation
// over the remaining relators.
struct RemoveRelation {
  std::size_t index = 0;
  Derivation derivation;

  friend bool operator==(const RemoveRelation&, const RemoveRelation&) = default;
};

// Adds generator g and relator g * definition^-1.
struct AddGenerator {
  std::string name;
  Word definition;

  friend bool operator==(const AddGenerator&, const AddGenerator&) = default;
};

// Eliminates a generator using a relator in which it occurs exactly once,
// as a single syllable of exponent +-1. The relator is removed and the
// solved expression substituted everywhere else; relators that become empty
// are dropped.
struct RemoveGenerator {
  std::string name;
  std::size_t relator = 0;

  friend bool operator==(const RemoveGenerator&, const RemoveGenerator&) = default;
};

using TietzeMove =
    std::variant<AddRelation, RemoveRelation, AddGenerator, RemoveGenerator>;
using TietzeScript = std::vector<TietzeMove>;

// Evaluates conj_1 r_1^s_1 conj_1^-1 ... in the free group.
Word evaluate_derivation(const Presentation& p, const Derivation& d);

// Throws DomainError naming the failing move index.
Presentation apply_tietze(const Presentation& p, const TietzeMove& move);
Presentation apply_tietze(Presentation p, std::span<const TietzeMove> script);

// One line per move, words printed in the alphabet current at that move.
std::vector<std::string> format_script(const Presentation& start,
                                       std::span<const TietzeMove> script);

struct SimplifyResult {
  Presentation presentation;
  TietzeScript script;
};

// Deterministic simplification: cyclically reduce relators, drop duplicates
// up to rotation and inversion, and eliminate generators that occur exactly
// once with exponent +-1 in some relator (shortest relator first, then
// lowest generator id, then lowest relator index). Repeats to a fixed point.
SimplifyResult auto_simplify(const Presentation& p);

// Canonical representative of a relator up to cyclic rotation and inversion.
Word cyclic_canonical(const Word& w);

// Image of w under the homomorphism sending the i-th alphabet generator to
// assignment[i].
Element evaluate_word(const Presentation& p, const Word& w,
                      std::span<const Element> assignment,
                      const FiniteGroupTable& table);

}  // namespace knotgrp
