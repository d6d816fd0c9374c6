#pragma once

// Words in free groups, stored as freely reduced syllable sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotgrp {

using GenId = std::uint32_t;
using Exponent = std::int64_t;

struct Generator {
  GenId id = 0;
  std::string name;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Letter followed by optional digits, e.g. "a", "x", "a12".
bool is_valid_generator_name(std::string_view name);

// Ordered set of generators. Ids and names are unique; ids need not be
// contiguous (removing a generator does not renumber the others).
class Alphabet {
 public:
  Alphabet() = default;

  // Ids are assigned 0, 1, 2, ... in the given order.
  static Alphabet from_names(const std::vector<std::string>& names);

  // Appends a generator with id one past the current maximum.
  GenId add(const std::string& name);
  void remove(GenId id);

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  std::span<const Generator> generators() const noexcept { return gens_; }
  const Generator& operator[](std::size_t pos) const { return gens_[pos]; }

  std::optional<GenId> find(std::string_view name) const;
  std::optional<std::size_t> position(GenId id) const;
  bool contains(GenId id) const { return position(id).has_value(); }
  const std::string& name(GenId id) const;
  GenId next_id() const noexcept { return next_id_; }

  // Compares the generator lists; the id counter is bookkeeping.
  friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.gens_ == y.gens_; }

 private:
  std::vector<Generator> gens_;
  GenId next_id_ = 0;
};

struct Syllable {
  GenId gen = 0;
  Exponent exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Freely reduced word: no zero exponents, no two adjacent syllables on the
// same generator. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Syllable> raw);

  // Free reduction of an arbitrary syllable sequence.
  static Word reduce(std::span<const Syllable> raw);
  static Word generator(GenId g, Exponent e = 1);

  std::span<const Syllable> syllables() const noexcept { return syl_; }
  std::size_t size() const noexcept { return syl_.size(); }
  bool empty() const noexcept { return syl_.empty(); }
  const Syllable& operator[](std::size_t i) const { return syl_[i]; }
  const Syllable& front() const { return syl_.front(); }
  const Syllable& back() const { return syl_.back(); }

  // Sum of |exponent| over all syllables.
  std::uint64_t letter_length() const;
  Exponent exponent_sum(GenId g) const;
  std::size_t occurrences(GenId g) const;
  bool mentions(GenId g) const { return occurrences(g) != 0; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

// Checked exponent arithmetic; throws OverflowError.
Exponent checked_add(Exponent x, Exponent y);
Exponent checked_mul(Exponent x, Exponent y);

Word reduce(std::span<const Syllable> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, Exponent k);
// Conjugate y * w * y^-1.
Word conjugate(const Word& w, const Word& y);
// Replaces every occurrence of g by image.
Word substitute(const Word& w, GenId g, const Word& image);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced: either
// at most one syllable, or first and last syllables on different generators.
CyclicReduction cyclically_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Rotation by k syllables: s_k ... s_{n-1} s_0 ... s_{k-1}.
Word rotate(const Word& w, std::size_t k);

// Notation: `a`, `a^3`, `a^-2`, separated by whitespace or `*`. The token
// `1` denotes the identity. Throws ParseError.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace knotgrp
