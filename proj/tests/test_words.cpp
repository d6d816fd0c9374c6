#include <doctest.h>

#include "knotgrp/error.hpp"
#include "knotgrp/words.hpp"
#include "support.hpp"

using namespace knotgrp;
using knotgrp::testing::Rng;

namespace {

const Alphabet ab = Alphabet::from_names({"a", "b"});
const Alphabet xy = Alphabet::from_names({"x", "y"});
constexpr GenId a = 0, b = 1, x = 0, y = 1;

}  // namespace

TEST_CASE("alphabet") {
  CHECK(is_valid_generator_name("a"));
  CHECK(is_valid_generator_name("a12"));
  CHECK_FALSE(is_valid_generator_name(""));
  CHECK_FALSE(is_valid_generator_name("1a"));
  CHECK_FALSE(is_valid_generator_name("ab"));
  CHECK_THROWS_AS(Alphabet::from_names({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(Alphabet::from_names({"a^"}), ValidationError);

  Alphabet al = Alphabet::from_names({"a", "b", "c"});
  al.remove(1);
  CHECK(al.size() == 2);
  CHECK(al.find("c") == GenId{2});
  CHECK(al.add("d") == 3);  // ids are never reused
  CHECK(al.position(3) == std::size_t{2});
}

TEST_CASE("parse_word") {
  CHECK(parse_word("a^2 b^-3", ab) == Word{{a, 2}, {b, -3}});
  CHECK(parse_word("x^2 y x^-1 x^6", xy) == Word{{x, 2}, {y, 1}, {x, 5}});
  CHECK(parse_word("a a^-1", ab).empty());
  CHECK(parse_word("a*b*a", ab) == Word{{a, 1}, {b, 1}, {a, 1}});
  CHECK(parse_word("  ", ab).empty());
  CHECK(parse_word("1", ab).empty());
  CHECK(parse_word("a^+2", ab) == Word{{a, 2}});

  CHECK_THROWS_AS(parse_word("c", ab), ParseError);
  CHECK_THROWS_AS(parse_word("a^", ab), ParseError);
  CHECK_THROWS_AS(parse_word("a^x", ab), ParseError);
  CHECK_THROWS_AS(parse_word("a^2b", ab), ParseError);
  CHECK_THROWS_AS(parse_word("a * * b", ab), ParseError);
  CHECK_THROWS_AS(parse_word("a *", ab), ParseError);
  CHECK_THROWS_AS(parse_word("^2", ab), ParseError);
  CHECK_THROWS_AS(parse_word("a^99999999999999999999", ab), ParseError);
}

TEST_CASE("format_word") {
  CHECK(format_word(Word{{a, 2}, {b, -3}}, ab) == "a^2 b^-3");
  CHECK(format_word(Word{{a, 1}}, ab) == "a");
  CHECK(format_word(Word{}, ab) == "1");
}

TEST_CASE("reduce") {
  std::vector<Syllable> raw{{x, 2}, {y, 1}, {x, -1}, {x, 6}};
  CHECK(reduce(raw) == Word{{x, 2}, {y, 1}, {x, 5}});
  CHECK(Word{{a, 1}, {b, 1}, {b, -1}, {a, -1}}.empty());
  CHECK(Word{{a, 3}, {a, -3}}.empty());
  CHECK(Word{{a, 0}, {b, 2}, {b, 0}, {b, 1}} == Word{{b, 3}});
  CHECK_THROWS_AS(Word({{a, std::numeric_limits<Exponent>::max()}, {a, 1}}),
                  OverflowError);
}

TEST_CASE("multiply and invert") {
  CHECK(multiply(Word{{a, 2}}, Word{{a, -2}}).empty());
  CHECK(multiply(Word{{a, 1}, {b, 1}}, Word{{b, 2}}) == Word{{a, 1}, {b, 3}});
  Word w{{a, 1}, {b, -2}};
  CHECK(multiply(Word{}, w) == w);
  CHECK(invert(Word{{a, 2}, {b, -3}}) == Word{{b, 3}, {a, -2}});
  CHECK(invert(Word{}).empty());
  CHECK(power(w, 3) == multiply(w, multiply(w, w)));
  CHECK(power(w, -2) == multiply(invert(w), invert(w)));
  CHECK(power(w, 0).empty());
}

TEST_CASE("substitute") {
  // a := b^2 in a b a^-1
  Word w{{a, 1}, {b, 1}, {a, -1}};
  CHECK(substitute(w, a, Word{{b, 2}}) == Word{{b, 1}});
  CHECK(substitute(Word{{a, 2}}, a, Word{{a, 1}, {b, 1}}) ==
        Word{{a, 1}, {b, 1}, {a, 1}, {b, 1}});
}

TEST_CASE("cyclically_reduce") {
  auto r1 = cyclically_reduce(Word{{a, 1}, {b, 2}, {a, -1}});
  CHECK(r1.core == Word{{b, 2}});
  CHECK(r1.conjugator == Word{{a, 1}});

  auto r2 = cyclically_reduce(Word{{a, 1}, {b, 1}});
  CHECK(r2.core == Word{{a, 1}, {b, 1}});
  CHECK(r2.conjugator.empty());

  // a b a -> conjugate of b a^2
  Word aba{{a, 1}, {b, 1}, {a, 1}};
  auto r3 = cyclically_reduce(aba);
  CHECK(is_cyclically_reduced(r3.core));
  CHECK(conjugate(r3.core, r3.conjugator) == aba);

  CHECK(cyclically_reduce(Word{}).core.empty());
}

TEST_CASE("cyclically_reduce recovers the conjugated syllable") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Word conj = knotgrp::testing::random_word(rng, 3, 6, 3);
    Word z = Word::generator(static_cast<GenId>(rng() % 3),
                             static_cast<Exponent>(rng() % 5) + 1);
    Word w = conjugate(z, conj);
    auto [core, y] = cyclically_reduce(w);
    REQUIRE(core.size() == 1);
    CHECK(core.front().gen == z.front().gen);
    CHECK(multiply(y, multiply(core, invert(y))) == w);
    CHECK(cyclically_reduce(core).core == core);
  }
}

TEST_CASE("reduction agrees with letter-level cancellation") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto raw = knotgrp::testing::random_raw(rng, 3, 10, 3);
    CHECK(knotgrp::testing::letters(reduce(raw)) == knotgrp::testing::letters(raw));
  }
}

TEST_CASE("rotate") {
  Word w{{a, 1}, {b, 2}, {a, 3}, {b, -1}};
  CHECK(rotate(w, 1) == Word{{b, 2}, {a, 3}, {b, -1}, {a, 1}});
  CHECK(rotate(w, 4) == w);
}
