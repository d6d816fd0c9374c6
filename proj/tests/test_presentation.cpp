#include <doctest.h>

#include "knotgrp/error.hpp"
#include "knotgrp/invariants.hpp"
#include "knotgrp/presentation.hpp"
#include "knotgrp/wirtinger.hpp"
#include "support.hpp"

using namespace knotgrp;

namespace {

std::vector<std::uint64_t> hom_vector(const Presentation& p) {
  std::vector<std::uint64_t> v;
  for (const char* t : {"Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4"}) {
    v.push_back(hom_count(p, builtin_table(t)));
  }
  return v;
}

Presentation trefoil() { return wirtinger_presentation(builtin_diagram("trefoil")); }

// Eliminates a3 and the redundant relator from the trefoil's Wirtinger
// presentation, leaving the braid relation.
TietzeScript trefoil_to_braid() {
  return {RemoveGenerator{"a3", 0}, RemoveRelation{1, {{0, {}, -1}}}};
}

// Introduces b = a2 a1 and a = a1 b, then eliminates a1 and a2.
TietzeScript braid_to_torus(const Presentation& braid) {
  GenId a1 = *braid.alphabet().find("a1");
  GenId a2 = *braid.alphabet().find("a2");
  return {AddGenerator{"b", Word{{a2, 1}, {a1, 1}}},
          AddGenerator{"a", Word{{a1, 1}, {braid.alphabet().next_id(), 1}}},
          RemoveGenerator{"a1", 2}, RemoveGenerator{"a2", 1}};
}

}  // namespace

TEST_CASE("torus_presentation") {
  auto p = torus_presentation(2, 3);
  CHECK(format_presentation(p) == "gens: a b\nrel: a^2 b^-3\n");
  CHECK(format_presentation(torus_presentation(1, 5)) == "gens: a b\nrel: a b^-5\n");
  CHECK_THROWS_AS(torus_presentation(2, 4), DomainError);
  CHECK_THROWS_AS(torus_presentation(0, 3), DomainError);
  CHECK_THROWS_AS(torus_presentation(3, -1), DomainError);

  auto simplified = auto_simplify(torus_presentation(1, 5)).presentation;
  CHECK(format_presentation(simplified) == "gens: b\n");
}

TEST_CASE("free_product_presentation") {
  CHECK(format_presentation(free_product_presentation(2, 3)) ==
        "gens: a b\nrel: a^2\nrel: b^3\n");
  CHECK(format_presentation(free_product_presentation(3, 4)) ==
        "gens: a b\nrel: a^3\nrel: b^4\n");
  auto trivial = auto_simplify(free_product_presentation(1, 1)).presentation;
  CHECK(trivial.generator_count() == 0);
  CHECK(trivial.relator_count() == 0);
  CHECK_THROWS_AS(free_product_presentation(0, 2), DomainError);
}

TEST_CASE("parse_presentation") {
  auto p = parse_presentation(
      "# trefoil\n"
      "gens: a b\n"
      "\n"
      "rel: a^2 = b^3   # torus relation\n"
      "rel: a a^-1\n");
  CHECK(p.generator_count() == 2);
  REQUIRE(p.relator_count() == 1);  // empty relator dropped
  CHECK(p.relators()[0] == Word{{0, 2}, {1, -3}});
  CHECK(parse_presentation(format_presentation(p)) == p);

  CHECK_THROWS_AS(parse_presentation("rel: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\ngens: b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a = a = a\n"), ParseError);
  try {
    parse_presentation("gens: a b\nrel: a c\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("apply_tietze reproduces the trefoil derivation") {
  auto braid = apply_tietze(trefoil(), trefoil_to_braid());
  CHECK(braid == parse_presentation("gens: a1 a2\nrel: a2 a1 a2 = a1 a2 a1\n"));

  auto torus = apply_tietze(braid, braid_to_torus(braid));
  CHECK(format_presentation(torus) == "gens: b a\nrel: b^3 a^-2\n");

  CHECK(apply_tietze(braid, TietzeScript{}) == braid);
}

TEST_CASE("apply_tietze rejects inapplicable moves") {
  auto p = trefoil();
  auto fails_at = [&](TietzeScript script, const std::string& index) {
    try {
      apply_tietze(p, script);
      return false;
    } catch (const DomainError& e) {
      return std::string(e.what()).starts_with("Tietze move " + index);
    }
  };
  // a1 occurs twice in r0 = a1 a2 a1^-1 a3^-1.
  CHECK(fails_at({RemoveGenerator{"a1", 0}}, "0"));
  CHECK(fails_at({RemoveGenerator{"zz", 0}}, "0"));
  CHECK(fails_at({AddGenerator{"b", Word{{0, 1}}}, AddGenerator{"b", Word{}}}, "1"));
  CHECK(fails_at({AddGenerator{"9", Word{}}}, "0"));
  // r0 is not a consequence of r1 by the stated derivation.
  CHECK(fails_at({RemoveRelation{0, {{1, {}, 1}}}}, "0"));
  CHECK(fails_at({RemoveRelation{0, {{0, {}, 1}}}}, "0"));
  CHECK(fails_at({AddRelation{Word{{0, 1}}, {}}}, "0"));
  CHECK(fails_at({RemoveRelation{7, {}}}, "0"));
}

TEST_CASE("add and remove relation with derivations") {
  auto p = torus_presentation(2, 3);
  // (b) r0 (b)^-1 is a consequence of r0.
  Word r = p.relators()[0];
  Word conj = conjugate(r, Word{{1, 1}});
  auto q = apply_tietze(p, AddRelation{conj, {{0, Word{{1, 1}}, 1}}});
  CHECK(q.relator_count() == 2);
  auto back = apply_tietze(q, RemoveRelation{1, {{0, Word{{1, 1}}, 1}}});
  CHECK(back == p);
}

TEST_CASE("Tietze moves preserve hom counts") {
  auto p = trefoil();
  auto expected = hom_vector(p);
  Presentation cur = p;
  auto script = trefoil_to_braid();
  for (const auto& move : script) {
    cur = apply_tietze(cur, move);
    CHECK(hom_vector(cur) == expected);
  }
  for (const auto& move : braid_to_torus(cur)) {
    cur = apply_tietze(cur, move);
    CHECK(hom_vector(cur) == expected);
  }

  auto five = wirtinger_presentation(builtin_diagram("paper-5crossing"));
  auto five_expected = hom_vector(five);
  auto [simplified, five_script] = auto_simplify(five);
  Presentation step = five;
  for (const auto& move : five_script) {
    step = apply_tietze(step, move);
    CHECK(hom_vector(step) == five_expected);
  }
}

TEST_CASE("auto_simplify") {
  SUBCASE("trefoil") {
    auto [p, script] = auto_simplify(trefoil());
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relator_count() == 1);
    auto braid = parse_presentation("gens: a1 a2\nrel: a2 a1 a2 = a1 a2 a1\n");
    CHECK(knotgrp::testing::cyclically_equivalent(p.relators()[0], braid.relators()[0]));
    CHECK(apply_tietze(trefoil(), script) == p);
    CHECK(abelianization(p) == abelianization(trefoil()));
  }
  SUBCASE("five-crossing") {
    auto five = wirtinger_presentation(builtin_diagram("paper-5crossing"));
    auto [p, script] = auto_simplify(five);
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relator_count() == 1);
    auto expected = parse_presentation(knotgrp::testing::kFiveCrossingReduced);
    CHECK(knotgrp::testing::cyclically_equivalent(p.relators()[0],
                                                  expected.relators()[0]));
    CHECK(apply_tietze(five, script) == p);
    CHECK(abelianization(p) == abelianization(five));
  }
  SUBCASE("fixed point") {
    auto free1 = parse_presentation("gens: a\n");
    auto [p, script] = auto_simplify(free1);
    CHECK(p == free1);
    CHECK(script.empty());
  }
  SUBCASE("cyclic reduction and duplicates") {
    auto p = parse_presentation(
        "gens: a b\n"
        "rel: b a^2 b^-3 b^-1\n"   // conjugate of a^2 b^-3
        "rel: b^3 a^-2\n"          // inverse of the same
        "rel: a^-2 b^3\n");        // a rotation of the inverse
    auto [q, script] = auto_simplify(p);
    CHECK(q.relator_count() == 1);
    CHECK(q.generator_count() == 2);
    CHECK(apply_tietze(p, script) == q);
    CHECK(hom_vector(q) == hom_vector(p));
  }
  SUBCASE("deterministic") {
    auto five = wirtinger_presentation(builtin_diagram("paper-5crossing"));
    auto r1 = auto_simplify(five);
    auto r2 = auto_simplify(five);
    CHECK(r1.presentation == r2.presentation);
    CHECK(r1.script == r2.script);
    CHECK(format_script(five, r1.script) == format_script(five, r2.script));
  }
}

TEST_CASE("cyclic_canonical") {
  Word w{{0, 1}, {1, 2}, {0, -1}, {1, -1}};
  CHECK(cyclic_canonical(w) == cyclic_canonical(rotate(w, 2)));
  CHECK(cyclic_canonical(w) == cyclic_canonical(invert(w)));
  CHECK(cyclic_canonical(conjugate(w, Word{{0, 3}})) == cyclic_canonical(w));
}

TEST_CASE("format_script") {
  auto lines = format_script(trefoil(), trefoil_to_braid());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "remove-generator a3 via r0 (a3 = a1 a2 a1^-1)");
  CHECK(lines[1] == "remove-relation r1 := r0^-1");
}

TEST_CASE("evaluate_word") {
  auto s3 = builtin_table("S3");
  auto p = torus_presentation(2, 3);
  Element t12 = knotgrp::testing::find_permutation(s3, {{0, 1}});
  Element c123 = knotgrp::testing::find_permutation(s3, {{0, 1, 2}});
  std::vector<Element> assignment{t12, c123};
  CHECK(evaluate_word(p, Word{}, assignment, s3) == s3.identity());
  CHECK(evaluate_word(p, Word{{0, 1}}, assignment, s3) == t12);
  CHECK(evaluate_word(p, Word{{0, 2}, {1, -3}}, assignment, s3) == s3.identity());
  CHECK(evaluate_word(p, Word{{1, -1}}, assignment, s3) == s3.inv(c123));
  std::vector<Element> short_assignment{t12};
  CHECK_THROWS_AS(evaluate_word(p, Word{}, short_assignment, s3), DomainError);
}

TEST_CASE("swapping torus parameters preserves hom counts") {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 5}}) {
    CHECK(hom_vector(torus_presentation(m, n)) == hom_vector(torus_presentation(n, m)));
  }
}
