#pragma once

// Shared generators and independent oracles for the test suites. Nothing
// here calls the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knotgrp/finite_group.hpp"
#include "knotgrp/invariants.hpp"
#include "knotgrp/presentation.hpp"
#include "knotgrp/torus.hpp"
#include "knotgrp/words.hpp"

namespace knotgrp::testing {

using Rng = std::mt19937_64;

// Raw syllable sequence: may contain zero exponents and repeated
// generators.
inline std::vector<Syllable> random_raw(Rng& rng, GenId gens, std::size_t max_len,
                                        Exponent max_exp) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenId> gen(0, gens - 1);
  std::uniform_int_distribution<Exponent> exp(-max_exp, max_exp);
  std::vector<Syllable> raw(len(rng));
  for (auto& s : raw) s = {gen(rng), exp(rng)};
  return raw;
}

inline Word random_word(Rng& rng, GenId gens, std::size_t max_len = 8,
                        Exponent max_exp = 4) {
  return Word::reduce(random_raw(rng, gens, max_len, max_exp));
}

// Letter-level free reduction: expand every syllable into unit letters and
// cancel with a stack. Independent of the syllable-merging reducer.
inline std::vector<std::pair<GenId, int>> letters(std::span<const Syllable> raw) {
  std::vector<std::pair<GenId, int>> out;
  for (const auto& s : raw) {
    int unit = s.exp > 0 ? 1 : -1;
    for (Exponent k = 0; k < (s.exp < 0 ? -s.exp : s.exp); ++k) {
      if (!out.empty() && out.back().first == s.gen && out.back().second == -unit) {
        out.pop_back();
      } else {
        out.emplace_back(s.gen, unit);
      }
    }
  }
  return out;
}

inline std::vector<std::pair<GenId, int>> letters(const Word& w) {
  return letters(w.syllables());
}

// Equality of relators up to cyclic rotation, inversion and a bijective
// renaming of generators, checked at letter level by brute force.
inline bool cyclically_equivalent(const Word& u, const Word& v) {
  auto lu = letters(u);
  auto lv = letters(v);
  if (lu.size() != lv.size()) return false;
  std::vector<GenId> gu, gv;
  for (auto [g, e] : lu) gu.push_back(g);
  for (auto [g, e] : lv) gv.push_back(g);
  std::sort(gu.begin(), gu.end());
  gu.erase(std::unique(gu.begin(), gu.end()), gu.end());
  std::sort(gv.begin(), gv.end());
  gv.erase(std::unique(gv.begin(), gv.end()), gv.end());
  if (gu.size() != gv.size()) return false;
  std::vector<std::pair<GenId, int>> inv(lv.rbegin(), lv.rend());
  for (auto& [g, e] : inv) e = -e;
  std::vector<GenId> perm = gv;
  do {
    auto rename = [&](GenId g) {
      return perm[static_cast<std::size_t>(
          std::find(gu.begin(), gu.end(), g) - gu.begin())];
    };
    std::vector<std::pair<GenId, int>> ru;
    for (auto [g, e] : lu) ru.emplace_back(rename(g), e);
    for (const auto* target : {&lv, &inv}) {
      for (std::size_t k = 0; k < ru.size(); ++k) {
        std::vector<std::pair<GenId, int>> rot(ru.begin() + static_cast<std::ptrdiff_t>(k),
                                               ru.end());
        rot.insert(rot.end(), ru.begin(), ru.begin() + static_cast<std::ptrdiff_t>(k));
        if (rot == *target) return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Index of a permutation (given in cycle notation on 0-based points) in a
// permutation table.
inline Element find_permutation(const FiniteGroupTable& t,
                                const std::vector<std::vector<std::uint32_t>>& cycles) {
  const std::size_t degree = t.permutations().front().size();
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  const auto& all = t.permutations();
  return static_cast<Element>(std::find(all.begin(), all.end(), p) - all.begin());
}

// Evaluates w at a two-generator assignment by expanding into unit letters
// and multiplying one table entry at a time.
inline Element evaluate_letters(const FiniteGroupTable& t, const Word& w, Element x,
                                Element y) {
  Element acc = t.identity();
  for (auto [g, e] : letters(w)) {
    Element v = g == 0 ? x : y;
    acc = t.mul(acc, e > 0 ? v : t.inv(v));
  }
  return acc;
}

inline Element unit_power(const FiniteGroupTable& t, Element x, Exponent k) {
  Element acc = t.identity();
  Element step = k < 0 ? t.inv(x) : x;
  for (Exponent i = 0; i < (k < 0 ? -k : k); ++i) acc = t.mul(acc, step);
  return acc;
}

struct Witness {
  std::string group;
  Element x;
  Element y;
};

// A pair x, y with x^m = y^n and xy != yx, searched in S3, S4, S5. Such a
// pair defines a homomorphism from <a,b | a^m = b^n> with nonabelian image.
inline std::optional<Witness> noncommuting_witness(Exponent m, Exponent n) {
  for (const char* name : {"S3", "S4", "S5"}) {
    auto t = builtin_table(name);
    for (Element x = 0; x < t.order(); ++x) {
      for (Element y = 0; y < t.order(); ++y) {
        if (unit_power(t, x, m) == unit_power(t, y, n) && t.mul(x, y) != t.mul(y, x)) {
          return Witness{name, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

// Order of w in Z_m * Z_n by brute-force powering, looking for the
// identity among w^1..w^limit.
inline std::optional<std::uint64_t> brute_force_order(const FactorOrders& p,
                                                      const Word& w, int limit) {
  Word acc;
  for (int k = 1; k <= limit; ++k) {
    acc = multiply(acc, w);
    if (free_product_normal_form(p, acc).is_identity()) {
      return static_cast<std::uint64_t>(k);
    }
  }
  return std::nullopt;
}

// Invariant factors via determinantal divisors: d_1 ... d_k = gcd of all
// k x k minors. Exponential; for tiny matrices only.
inline std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<BigInt> divisors{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    BigInt g = 0;
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.end() - static_cast<std::ptrdiff_t>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<std::ptrdiff_t>(k), csel.end(), true);
      do {
        IntMatrix minor(k, k);
        std::size_t mi = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          std::size_t mj = 0;
          for (std::size_t j = 0; j < c; ++j) {
            if (csel[j]) minor(mi, mj++) = a(i, j);
          }
          ++mi;
        }
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(determinant(minor)));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<BigInt> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    factors.push_back(divisors[k] / divisors[k - 1]);
  }
  return factors;
}

inline const char* kTrefoilRelations =
    "gens: a1 a2 a3\n"
    "rel: a1 a2 = a3 a1\n"
    "rel: a2 a3 = a1 a2\n"
    "rel: a3 a1 = a2 a3\n";

inline const char* kFiveCrossingRelations =
    "gens: a1 a2 a3 a4 a5\n"
    "rel: a4 a1 = a2 a4\n"
    "rel: a1 a3 = a4 a1\n"
    "rel: a2 a5 = a1 a2\n"
    "rel: a5 a2 = a3 a5\n"
    "rel: a3 a4 = a5 a3\n";

// Final two-generator relation for the five-crossing knot.
inline const char* kFiveCrossingReduced =
    "gens: a2 a5\n"
    "rel: a2 a5 a2^-1 a5 = a5 a2^-1 a5^-1 a2 a5^-1 a2 a5 a2^-1 a5 a2\n";

}  // namespace knotgrp::testing
