#include "knotgrp/torus.hpp"

#include <algorithm>
#include <numeric>

#include "knotgrp/error.hpp"

namespace knotgrp {

const Alphabet& torus_alphabet() {
  static const Alphabet alphabet = Alphabet::from_names({"a", "b"});
  return alphabet;
}

FactorOrders::FactorOrders(Exponent m, Exponent n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw DomainError("factor orders must be positive (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
}

TorusParams::TorusParams(Exponent m, Exponent n) : FactorOrders(m, n) {
  if (std::gcd(m, n) != 1) {
    throw DomainError("torus parameters must satisfy gcd(m,n)=1 (got gcd(" +
                      std::to_string(m) + "," + std::to_string(n) +
                      ")=" + std::to_string(std::gcd(m, n)) + ")");
  }
}

namespace {

Letter letter_of(GenId g) {
  if (g > 1) {
    throw DomainError("word uses generator id " + std::to_string(g) +
                      " outside {a, b}");
  }
  return static_cast<Letter>(g);
}

// Left-to-right rewriting with a stack of alternating syllables. Each
// incoming syllable merges with a same-letter top, then splits as
// c^q x^r with r in [0, ord) by floor division.
class Rewriter {
 public:
  explicit Rewriter(const FactorOrders& p) : p_(p) {}

  void push(Letter l, Exponent k) {
    if (!stack_.empty() && stack_.back().letter == l) {
      k = checked_add(k, stack_.back().exp);
      stack_.pop_back();
    }
    const Exponent ord = p_.order(l);
    Exponent q = k / ord;
    Exponent r = k % ord;
    if (r < 0) {
      r += ord;
      --q;
    }
    central_ = checked_add(central_, q);
    if (r != 0) stack_.push_back({l, r});
  }

  void push_word(const Word& w) {
    for (const auto& s : w.syllables()) push(letter_of(s.gen), s.exp);
  }

  Exponent central() const { return central_; }
  std::vector<FactorSyllable>& syllables() { return stack_; }

 private:
  const FactorOrders& p_;
  Exponent central_ = 0;
  std::vector<FactorSyllable> stack_;
};

}  // namespace

TorusNormalForm torus_normal_form(const TorusParams& p, const Word& w) {
  Rewriter rw(p);
  rw.push_word(w);
  return {rw.central(), std::move(rw.syllables())};
}

bool words_equal_in_torus_group(const TorusParams& p, const Word& u,
                                const Word& v) {
  return torus_normal_form(p, u) == torus_normal_form(p, v);
}

bool is_central(const TorusParams& p, const Word& w) {
  return torus_normal_form(p, w).syllables.empty();
}

FreeProductNormalForm free_product_normal_form(const FactorOrders& p,
                                               const Word& w) {
  Rewriter rw(p);
  rw.push_word(w);
  return {std::move(rw.syllables())};
}

Word to_word(const FreeProductNormalForm& nf) {
  std::vector<Syllable> raw;
  for (const auto& s : nf.syllables) {
    raw.push_back({static_cast<GenId>(s.letter), s.exp});
  }
  return Word::reduce(raw);
}

Word to_word(const TorusParams& p, const TorusNormalForm& nf) {
  std::vector<Syllable> raw{{0, checked_mul(nf.central, p.m())}};
  for (const auto& s : nf.syllables) {
    raw.push_back({static_cast<GenId>(s.letter), s.exp});
  }
  return Word::reduce(raw);
}

FreeProductNormalForm free_product_cyclic_core(const FactorOrders& p,
                                               const FreeProductNormalForm& nf) {
  std::vector<FactorSyllable> core = nf.syllables;
  while (core.size() >= 2 && core.front().letter == core.back().letter) {
    // Conjugate the first syllable around to the end.
    FactorSyllable first = core.front();
    Rewriter rw(p);
    for (auto it = core.begin() + 1; it != core.end(); ++it) {
      rw.push(it->letter, it->exp);
    }
    rw.push(first.letter, first.exp);
    core = std::move(rw.syllables());
  }
  return {std::move(core)};
}

std::string ElementOrder::to_string() const {
  return is_finite() ? std::to_string(*value_) : "infinite";
}

ElementOrder order_in_free_product(const FactorOrders& p, const Word& w) {
  auto core = free_product_cyclic_core(p, free_product_normal_form(p, w));
  if (core.syllables.empty()) return ElementOrder::finite(1);
  if (core.syllables.size() == 1) {
    const auto& s = core.syllables.front();
    Exponent ord = p.order(s.letter);
    return ElementOrder::finite(static_cast<std::uint64_t>(ord / std::gcd(ord, s.exp)));
  }
  return ElementOrder::infinite();
}

std::vector<FreeProductNormalForm> enumerate_free_product_words(
    const FactorOrders& p, std::size_t max_length) {
  std::vector<FreeProductNormalForm> out;
  std::vector<FactorSyllable> current;
  auto extend = [&](auto&& self, std::size_t length, Letter next) -> void {
    if (current.size() == length) {
      out.push_back({current});
      return;
    }
    for (Exponent e = 1; e < p.order(next); ++e) {
      current.push_back({next, e});
      self(self, length, next == Letter::a ? Letter::b : Letter::a);
      current.pop_back();
    }
  };
  for (std::size_t length = 1; length <= max_length; ++length) {
    extend(extend, length, Letter::a);
    extend(extend, length, Letter::b);
  }
  return out;
}

std::uint64_t max_torsion_order(const FactorOrders& p, std::size_t max_length) {
  if (p.m() < 2 || p.n() < 2) {
    throw DomainError("max_torsion_order needs m, n >= 2");
  }
  if (max_length < 1) throw DomainError("search length must be at least 1");
  std::uint64_t best = 1;
  for (const auto& nf : enumerate_free_product_words(p, max_length)) {
    auto ord = order_in_free_product(p, to_word(nf));
    if (ord.is_finite()) best = std::max(best, ord.value());
  }
  return best;
}

namespace {

std::string format_syllables(const std::vector<FactorSyllable>& syl) {
  std::string out;
  for (const auto& s : syl) {
    if (!out.empty()) out += ' ';
    out += s.letter == Letter::a ? 'a' : 'b';
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace

std::string format_normal_form(const TorusNormalForm& nf) {
  if (nf.is_identity()) return "e";
  std::string out;
  if (nf.central != 0) {
    out = "c";
    if (nf.central != 1) out += "^" + std::to_string(nf.central);
  }
  if (!nf.syllables.empty()) {
    if (!out.empty()) out += " · ";
    out += format_syllables(nf.syllables);
  }
  return out;
}

std::string format_normal_form(const FreeProductNormalForm& nf) {
  if (nf.is_identity()) return "e";
  return format_syllables(nf.syllables);
}

}  // namespace knotgrp
