#include "knotgrp/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "knotgrp/error.hpp"

namespace knotgrp {

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Alphabet Alphabet::from_names(const std::vector<std::string>& names) {
  Alphabet alphabet;
  for (const auto& n : names) {
    alphabet.add(n);
  }
  return alphabet;
}

GenId Alphabet::add(const std::string& name) {
  if (!is_valid_generator_name(name)) {
    throw ValidationError("invalid generator name '" + name + "'");
  }
  if (find(name)) {
    throw ValidationError("duplicate generator name '" + name + "'");
  }
  GenId id = next_id_++;
  gens_.push_back({id, name});
  return id;
}

void Alphabet::remove(GenId id) {
  auto pos = position(id);
  if (!pos) {
    throw DomainError("generator id " + std::to_string(id) + " not in alphabet");
  }
  gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(*pos));
}

std::optional<GenId> Alphabet::find(std::string_view name) const {
  for (const auto& g : gens_) {
    if (g.name == name) return g.id;
  }
  return std::nullopt;
}

std::optional<std::size_t> Alphabet::position(GenId id) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].id == id) return i;
  }
  return std::nullopt;
}

const std::string& Alphabet::name(GenId id) const {
  auto pos = position(id);
  if (!pos) {
    throw DomainError("generator id " + std::to_string(id) + " not in alphabet");
  }
  return gens_[*pos].name;
}

Exponent checked_add(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("exponent overflow");
  }
  return r;
}

Exponent checked_mul(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowError("exponent overflow");
  }
  return r;
}

Word::Word(std::initializer_list<Syllable> raw)
    : Word(reduce(std::span<const Syllable>(raw.begin(), raw.size()))) {}

Word Word::reduce(std::span<const Syllable> raw) {
  // Stack-based reduction: each incoming syllable merges with the top.
  Word out;
  auto& st = out.syl_;
  st.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!st.empty() && st.back().gen == s.gen) {
      Exponent e = checked_add(st.back().exp, s.exp);
      if (e == 0) {
        st.pop_back();
      } else {
        st.back().exp = e;
      }
    } else {
      st.push_back(s);
    }
  }
  return out;
}

Word Word::generator(GenId g, Exponent e) {
  Word w;
  if (e != 0) w.syl_.push_back({g, e});
  return w;
}

std::uint64_t Word::letter_length() const {
  std::uint64_t n = 0;
  for (const auto& s : syl_) {
    n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  }
  return n;
}

Exponent Word::exponent_sum(GenId g) const {
  Exponent sum = 0;
  for (const auto& s : syl_) {
    if (s.gen == g) sum = checked_add(sum, s.exp);
  }
  return sum;
}

std::size_t Word::occurrences(GenId g) const {
  return static_cast<std::size_t>(std::count_if(
      syl_.begin(), syl_.end(), [g](const Syllable& s) { return s.gen == g; }));
}

Word reduce(std::span<const Syllable> raw) { return Word::reduce(raw); }

Word multiply(const Word& u, const Word& v) {
  std::vector<Syllable> raw(u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    raw.push_back({it->gen, checked_mul(it->exp, -1)});
  }
  return Word::reduce(raw);
}

Word power(const Word& w, Exponent k) {
  if (k == 0 || w.empty()) return {};
  Word base = k < 0 ? invert(w) : w;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Word result;
  while (n != 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n != 0) base = multiply(base, base);
  }
  return result;
}

Word conjugate(const Word& w, const Word& y) {
  return multiply(multiply(y, w), invert(y));
}

Word substitute(const Word& w, GenId g, const Word& image) {
  std::vector<Syllable> raw;
  raw.reserve(w.size());
  for (const auto& s : w.syllables()) {
    if (s.gen != g) {
      raw.push_back(s);
      continue;
    }
    Word p = power(image, s.exp);
    raw.insert(raw.end(), p.syllables().begin(), p.syllables().end());
  }
  return Word::reduce(raw);
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() <= 1 || w.front().gen != w.back().gen;
}

CyclicReduction cyclically_reduce(const Word& w) {
  std::vector<Syllable> core(w.syllables().begin(), w.syllables().end());
  std::vector<Syllable> conj;
  std::size_t lo = 0;
  std::size_t hi = core.size();
  // Invariant: w = conj * core[lo, hi) * conj^-1 after each step, except
  // that a merged end syllable is kept in core[hi - 1].
  while (hi - lo >= 2 && core[lo].gen == core[hi - 1].gen) {
    Syllable first = core[lo];
    Exponent merged = checked_add(first.exp, core[hi - 1].exp);
    conj.push_back(first);
    ++lo;
    if (merged == 0) {
      --hi;
    } else {
      core[hi - 1].exp = merged;
      // core[lo .. hi-2] ends on a different generator than core[hi-1],
      // and core[lo] differs from first.gen, so the word is now reduced.
      break;
    }
  }
  std::vector<Syllable> body(core.begin() + static_cast<std::ptrdiff_t>(lo),
                             core.begin() + static_cast<std::ptrdiff_t>(hi));
  return {Word::reduce(body), Word::reduce(conj)};
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Syllable> raw(w.syllables().begin() + static_cast<std::ptrdiff_t>(k),
                            w.syllables().end());
  raw.insert(raw.end(), w.syllables().begin(),
             w.syllables().begin() + static_cast<std::ptrdiff_t>(k));
  return Word::reduce(raw);
}

namespace {

bool is_separator(char c) {
  return c == '*' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

Syllable parse_token(std::string_view tok, const Alphabet& alphabet) {
  auto caret = tok.find('^');
  std::string_view name = tok.substr(0, caret);
  if (name.empty()) {
    throw ParseError("missing generator name in '" + std::string(tok) + "'");
  }
  auto id = alphabet.find(name);
  if (!id) {
    throw ParseError("unknown generator '" + std::string(name) + "'");
  }
  Exponent exp = 1;
  if (caret != std::string_view::npos) {
    std::string_view digits = tok.substr(caret + 1);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), exp);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw ParseError("malformed exponent in '" + std::string(tok) + "'");
    }
  }
  return {*id, exp};
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  bool expect_token = false;  // set after a '*'
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '*') {
      if (expect_token || raw.empty()) {
        throw ParseError("empty token near '*'");
      }
      expect_token = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok == "1") {
      raw.push_back({0, 0});  // identity; dropped by reduction
    } else {
      raw.push_back(parse_token(tok, alphabet));
    }
    expect_token = false;
    i = j;
  }
  if (expect_token) {
    throw ParseError("empty token after '*'");
  }
  return Word::reduce(raw);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

}  // namespace knotgrp
