#include "knotgrp/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "knotgrp/error.hpp"

namespace knotgrp {

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  for (auto& r : relators) {
    if (r.empty()) continue;
    for (const auto& s : r.syllables()) {
      if (!alphabet_.contains(s.gen)) {
        throw ValidationError("relator mentions generator id " +
                              std::to_string(s.gen) + " outside the alphabet");
      }
    }
    relators_.push_back(std::move(r));
  }
}

std::uint64_t Presentation::total_length() const {
  std::uint64_t n = 0;
  for (const auto& r : relators_) n += r.letter_length();
  return n;
}

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

Presentation two_generator(std::vector<Word> relators) {
  return Presentation(Alphabet::from_names({"a", "b"}), std::move(relators));
}

}  // namespace

Presentation torus_presentation(long long m, long long n) {
  if (m <= 0 || n <= 0) {
    throw DomainError("torus parameters must be positive (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  if (gcd_ll(m, n) != 1) {
    throw DomainError("torus parameters must satisfy gcd(m,n)=1 (got gcd(" +
                      std::to_string(m) + "," + std::to_string(n) +
                      ")=" + std::to_string(gcd_ll(m, n)) +
                      "); (z^m, z^n) is not an embedding");
  }
  return two_generator({Word{{0, m}, {1, -n}}});
}

Presentation free_product_presentation(long long m, long long n) {
  if (m <= 0 || n <= 0) {
    throw DomainError("free product orders must be positive (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return two_generator({Word{{0, m}}, Word{{1, n}}});
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> relators;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    try {
      if (line.starts_with("gens:")) {
        if (alphabet) throw ParseError("duplicate 'gens:' line");
        std::istringstream names{std::string(line.substr(5))};
        std::vector<std::string> list;
        for (std::string name; names >> name;) list.push_back(name);
        alphabet = Alphabet::from_names(list);
      } else if (line.starts_with("rel:")) {
        if (!alphabet) throw ParseError("'rel:' before 'gens:'");
        std::string_view body = line.substr(4);
        auto eq = body.find('=');
        Word r = parse_word(body.substr(0, eq), *alphabet);
        if (eq != std::string_view::npos) {
          std::string_view rhs = body.substr(eq + 1);
          if (rhs.find('=') != std::string_view::npos) {
            throw ParseError("more than one '=' in relation");
          }
          r = multiply(r, invert(parse_word(rhs, *alphabet)));
        }
        relators.push_back(std::move(r));
      } else {
        throw ParseError("expected 'gens:' or 'rel:'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), line_no);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!alphabet) throw ParseError("missing 'gens:' line");
  return Presentation(std::move(*alphabet), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.alphabet().generators()) {
    out += ' ';
    out += g.name;
  }
  out += '\n';
  for (const auto& r : p.relators()) {
    out += "rel: ";
    out += format_word(r, p.alphabet());
    out += '\n';
  }
  return out;
}

Word evaluate_derivation(const Presentation& p, const Derivation& d) {
  Word product;
  for (const auto& step : d) {
    if (step.relator >= p.relator_count()) {
      throw DomainError("derivation references relator " +
                        std::to_string(step.relator) + " of " +
                        std::to_string(p.relator_count()));
    }
    if (step.sign != 1 && step.sign != -1) {
      throw DomainError("derivation sign must be +1 or -1");
    }
    for (const auto& s : step.conjugator.syllables()) {
      if (!p.alphabet().contains(s.gen)) {
        throw DomainError("derivation conjugator uses a foreign generator");
      }
    }
    Word r = p.relators()[step.relator];
    if (step.sign < 0) r = invert(r);
    product = multiply(product, conjugate(r, step.conjugator));
  }
  return product;
}

namespace {

struct Solved {
  GenId gen;
  Word image;
};

// Solves relator r for generator g, which must occur exactly once with
// exponent +-1.
std::optional<Solved> solve_for(const Word& r, GenId g) {
  if (r.occurrences(g) != 1) return std::nullopt;
  auto syl = r.syllables();
  auto it = std::find_if(syl.begin(), syl.end(),
                         [g](const Syllable& s) { return s.gen == g; });
  if (it->exp != 1 && it->exp != -1) return std::nullopt;
  Word u = Word::reduce({syl.begin(), it});
  Word v = Word::reduce({it + 1, syl.end()});
  // u g^e v = 1: g = u^-1 v^-1 for e = 1, g = v u for e = -1.
  Word image = it->exp == 1 ? multiply(invert(u), invert(v)) : multiply(v, u);
  return Solved{g, std::move(image)};
}

Presentation apply_move(const Presentation& p, const AddRelation& m) {
  if (m.relator.empty()) throw DomainError("cannot add an empty relator");
  if (evaluate_derivation(p, m.derivation) != m.relator) {
    throw DomainError("derivation does not produce the added relator");
  }
  std::vector<Word> rels(p.relators().begin(), p.relators().end());
  std::size_t at = std::min(m.position, rels.size());
  rels.insert(rels.begin() + static_cast<std::ptrdiff_t>(at), m.relator);
  return Presentation(p.alphabet(), std::move(rels));
}

Presentation apply_move(const Presentation& p, const RemoveRelation& m) {
  if (m.index >= p.relator_count()) {
    throw DomainError("no relator " + std::to_string(m.index));
  }
  for (const auto& step : m.derivation) {
    if (step.relator == m.index) {
      throw DomainError("derivation of a removed relator may not use itself");
    }
  }
  if (evaluate_derivation(p, m.derivation) != p.relators()[m.index]) {
    throw DomainError("derivation does not produce relator " +
                      std::to_string(m.index));
  }
  std::vector<Word> rels(p.relators().begin(), p.relators().end());
  rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(m.index));
  return Presentation(p.alphabet(), std::move(rels));
}

Presentation apply_move(const Presentation& p, const AddGenerator& m) {
  if (p.alphabet().find(m.name)) {
    throw DomainError("generator name '" + m.name + "' already in use");
  }
  for (const auto& s : m.definition.syllables()) {
    if (!p.alphabet().contains(s.gen)) {
      throw DomainError("definition of '" + m.name +
                        "' uses a generator outside the alphabet");
    }
  }
  Alphabet alphabet = p.alphabet();
  GenId g = alphabet.add(m.name);
  std::vector<Word> rels(p.relators().begin(), p.relators().end());
  rels.push_back(multiply(Word::generator(g), invert(m.definition)));
  return Presentation(std::move(alphabet), std::move(rels));
}

Presentation apply_move(const Presentation& p, const RemoveGenerator& m) {
  auto g = p.alphabet().find(m.name);
  if (!g) throw DomainError("no generator named '" + m.name + "'");
  if (m.relator >= p.relator_count()) {
    throw DomainError("no relator " + std::to_string(m.relator));
  }
  auto solved = solve_for(p.relators()[m.relator], *g);
  if (!solved) {
    throw DomainError("relator " + std::to_string(m.relator) +
                      " does not define '" + m.name +
                      "' (needs exactly one occurrence with exponent +-1)");
  }
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i == m.relator) continue;
    rels.push_back(substitute(p.relators()[i], *g, solved->image));
  }
  Alphabet alphabet = p.alphabet();
  alphabet.remove(*g);
  return Presentation(std::move(alphabet), std::move(rels));
}

}  // namespace

Presentation apply_tietze(const Presentation& p, const TietzeMove& move) {
  return std::visit([&](const auto& m) { return apply_move(p, m); }, move);
}

Presentation apply_tietze(Presentation p, std::span<const TietzeMove> script) {
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      p = apply_tietze(p, script[i]);
    } catch (const Error& e) {
      throw DomainError("Tietze move " + std::to_string(i) + ": " + e.what());
    }
  }
  return p;
}

namespace {

std::string format_derivation(const Derivation& d, const Alphabet& alphabet) {
  if (d.empty()) return "1";
  std::string out;
  for (const auto& step : d) {
    if (!out.empty()) out += " . ";
    std::string r = "r" + std::to_string(step.relator);
    if (step.sign < 0) r += "^-1";
    if (step.conjugator.empty()) {
      out += r;
    } else {
      std::string y = format_word(step.conjugator, alphabet);
      out += "(" + y + ") " + r + " (" + y + ")^-1";
    }
  }
  return out;
}

struct MoveFormatter {
  const Presentation& p;

  std::string operator()(const AddRelation& m) const {
    std::string out = "add-relation " + format_word(m.relator, p.alphabet());
    if (m.position != AddRelation::kAppend) {
      out += " at r" + std::to_string(m.position);
    }
    return out + " := " + format_derivation(m.derivation, p.alphabet());
  }
  std::string operator()(const RemoveRelation& m) const {
    return "remove-relation r" + std::to_string(m.index) +
           " := " + format_derivation(m.derivation, p.alphabet());
  }
  std::string operator()(const AddGenerator& m) const {
    return "add-generator " + m.name + " = " +
           format_word(m.definition, p.alphabet());
  }
  std::string operator()(const RemoveGenerator& m) const {
    std::string out = "remove-generator " + m.name + " via r" +
                      std::to_string(m.relator);
    auto g = p.alphabet().find(m.name);
    if (g && m.relator < p.relator_count()) {
      if (auto s = solve_for(p.relators()[m.relator], *g)) {
        out += " (" + m.name + " = " + format_word(s->image, p.alphabet()) + ")";
      }
    }
    return out;
  }
};

}  // namespace

std::vector<std::string> format_script(const Presentation& start,
                                       std::span<const TietzeMove> script) {
  std::vector<std::string> lines;
  Presentation p = start;
  for (const auto& move : script) {
    lines.push_back(std::visit(MoveFormatter{p}, move));
    p = apply_tietze(p, move);
  }
  return lines;
}

Word cyclic_canonical(const Word& w) {
  Word core = cyclically_reduce(w).core;
  if (core.empty()) return core;
  Word inv = invert(core);
  Word best = core;
  for (std::size_t k = 0; k < core.size(); ++k) {
    best = std::min({best, rotate(core, k), rotate(inv, k)});
  }
  return best;
}

namespace {

// If target is a syllable rotation of r or of r^-1 (both cyclically
// reduced), returns the derivation target = u^-1 r^+-1 u.
std::optional<DerivationStep> rotation_witness(const Word& r, std::size_t index,
                                               const Word& target) {
  if (r.size() != target.size()) return std::nullopt;
  for (int sign : {1, -1}) {
    Word base = sign > 0 ? r : invert(r);
    for (std::size_t k = 0; k < base.size(); ++k) {
      if (rotate(base, k) == target) {
        Word prefix = Word::reduce(base.syllables().first(k));
        return DerivationStep{index, invert(prefix), sign};
      }
    }
  }
  return std::nullopt;
}

// Step (1): replace each relator by its cyclic core, in place.
bool cyclic_pass(Presentation& p, TietzeScript& script) {
  bool changed = false;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    auto [core, y] = cyclically_reduce(p.relators()[i]);
    if (y.empty()) continue;
    // core = y^-1 r y, then r = y core y^-1.
    TietzeMove add = AddRelation{core, {{i, invert(y), 1}}, i};
    p = apply_tietze(p, add);
    TietzeMove remove = RemoveRelation{i + 1, {{i, y, 1}}};
    p = apply_tietze(p, remove);
    script.push_back(std::move(add));
    script.push_back(std::move(remove));
    changed = true;
  }
  return changed;
}

// Step (2): drop later copies of a relator up to rotation and inversion.
bool duplicate_pass(Presentation& p, TietzeScript& script) {
  for (std::size_t j = 1; j < p.relator_count(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      auto step = rotation_witness(p.relators()[k], k, p.relators()[j]);
      if (!step) continue;
      TietzeMove remove = RemoveRelation{j, {*step}};
      p = apply_tietze(p, remove);
      script.push_back(std::move(remove));
      return true;
    }
  }
  return false;
}

// Step (3): one generator elimination.
bool elimination_pass(Presentation& p, TietzeScript& script) {
  struct Candidate {
    std::uint64_t length;
    GenId gen;
    std::size_t relator;
  };
  std::optional<Candidate> best;
  for (const auto& g : p.alphabet().generators()) {
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      const Word& r = p.relators()[i];
      if (!solve_for(r, g.id)) continue;
      Candidate c{r.letter_length(), g.id, i};
      auto key = [](const Candidate& x) {
        return std::tuple(x.length, x.gen, x.relator);
      };
      if (!best || key(c) < key(*best)) best = c;
    }
  }
  if (!best) return false;
  TietzeMove move = RemoveGenerator{p.alphabet().name(best->gen), best->relator};
  p = apply_tietze(p, move);
  script.push_back(std::move(move));
  return true;
}

}  // namespace

SimplifyResult auto_simplify(const Presentation& input) {
  SimplifyResult result{input, {}};
  auto& p = result.presentation;
  while (true) {
    cyclic_pass(p, result.script);
    if (duplicate_pass(p, result.script)) continue;
    if (elimination_pass(p, result.script)) continue;
    break;
  }
  return result;
}

Element evaluate_word(const Presentation& p, const Word& w,
                      std::span<const Element> assignment,
                      const FiniteGroupTable& table) {
  if (assignment.size() != p.generator_count()) {
    throw DomainError("assignment covers " + std::to_string(assignment.size()) +
                      " of " + std::to_string(p.generator_count()) +
                      " generators");
  }
  Element x = table.identity();
  for (const auto& s : w.syllables()) {
    auto pos = p.alphabet().position(s.gen);
    if (!pos) throw DomainError("word uses a generator outside the alphabet");
    x = table.mul(x, table.pow(assignment[*pos], s.exp));
  }
  return x;
}

}  // namespace knotgrp
