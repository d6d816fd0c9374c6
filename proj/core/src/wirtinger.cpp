#include "knotgrp/wirtinger.hpp"

#include <charconv>
#include <sstream>

#include "knotgrp/error.hpp"

namespace knotgrp {

KnotDiagram::KnotDiagram(std::size_t arc_count, std::vector<Crossing> crossings)
    : arc_count_(arc_count), crossings_(std::move(crossings)) {
  if (arc_count_ == 0) throw ValidationError("diagram needs at least one arc");
  if (crossings_.empty()) {
    if (arc_count_ != 1) {
      throw ValidationError("a diagram without crossings must have exactly 1 arc (got " +
                            std::to_string(arc_count_) + ")");
    }
    return;
  }
  if (crossings_.size() != arc_count_) {
    throw ValidationError("arc count " + std::to_string(arc_count_) +
                          " differs from crossing count " +
                          std::to_string(crossings_.size()));
  }
  std::vector<std::size_t> in_count(arc_count_ + 1, 0);
  std::vector<std::size_t> out_count(arc_count_ + 1, 0);
  std::vector<std::size_t> next(arc_count_ + 1, 0);
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    for (std::size_t label : {x.over, x.under_in, x.under_out}) {
      if (label < 1 || label > arc_count_) {
        throw ValidationError("crossing " + std::to_string(c + 1) +
                              " references arc " + std::to_string(label) +
                              " outside 1.." + std::to_string(arc_count_));
      }
    }
    if (x.sign != 1 && x.sign != -1) {
      throw ValidationError("crossing " + std::to_string(c + 1) +
                            " has sign other than +1/-1");
    }
    if (++in_count[x.under_in] > 1) {
      throw ValidationError("arc " + std::to_string(x.under_in) +
                            " appears twice as under_in");
    }
    if (++out_count[x.under_out] > 1) {
      throw ValidationError("arc " + std::to_string(x.under_out) +
                            " appears twice as under_out");
    }
    next[x.under_in] = x.under_out;
  }
  // Counts are now <= 1 and sum to arc_count, so each is exactly 1.
  std::size_t arc = 1;
  std::size_t steps = 0;
  do {
    arc = next[arc];
    ++steps;
  } while (arc != 1);
  if (steps != arc_count_) {
    throw ValidationError("arcs do not chain into a single closed strand (cycle through arc 1 has " +
                          std::to_string(steps) + " of " +
                          std::to_string(arc_count_) + " arcs)");
  }
}

namespace {

std::size_t parse_label(std::string_view v, std::size_t line) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError("malformed arc label '" + std::string(v) + "'", line);
  }
  return out;
}

}  // namespace

KnotDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::size_t> arcs;
  std::vector<Crossing> crossings;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (!arcs) {
      if (keyword != "arcs") {
        throw ParseError("expected 'arcs <n>' as the first line", line_no);
      }
      std::string count;
      if (!(fields >> count)) throw ParseError("missing arc count", line_no);
      arcs = parse_label(count, line_no);
      if (std::string extra; fields >> extra) {
        throw ParseError("unexpected '" + extra + "'", line_no);
      }
      continue;
    }
    if (keyword != "crossing") {
      throw ParseError("expected 'crossing', got '" + keyword + "'", line_no);
    }
    Crossing c;
    bool have_over = false, have_in = false, have_out = false, have_sign = false;
    for (std::string field; fields >> field;) {
      auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected key=value, got '" + field + "'", line_no);
      }
      std::string key = field.substr(0, eq);
      std::string_view value = std::string_view(field).substr(eq + 1);
      auto once = [&](bool& seen) {
        if (seen) throw ParseError("duplicate key '" + key + "'", line_no);
        seen = true;
      };
      if (key == "over") {
        once(have_over);
        c.over = parse_label(value, line_no);
      } else if (key == "in") {
        once(have_in);
        c.under_in = parse_label(value, line_no);
      } else if (key == "out") {
        once(have_out);
        c.under_out = parse_label(value, line_no);
      } else if (key == "sign") {
        once(have_sign);
        if (value == "+" || value == "+1") {
          c.sign = 1;
        } else if (value == "-" || value == "-1") {
          c.sign = -1;
        } else {
          throw ParseError("sign must be '+' or '-'", line_no);
        }
      } else {
        throw ParseError("unknown key '" + key + "'", line_no);
      }
    }
    if (!(have_over && have_in && have_out && have_sign)) {
      throw ParseError("crossing needs over=, in=, out= and sign=", line_no);
    }
    crossings.push_back(c);
  }
  if (!arcs) throw ParseError("missing 'arcs <n>' line");
  return KnotDiagram(*arcs, std::move(crossings));
}

std::string format_diagram(const KnotDiagram& d) {
  std::string out = "arcs " + std::to_string(d.arc_count()) + "\n";
  for (const auto& c : d.crossings()) {
    out += "crossing over=" + std::to_string(c.over) +
           " in=" + std::to_string(c.under_in) +
           " out=" + std::to_string(c.under_out) +
           " sign=" + (c.sign > 0 ? "+" : "-") + "\n";
  }
  return out;
}

Presentation wirtinger_presentation(const KnotDiagram& d) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d.arc_count(); ++i) {
    names.push_back("a" + std::to_string(i));
  }
  Alphabet alphabet = Alphabet::from_names(names);
  auto gen = [](std::size_t label) { return static_cast<GenId>(label - 1); };
  std::vector<Word> relators;
  for (const auto& c : d.crossings()) {
    Exponent s = c.sign;
    relators.push_back(Word{{gen(c.over), s},
                            {gen(c.under_in), 1},
                            {gen(c.over), -s},
                            {gen(c.under_out), -1}});
  }
  return Presentation(std::move(alphabet), std::move(relators));
}

KnotDiagram builtin_diagram(std::string_view name) {
  if (name == "unknot") return KnotDiagram(1, {});
  if (name == "trefoil") {
    // a1a2 = a3a1, a2a3 = a1a2, a3a1 = a2a3.
    return KnotDiagram(3, {{1, 2, 3, 1}, {2, 3, 1, 1}, {3, 1, 2, 1}});
  }
  if (name == "paper-5crossing") {
    // a4a1 = a2a4, a1a3 = a4a1, a2a5 = a1a2, a5a2 = a3a5, a3a4 = a5a3.
    return KnotDiagram(5, {{4, 1, 2, 1},
                           {1, 3, 4, 1},
                           {2, 5, 1, 1},
                           {5, 2, 3, 1},
                           {3, 4, 5, 1}});
  }
  throw DomainError("unknown builtin diagram '" + std::string(name) + "'");
}

std::vector<std::string> builtin_diagram_names() {
  return {"unknot", "trefoil", "paper-5crossing"};
}

}  // namespace knotgrp
