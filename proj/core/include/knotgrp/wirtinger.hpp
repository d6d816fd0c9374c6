#pragma once

// Knot diagrams and their Wirtinger presentations.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotgrp/presentation.hpp"

namespace knotgrp {

// Arc labels are 1-based. At a crossing the under-strand runs from arc
// `under_in` to arc `under_out` beneath arc `over`.
struct Crossing {
  std::size_t over = 0;
  std::size_t under_in = 0;
  std::size_t under_out = 0;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class KnotDiagram {
 public:
  // Throws ValidationError naming the violated invariant:
  //  - labels lie in 1..arc_count and signs are +-1;
  //  - with crossings: arc_count equals the crossing count, every arc is
  //    under_in exactly once and under_out exactly once, and the chaining
  //    in -> out is a single closed strand;
  //  - without crossings: arc_count is 1 (the unknot).
  KnotDiagram(std::size_t arc_count, std::vector<Crossing> crossings);

  std::size_t arc_count() const noexcept { return arc_count_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  friend bool operator==(const KnotDiagram&, const KnotDiagram&) = default;

 private:
  std::size_t arc_count_;
  std::vector<Crossing> crossings_;
};

// Line format:
//   arcs <n>
//   crossing over=<i> in=<j> out=<k> sign=<+|->
// `#` starts a comment. Syntax errors carry the line number.
KnotDiagram parse_diagram(std::string_view text);
std::string format_diagram(const KnotDiagram& d);

// Generators a1..an, one relator per crossing in crossing order:
//   sign +1:  a_over a_in a_over^-1 a_out^-1
//   sign -1:  a_over^-1 a_in a_over a_out^-1
Presentation wirtinger_presentation(const KnotDiagram& d);

// "unknot", "trefoil", "paper-5crossing". Throws DomainError otherwise.
KnotDiagram builtin_diagram(std::string_view name);
std::vector<std::string> builtin_diagram_names();

}  // namespace knotgrp
