#include "knotgrp/invariants.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "knotgrp/error.hpp"

namespace knotgrp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const BigInt& k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const BigInt& k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? ", " : "") << a(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    for (const auto& s : p.relators()[r].syllables()) {
      m(r, *p.alphabet().position(s.gen)) += s.exp;
    }
  }
  return m;
}

namespace {

using boost::multiprecision::abs;

// Least-|value| nonzero entry in the block [t.., t..], row-major ties.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& d,
                                                             std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t r = t; r < d.rows(); ++r) {
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      BigInt v = abs(d(r, c));
      if (!best || v < best_abs) {
        best = {r, c};
        best_abs = v;
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = f.diagonal;
  IntMatrix& u = f.left;
  IntMatrix& v = f.right;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      auto pivot = min_pivot(d, t);
      if (!pivot) return f;  // remaining block is zero
      d.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        BigInt q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        BigInt q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder becomes the next pivot

      // Divisibility: fold an offending row into the pivot row.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < d.rows() && !offending; ++r) {
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (d(r, c) % d(t, t) != 0) {
            offending = r;
            break;
          }
        }
      }
      if (!offending) break;
      d.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return f;
}

BigInt AbelianInvariants::order() const {
  if (free_rank > 0) return 0;
  BigInt n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

AbelianInvariants abelianization(const Presentation& p) {
  SmithForm f = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  const std::size_t diag = std::min(f.diagonal.rows(), f.diagonal.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    const BigInt& x = f.diagonal(i, i);
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) inv.torsion.push_back(x);
  }
  inv.free_rank = p.generator_count() - nonzero;
  return inv;
}

std::string format_abelian(const AbelianInvariants& inv) {
  std::string out;
  if (inv.free_rank > 0) out = "Z^" + std::to_string(inv.free_rank);
  for (const auto& d : inv.torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

std::uint64_t hom_count(const Presentation& p, const FiniteGroupTable& target,
                        std::uint64_t max_evaluations) {
  const std::size_t k = p.generator_count();
  const std::uint64_t order = target.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > max_evaluations / order) {
      throw BudgetError("hom count into " + target.name() + " needs " +
                        std::to_string(order) + "^" + std::to_string(k) +
                        " assignments, over the budget of " +
                        std::to_string(max_evaluations));
    }
    total *= order;
  }
  if (total > max_evaluations) {
    throw BudgetError("hom count exceeds the budget of " +
                      std::to_string(max_evaluations));
  }

  // Depth-first over generator positions; a relator is checked as soon as
  // every generator it mentions has been assigned.
  std::vector<std::vector<const Word*>> ready(k + 1);
  for (const auto& r : p.relators()) {
    std::size_t last = 0;
    for (const auto& s : r.syllables()) {
      last = std::max(last, *p.alphabet().position(s.gen) + 1);
    }
    ready[last].push_back(&r);
  }
  std::vector<Element> assignment(k, target.identity());
  auto satisfied = [&](std::size_t depth) {
    for (const Word* r : ready[depth]) {
      if (evaluate_word(p, *r, assignment, target) != target.identity()) {
        return false;
      }
    }
    return true;
  };
  std::uint64_t count = 0;
  auto descend = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      ++count;
      return;
    }
    for (Element x = 0; x < order; ++x) {
      assignment[pos] = x;
      if (satisfied(pos + 1)) self(self, pos + 1);
    }
    assignment[pos] = target.identity();
  };
  descend(descend, 0);
  return count;
}

InvariantProfile invariant_profile(const Presentation& p,
                                   const std::vector<std::string>& targets,
                                   std::uint64_t max_evaluations) {
  InvariantProfile profile{abelianization(p), {}};
  for (const auto& name : targets) {
    profile.hom_counts.emplace_back(
        name, hom_count(p, builtin_table(name), max_evaluations));
  }
  return profile;
}

std::string format_profile(const InvariantProfile& profile) {
  std::string out =
      "# invariant profile: equal profiles are necessary, not sufficient, "
      "for isomorphism\n";
  out += "abelian: " + format_abelian(profile.abelian) + "\n";
  for (const auto& [name, count] : profile.hom_counts) {
    out += "hom " + name + ": " + std::to_string(count) + "\n";
  }
  return out;
}

std::string format_profile_kv(const InvariantProfile& profile) {
  std::string out = "abelian\t" + format_abelian(profile.abelian) + "\n";
  out += "abelian.free_rank\t" + std::to_string(profile.abelian.free_rank) + "\n";
  std::string torsion;
  for (const auto& d : profile.abelian.torsion) {
    if (!torsion.empty()) torsion += ',';
    torsion += d.str();
  }
  out += "abelian.torsion\t" + torsion + "\n";
  for (const auto& [name, count] : profile.hom_counts) {
    out += "hom." + name + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace knotgrp
