#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotgrp {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (bad torus parameters, foreign
// generators, inapplicable Tietze moves, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text in word, presentation or diagram notation.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structurally well-formed input that violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// A brute-force search would exceed its evaluation budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotgrp
