#pragma once

#include <stdexcept>
#include <string>

namespace braidvar {

// Input violates a mathematical precondition (e.g. a braid whose Demazure
// product is not w_0, a zero where a unit is required).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A deterministic work budget ran out before an answer was reached.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A trivalent move met a zero right input. Layer and position are 1-based.
class TrivalentNeedsUnit : public DomainError {
 public:
  TrivalentNeedsUnit(int layer, int pos)
      : DomainError("trivalent move at layer " + std::to_string(layer) + ", position " + std::to_string(pos) +
                    " needs an invertible right input"),
        layer(layer),
        pos(pos) {}
  int layer;
  int pos;
};

// A cup move met a nonzero right input. Layer and position are 1-based.
class CupNeedsZero : public DomainError {
 public:
  CupNeedsZero(int layer, int pos)
      : DomainError("cup move at layer " + std::to_string(layer) + ", position " + std::to_string(pos) +
                    " needs a zero right input"),
        layer(layer),
        pos(pos) {}
  int layer;
  int pos;
};

// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidvar
