#pragma once

#include <stdexcept>
#include <string>

namespace varqa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_number(line) {}
  long line_number;
};

struct IndexError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct DimensionTooLarge : Error {
  using Error::Error;
};

struct ImaginaryResidue : Error {
  using Error::Error;
};

struct NonUnitState : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct EmptyDistribution : Error {
  using Error::Error;
};

struct UnsupportedConversion : Error {
  using Error::Error;
};

}  // namespace varqa
