#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace exacthull {

// Base class for domain errors. Running out of search budget is not an
// error (see FuelExhausted in fuel.hpp); these signal contract violations
// detected on the data itself.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input fails a geometric nondegeneracy requirement.
struct InputDegenerateError : Error {
  using Error::Error;
};

struct CollinearTripleError : InputDegenerateError {
  CollinearTripleError(std::size_t i, std::size_t j, std::size_t k)
      : InputDegenerateError("collinear triple at indices " + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(k)),
        indices{i, j, k} {}
  std::array<std::size_t, 3> indices;
};

struct DuplicatePointError : InputDegenerateError {
  DuplicatePointError(std::size_t i, std::size_t j)
      : InputDegenerateError("duplicate point at indices " + std::to_string(i) + ", " +
                             std::to_string(j)),
        indices{i, j} {}
  std::array<std::size_t, 2> indices;
};

// A separation witness failed to resolve a decision it claims to cover.
struct WitnessTooWeakError : Error {
  using Error::Error;
};

// A promise flag on the data was observed to be false during a search.
struct PromiseViolationError : Error {
  using Error::Error;
};

// A checked precondition (e.g. the origin being apart from a line) fails.
struct PreconditionViolatedError : Error {
  using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
  int line;
};

}  // namespace exacthull
