#pragma once

#include <stdexcept>
#include <string>

namespace zollech {

// Invalid argument outside a function's mathematical domain (nonpositive
// capacity, point outside |x|^2 < C, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Arithmetic or comparison between quantities carrying different powers of pi.
class UnitError : public std::domain_error {
 public:
  explicit UnitError(const std::string& what) : std::domain_error(what) {}
};

// A finite sequence ran out of terms before the requested index.
class ExhaustionError : public std::runtime_error {
 public:
  explicit ExhaustionError(const std::string& what) : std::runtime_error(what) {}
};

// No relative homology class exists between the two orbit sets.
class HomologyMismatchError : public std::domain_error {
 public:
  explicit HomologyMismatchError(const std::string& what) : std::domain_error(what) {}
};

// Grading requested for an orbit set outside the trivial homology class.
class GradingUndefinedError : public std::domain_error {
 public:
  explicit GradingUndefinedError(const std::string& what) : std::domain_error(what) {}
};

// An internal cross-check between two routes to the same value failed.
// Indicates a transcription bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A numerical routine could not certify its result to the requested tolerance.
class NumericalInstabilityError : public std::runtime_error {
 public:
  explicit NumericalInstabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A sampled curve does not bound a region (self-intersections, bad ordering).
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zollech
