#ifndef FPA_ERRORS_HPP
#define FPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpa {

// Coefficient of a word longer than the truncation degree was requested.
// Such coefficients are unknown, not zero.
struct DegreeError : std::runtime_error {
  explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

// Alphabet / component-count / truncation-degree mismatch between operands.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Operand outside the domain of the operation (proper series where a unit
// is required, sigma outside ]0,1[, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Wiener-Fliess / feedback pair violating the admissibility conditions:
// the noncommutative series is non-proper and the commutative series is
// not a polynomial.
struct AdmissibilityError : std::runtime_error {
  explicit AdmissibilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A fixed-point loop failed to stabilize within its iteration cap.  The
// contraction lemmas guarantee termination, so this signals a bug.
struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace fpa

#endif
