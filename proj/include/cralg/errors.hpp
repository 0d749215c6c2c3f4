#ifndef CRALG_ERRORS_HPP
#define CRALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cralg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedTableError : Error { using Error::Error; };
struct CompositionError : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };
struct BasepointError : Error { using Error::Error; };
struct ImplicitSolveError : Error { using Error::Error; };
struct NormalizationError : Error { using Error::Error; };
struct TangencyError : Error { using Error::Error; };
struct TableMismatchError : Error { using Error::Error; };

// A verified hypothesis of the theorem does not hold for the given input;
// what() names the violated condition.
struct HypothesisFailed : Error { using Error::Error; };

// The working truncation order is too small for the requested computation.
struct OrderInsufficient : Error {
    OrderInsufficient(const std::string& msg, int required)
        : Error(msg), required_order(required) {}
    int required_order;
};

// A bounded search (annihilator recovery) exhausted its candidates.
struct NotFound : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace cralg

#endif
