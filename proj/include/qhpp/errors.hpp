#pragma once

#include <stdexcept>
#include <string>

namespace qhpp {

// Base class for all domain errors raised by this library. Precondition
// misuse (bad dimensions, out-of-range indices) throws std::invalid_argument
// instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NonRationalResult : Error { using Error::Error; };
struct BranchMismatch : Error { using Error::Error; };
struct UnsupportedAction : Error { using Error::Error; };
struct InvalidChain : Error { using Error::Error; };
struct NoTripleCover : Error { using Error::Error; };
struct BranchCountMismatch : Error { using Error::Error; };
struct NonIntegralSolution : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ReferenceError : Error { using Error::Error; };

} // namespace qhpp
