#ifndef LRSOS_ERRORS_HPP
#define LRSOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrsos {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A variety specification violates its invariants.
struct InvalidSpecError : Error {
    using Error::Error;
};

/// The degree-d complement of the cubic's leading ideal does not behave
/// like the coordinate ring of a plane curve.
struct DegenerateCubicError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Dense Hessian requested above the materialization limit.
struct SizeLimitError : Error {
    using Error::Error;
};

/// Restricted path started from a tuple that does not represent f - v_lower*g.
struct InfeasibleStartError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace lrsos

#endif
