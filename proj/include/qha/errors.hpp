// Error taxonomy shared by every layer. All failures that reflect bad *input*
// (unparsable files, axiom violations, size mismatches) derive from Error and
// carry a human-readable witness so the CLI can print why, not just that.
#ifndef QHA_ERRORS_HPP
#define QHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed; message carries line/column context.
struct ParseError : Error {
    using Error::Error;
};

// Operands have incompatible sizes (matrix shapes, ambient dimensions, ...).
struct DimensionMismatch : Error {
    using Error::Error;
};

// A structural axiom fails on otherwise well-formed data: non-associative
// table, subspace not an ideal, grid not multiplicative, module action not
// an algebra map. Message names the witness triple/entry.
struct ValidationError : Error {
    using Error::Error;
};

// A semisimple quotient could not be split into matrix blocks over the
// rationals. Raised instead of ever returning a wrong decomposition.
struct NonSplitSemisimpleQuotient : Error {
    using Error::Error;
};

// Quotient of a path algebra could not be certified finite-dimensional
// within the path-length bound.
struct InfiniteDimensional : Error {
    using Error::Error;
};

// An element expected to be nilpotent is not (radical verification).
struct NotNilpotent : Error {
    using Error::Error;
};

// A simple-module label was requested that the weight set does not contain.
struct UnknownLabel : Error {
    using Error::Error;
};

}  // namespace qha

#endif
