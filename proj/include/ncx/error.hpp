#pragma once

#include <stdexcept>
#include <string>

namespace ncx {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix/map shapes.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Operation not available over the given coefficient domain.
struct DomainError : Error {
    using Error::Error;
};

/// Amplitude parameter outside its legal range.
struct AmplitudeError : Error {
    using Error::Error;
};

/// gens_small does not generate a subobject of span(gens_big).
struct NotASubobject : Error {
    using Error::Error;
};

/// Structurally malformed complex or chain map; message names the offending degree.
struct ShapeError : Error {
    using Error::Error;
};

/// Malformed input document.
struct ParseError : Error {
    using Error::Error;
};

/// Document parses but the complex fails the nilpotency law.
struct ValidationError : Error {
    using Error::Error;
};

/// A supplied homotopy witness does not realize the map it claims to.
struct WitnessInvalid : Error {
    using Error::Error;
};

} // namespace ncx
