#pragma once

#include <stdexcept>
#include <string>

namespace hfdlab {

/// Base class for all hfdlab errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A group presentation with a modulus < 2.
class InvalidGroupError : public Error {
public:
    using Error::Error;
};

/// Elements from different groups mixed in one operation.
class IncompatibleElementError : public Error {
public:
    using Error::Error;
};

/// A sequence that is not zero-sum, or not over the expected class subset.
class InvalidSequenceError : public Error {
public:
    using Error::Error;
};

/// A parameter outside its documented range (r < 2, bad bound, ...).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// The completion procedure exceeded its candidate cap. The computation is
/// aborted with no partial answer.
class ResourceCapError : public Error {
public:
    using Error::Error;
};

/// Bad localization setup: a non-good generator, or the generator set is
/// not divisor-closed within the checked bound.
class LocalizationError : public Error {
public:
    using Error::Error;
};

/// Quadratic integers with different radicands mixed in one operation.
class IncompatibleRingError : public Error {
public:
    using Error::Error;
};

/// Zero or a unit passed where a nonzero nonunit is required.
class ZeroOrUnitError : public Error {
public:
    using Error::Error;
};

} // namespace hfdlab
