#pragma once

#include <stdexcept>
#include <string>

namespace ontic {

// Base for every error raised by the library. The CLI maps these to exit
// code 1 (configuration/usage) unless stated otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two vectors/operators/measurements live on different labeled spaces.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

// b >= a (equivalently a^2 <= 1/2) is violated, or a^2 is not in (0, 1].
class HypothesisOutOfRange : public InvalidConfig {
public:
    using InvalidConfig::InvalidConfig;
};

// Conditioning on an outcome whose probability at the given ontic state is 0.
class UndefinedConditional : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

// Malformed model/config file; the message carries the JSON location.
class SchemaError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class FragmentMismatch : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

// An exact value was requested but the quantity is irrational or float-backed.
class NotRepresentable : public Error {
public:
    using Error::Error;
};

}  // namespace ontic
