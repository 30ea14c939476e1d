#pragma once

#include <stdexcept>
#include <string>

namespace dyncol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad graph text, bad JSON shape, out-of-range ids.
struct InputError : Error {
    using Error::Error;
};

struct InvalidGraph : InputError {
    using InputError::InputError;
};

struct EmptyGraph : Error {
    using Error::Error;
};

struct UncoloredVertex : Error {
    using Error::Error;
};

struct PathTooShort : Error {
    using Error::Error;
};

struct ThresholdExceeded : Error {
    using Error::Error;
};

struct MalformedCertificate : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct PreconditionMad : Error {
    using Error::Error;
};

struct ListTooShort : Error {
    using Error::Error;
};

struct InvalidPartial : Error {
    using Error::Error;
};

// A proof guard failed during extension. Never expected on valid input.
struct InternalExtensionFailure : Error {
    using Error::Error;
};

} // namespace dyncol
