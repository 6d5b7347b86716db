#pragma once

#include <stdexcept>
#include <string>

namespace mocrop {

// Base class for everything this library throws on its own behalf.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally broken input: bad JSON, truncated binary stream, short pixel data.
class ParseError : public Error {
public:
    using Error::Error;
};

// Input is well-formed but of the wrong kind: bad magic, unsupported version.
class FormatError : public Error {
public:
    using Error::Error;
};

// Well-formed input whose values violate an invariant (out-of-bounds origin,
// mismatched frame dimensions, non-finite displacement).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Rejected configuration (bad ranges, empty area band).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure: missing file, unreadable stream.
class IoError : public Error {
public:
    using Error::Error;
};

// A box collapsed to zero width or height after pixel mapping. The pipeline
// treats this as a fallback trigger rather than a clip failure.
class DegenerateBoxError : public Error {
public:
    using Error::Error;
};

} // namespace mocrop
