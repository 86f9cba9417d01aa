// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bmc {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters: out-of-range (n, k), unsupported block size, violated
// distribution constraints, and similar caller mistakes.
struct ParamError : Error {
    using Error::Error;
};

// A bit sequence that is not a valid code for the given parameters.
struct InvalidCodeError : Error {
    using Error::Error;
};

// A value outside the representable range of an alphabet.
struct RangeError : Error {
    using Error::Error;
};

// A block record whose flag/code combination cannot decode.
struct MalformedRecordError : Error {
    using Error::Error;
};

// A channel set that cannot be decoded: core exhausted mid-code, flag value
// out of range, inconsistent channel lengths, nonzero padding, trailing bits.
struct CorruptChannelError : Error {
    using Error::Error;
};

// Filesystem-level failures (missing file, short write, ...).
struct IoError : Error {
    using Error::Error;
};

// Structural problems in a serialized container. The four concrete kinds
// below are distinct so callers can tell them apart; everything else
// (bad form byte, record-count mismatch, trailing bytes) throws the base.
struct ContainerError : Error {
    using Error::Error;
};

struct BadMagicError : ContainerError {
    using ContainerError::ContainerError;
};

struct BadVersionError : ContainerError {
    using ContainerError::ContainerError;
};

struct TruncatedError : ContainerError {
    using ContainerError::ContainerError;
};

struct PaddingError : ContainerError {
    using ContainerError::ContainerError;
};

}  // namespace bmc
