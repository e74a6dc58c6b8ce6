#pragma once

#include <stdexcept>
#include <string>

namespace hms {

/// Base of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Byte input with the wrong length or encoding.
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// TxPool refused a transaction (nonce gap or reuse).
class RejectedSubmission : public Error {
public:
    using Error::Error;
};

/// A state-changing call was passed to argument augmentation.
class RefusedAugmentation : public Error {
public:
    using Error::Error;
};

class InvalidDuration : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// The successor graph handed to the series search was not acyclic.
class CycleDetected : public Error {
public:
    using Error::Error;
};

} // namespace hms
