#pragma once

#include <stdexcept>
#include <string>

namespace primegraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad tree file, non-coprime moduli, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured prime-search candidate cap ran out before a prime was found.
class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An exhaustive computation was asked to run beyond its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace primegraph
