#pragma once

#include <stdexcept>
#include <string>

namespace betaseq {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAPairCode : public Error {
public:
    using Error::Error;
};

class ZeroModulus : public Error {
public:
    ZeroModulus() : Error("remainder modulo zero is undefined") {}
};

/// An operation was asked to leave the naturals (e.g. i - (k'+1) < 0).
class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class UnknownAxiom : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace betaseq
