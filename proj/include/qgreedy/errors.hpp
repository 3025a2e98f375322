#pragma once

#include <stdexcept>
#include <string>

namespace qgreedy {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A torus division that has no Laurent quotient.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// Re-expansion in another cluster left the quantum torus of that cluster.
class NotLaurent : public Error {
public:
    using Error::Error;
};

class NotPointed : public Error {
public:
    using Error::Error;
};

/// The two branches of the greedy recurrence disagree on the tie line, or a
/// support bound could not be established. Indicates a bug, never bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class OrderViolation : public Error {
public:
    using Error::Error;
};

class P1Violation : public Error {
public:
    using Error::Error;
};

class P2Violation : public Error {
public:
    using Error::Error;
};

class NonTermination : public Error {
public:
    using Error::Error;
};

} // namespace qgreedy
