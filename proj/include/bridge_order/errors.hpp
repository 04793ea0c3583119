#pragma once

#include <stdexcept>
#include <string>

namespace bridge_order {

// Base for every domain error raised by the library. Callers that only care
// about "the input violated a precondition" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

// A continued-fraction tail evaluated to zero and had to be inverted.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NotAKnot : public Error {
public:
    using Error::Error;
};

class NotALink : public Error {
public:
    using Error::Error;
};

class LinkNotOrdered : public Error {
public:
    using Error::Error;
};

class NoUpperBound : public Error {
public:
    using Error::Error;
};

class NotADoubleParsing : public Error {
public:
    using Error::Error;
};

// The double parsing exists but cannot be drawn as a corner-to-corner path.
class NotRepresentable : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

} // namespace bridge_order
