#pragma once

#include <stdexcept>
#include <string>

namespace parmod {

// Base for every error raised by the library. Subsystems derive from it so
// callers can catch broadly or narrowly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace exact {

class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not divisible") {}
};

class DegreeTooSmall : public Error {
public:
    DegreeTooSmall() : Error("degree too small for resultant") {}
};

class IrrationalRoot : public Error {
public:
    IrrationalRoot() : Error("polynomial has a non-rational root") {}
};

class Inconsistent : public Error {
public:
    Inconsistent() : Error("linear system is inconsistent") {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace exact
}  // namespace parmod
