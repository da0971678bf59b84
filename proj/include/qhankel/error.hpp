#pragma once

#include <stdexcept>
#include <string>

namespace qhankel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

class SubstitutionSingularError : public Error {
public:
    explicit SubstitutionSingularError(const std::string& what) : Error(what) {}
};

class InsufficientSequenceError : public Error {
public:
    explicit InsufficientSequenceError(const std::string& what) : Error(what) {}
};

class DegenerateMomentsError : public Error {
public:
    explicit DegenerateMomentsError(const std::string& what) : Error(what) {}
};

class InsufficientMomentsError : public Error {
public:
    explicit InsufficientMomentsError(const std::string& what) : Error(what) {}
};

}  // namespace qhankel
