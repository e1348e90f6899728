#pragma once

#include <stdexcept>
#include <string>

namespace fraciter {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation
// (ln of a non-positive number, a point outside a branch interval, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Target value outside the range of an invertible function
// (Abel values never reach t <= -2 on the leftmost branch, ...).
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// A limit process hit its iteration cap before meeting tolerance.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& what) : Error(what) {}
};

// Evaluation too close to a fixed point: the value grows without bound.
class DivergenceError : public RangeError {
public:
    explicit DivergenceError(const std::string& what) : RangeError(what) {}
};

}  // namespace fraciter
