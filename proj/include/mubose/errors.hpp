#pragma once

#include <stdexcept>
#include <string>

namespace mubose {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument lies outside the mathematical domain of the operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// The requested quantity is a divergent series/limit.
class divergence_error : public error {
public:
    explicit divergence_error(const std::string& what) : error(what) {}
};

/// A convergent computation failed to reach the requested tolerance
/// within its term/iteration budget.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& what) : error(what) {}
};

/// A function evaluation produced a non-finite value.
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& what) : error(what) {}
};

} // namespace mubose
