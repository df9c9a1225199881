#pragma once

#include <stdexcept>
#include <string>

namespace svcurves {

// Enumeration or sampling would exceed the desk-scale budget (CLI exit 3).
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs are well-formed but mathematically inconsistent, e.g. point counts
// that do not come from a curve of the claimed genus (CLI exit 2).
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Truncated-series precision ran out; callers may re-expand deeper and retry.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace svcurves
