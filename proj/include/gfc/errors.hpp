#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

// A requested computation would exceed the configured size budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A computed invariant contradicts a structural expectation (e.g. a class that
// must span a one-dimensional cohomology group does not).
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfc
