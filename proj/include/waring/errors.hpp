#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Bad arguments or violated preconditions (CLI exit code 2).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or inconsistent data files (CLI exit code 2).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Resource budget exhausted before completion (CLI exit code 3).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace waring
