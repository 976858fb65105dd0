#pragma once

#include <stdexcept>
#include <string>

namespace unav {

// Malformed input document (file format, witness file, CLI input).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An exact oracle or enumeration was asked to exceed its instance-size budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace unav
