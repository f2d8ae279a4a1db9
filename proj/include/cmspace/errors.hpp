#pragma once

#include <stdexcept>
#include <string>

namespace cmspace {

/// Caller violated a documented precondition (bad arguments, mismatched sizes).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument lies outside the mathematical domain (poles, division by zero).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cmspace
