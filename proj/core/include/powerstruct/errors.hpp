#pragma once

#include <stdexcept>
#include <string>

namespace powerstruct {

/// A caller violated an operation's precondition (mismatched shapes,
/// non-unit constant term, missing local data, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public ContractError {
public:
    using ContractError::ContractError;
};

class NonUnitConstant : public ContractError {
public:
    explicit NonUnitConstant(const std::string &where)
        : ContractError(where + ": constant term is not the ring unit")
    {
    }
};

/// An exhaustive enumeration would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: class literals, JSON documents.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace powerstruct
