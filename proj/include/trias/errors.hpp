#pragma once

#include <stdexcept>
#include <string>

namespace trias {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& m) : Error(m) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& m) : Error(m) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error(m) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& m) : Error(m) {}
};

// parse errors carry a byte offset into the offending text
struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& m, size_t at) : Error(m + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(m) {}
};

struct ConstraintError : Error {
    explicit ConstraintError(const std::string& m) : Error(m) {}
};

struct ArityError : Error {
    explicit ArityError(const std::string& m) : Error(m) {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& m) : Error(m) {}
};

struct InputError : Error {
    explicit InputError(const std::string& m) : Error(m) {}
};

} // namespace trias
