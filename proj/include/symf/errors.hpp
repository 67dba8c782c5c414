#pragma once

#include <stdexcept>
#include <string>

namespace symf {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorKind : int {
    usage = 1,
    parse = 2,
    degree = 3,
    resource = 4,
    selftest = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(ErrorKind::parse, what), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Degree mismatch in a graded operation, or a series asked beyond its truncation.
class DegreeError : public Error {
public:
    explicit DegreeError(const std::string& what) : Error(ErrorKind::degree, what) {}
};

class TruncationError : public DegreeError {
public:
    explicit TruncationError(const std::string& what) : DegreeError(what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

} // namespace symf
