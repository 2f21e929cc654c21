#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lightlike {

enum class ErrorKind {
    syntax,
    unknown_identifier,
    missing_key,
    bad_range,
    domain,
    not_lightlike,
    rank_zero,
    degenerate_input,
    singular_decomposition,
    grid_failure,
    unknown_surface,
    generation_failed,
    io,
    bad_argument,
};

/// Base error type; every failure carries a kind so the C API can map it
/// to a status code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed expression or surface file, with the byte offset of the
/// offending token in the parsed text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::syntax,
                "syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Identifier that is not a variable, named constant, or supported function.
class UnknownIdentifier : public Error {
public:
    UnknownIdentifier(std::size_t offset, const std::string& name)
        : Error(ErrorKind::unknown_identifier,
                "unknown identifier \"" + name + "\" at offset " + std::to_string(offset)),
          offset_(offset),
          name_(name) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& name() const noexcept { return name_; }

private:
    std::size_t offset_;
    std::string name_;
};

/// Raised when a surface sample has a non-degenerate induced metric.
class NotLightlike : public Error {
public:
    explicit NotLightlike(double det);

    double det() const noexcept { return det_; }

private:
    double det_;
};

Error missing_key_error(const std::string& key);
Error bad_range_error(const std::string& key, double lo, double hi);
Error domain_error(const std::string& message);
Error rank_zero_error(const std::string& message);
Error degenerate_input_error(const std::string& message);
Error singular_decomposition_error(double condition);
Error grid_failure_error(const std::string& message);
Error unknown_surface_error(const std::string& name);
Error generation_failed_error(const std::string& message);
Error io_error(const std::string& message);
Error bad_argument_error(const std::string& message);

} // namespace lightlike
