#pragma once

#include <stdexcept>
#include <string>

namespace ncplane {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text. Carries a 0-based character position.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Mismatched or incomplete algebra/parameter contexts.
class context_error : public error {
public:
    explicit context_error(const std::string& msg) : error(msg) {}
};

/// A documented operation precondition does not hold.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

/// The library detected a breach of one of its own invariants.
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace ncplane
