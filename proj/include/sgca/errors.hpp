#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgca {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// invalid input -> 1, budget exceeded -> 2.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_input_error : public error {
public:
    explicit invalid_input_error(const std::string& what) : error(what) {}
};

// Thrown when an exhaustive enumeration would exceed the configured budget.
// Carries the number of assignments that would have been required.
class budget_exceeded_error : public error {
public:
    budget_exceeded_error(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : error(what), required_(required), budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// Requested a Folner window for a family that has no Folner sequence
// (free monoids on >= 2 letters are not left-reversible).
class no_folner_error : public error {
public:
    explicit no_folner_error(const std::string& what) : error(what) {}
};

// Equivariance check: the two sides share no window cell.
class insufficient_window_error : public error {
public:
    explicit insufficient_window_error(const std::string& what) : error(what) {}
};

class parse_error : public invalid_input_error {
public:
    parse_error(int line, const std::string& what)
        : invalid_input_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace sgca
