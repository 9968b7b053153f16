#pragma once

#include <stdexcept>
#include <string>

namespace vck {

/// Malformed or inconsistent caller input (bad ids, broken invariants, bad files).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input is well-formed but exceeds a hard size guard (oracle enumeration limits,
/// decomposition width limits).
class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested objective cannot be met (uncoverable universe, unreachable target).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// File parsing failure; carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace vck
