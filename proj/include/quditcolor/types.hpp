#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcolor {

using cplx = std::complex<double>;

/// Input failed semantic validation (bad graph file, impossible parameters).
/// The CLI maps this family to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input; carries the 1-based line number when known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, int line)
        : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// A size guard tripped (state too large for dense simulation, etc.).
/// The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

enum class WireRole { Data, Ancilla, Flag, Output };

std::string wire_role_name(WireRole role);
WireRole wire_role_from_name(const std::string& name);

} // namespace qcolor
