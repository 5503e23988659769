#pragma once

#include <stdexcept>
#include <string>

namespace qmirror {

enum class ErrorKind {
    DomainOverflow,   // zeta(3)^2, log-degree > 3, u-degree > 3
    Unsupported,      // inverting a non-monomial constant, infinite truncation
    Ambiguity,        // inhomogeneous right side clashes with the indicial root
    Inconsistency,    // an identity that must hold exactly does not
    Precondition,     // malformed input (normalization, order, support)
    Admissibility,    // relative weight filtration does not exist
    Parse,            // malformed serialized input
};

const char* to_string(ErrorKind kind) noexcept;

class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw MathError(kind, what); }

}  // namespace qmirror
