#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfadm {

enum class ErrorKind {
    usage,               // violated precondition (order mismatch, bad domain, invalid spec)
    parse,               // expression or problem-file syntax
    singular_division,   // series divisor with vanishing constant term
    evaluation,          // scalar division by zero, non-finite value
    numeric,             // quadrature failure, degree cap, non-finite coefficients
    unsupported_backend, // exact backend asked to do something it cannot
    bound_inapplicable,  // gamma >= 1
    no_convergence,      // Newton divergence, singular Jacobian
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::parse, what + " at position " + std::to_string(position)),
          position_(position) {}
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[nodiscard]] const char* to_string(ErrorKind kind) noexcept;

}  // namespace gfadm
