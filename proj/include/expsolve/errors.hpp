#pragma once

#include <stdexcept>
#include <string>

namespace expsolve {

// Precondition or mathematical-domain violation (x <= 0, A <= e^e, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Numeric failure: non-finite intermediate, overflow, representability cap.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Iteration or bracketing did not converge within its budget.
class convergence_error : public numeric_error {
public:
    explicit convergence_error(const std::string& what) : numeric_error(what) {}
};

// Text did not parse.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    explicit parse_error(const std::string& what) : std::runtime_error(what), pos(0) {}
    std::size_t pos;
};

// Parsed fine but the value leaves the supported symbolic forms.
class unsupported_form_error : public parse_error {
public:
    explicit unsupported_form_error(const std::string& what)
        : parse_error("unsupported form: " + what) {}
};

} // namespace expsolve
