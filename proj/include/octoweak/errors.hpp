#pragma once

#include <stdexcept>
#include <string>

namespace octoweak {

/// Raised by inverse() for elements whose composition norm vanishes.
class ZeroDivisor : public std::domain_error {
public:
    explicit ZeroDivisor(const std::string& what) : std::domain_error(what) {}
};

/// Raised by exp_assoc() when the argument has components outside C⊗A.
class NotInAssociativeSubalgebra : public std::domain_error {
public:
    explicit NotInAssociativeSubalgebra(const std::string& what) : std::domain_error(what) {}
};

/// An argument failed a subspace membership precondition (A, B, A⁻, ...).
class DomainViolation : public std::invalid_argument {
public:
    explicit DomainViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Two algebraically equivalent evaluation routes disagreed.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

class UnknownSuite : public std::invalid_argument {
public:
    explicit UnknownSuite(const std::string& id) : std::invalid_argument("unknown suite: " + id) {}
};

}  // namespace octoweak
