// errors.hpp: exception hierarchy shared by every module

#pragma once

#include <stdexcept>
#include <string>

namespace tlagauge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a formula (e.g. omega <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed input data: unsorted tables, non-Hermitian matrices, bad bands.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Individually valid options that cannot be combined.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Unitary propagation lost its error bound (norm drift).
class PropagationError : public Error {
public:
    using Error::Error;
};

// Density-matrix integration lost trace or Hermiticity.
class IntegrationError : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_domain(const std::string& what);
[[noreturn]] void throw_validation(const std::string& what);
[[noreturn]] void throw_configuration(const std::string& what);

} // namespace tlagauge
