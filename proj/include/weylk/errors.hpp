#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylk {

/// Base class for all errors raised by the kernel.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Configuration or usage problem (CLI exit code 2).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string &msg) : Error(msg) {}
};

/// Vector/matrix dimensions disagree with the ambient signature.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string &msg) : Error(msg) {}
};

// Lattice validation failures, one class per named violation.
class ZeroPrefixViolation : public ConfigError {
public:
    explicit ZeroPrefixViolation(const std::string &msg) : ConfigError(msg) {}
};

class DependentGenerators : public ConfigError {
public:
    explicit DependentGenerators(const std::string &msg) : ConfigError(msg) {}
};

class DegenerateLattice : public ConfigError {
public:
    explicit DegenerateLattice(const std::string &msg) : ConfigError(msg) {}
};

/// tau has a zero coordinate where a nonzero one is required.
class InvalidTau : public ConfigError {
public:
    explicit InvalidTau(const std::string &msg) : ConfigError(msg) {}
};

/// The form handed to the normalizer failed a postcondition check,
/// so it cannot have been a 2-cocycle.
class NonCocycleInput : public Error {
public:
    explicit NonCocycleInput(const std::string &msg) : Error(msg) {}
};

// Expression parsing errors.
class ParseError : public ConfigError {
public:
    explicit ParseError(const std::string &msg) : ConfigError(msg) {}
};

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t position, const std::string &expected)
        : ParseError("syntax error at position " + std::to_string(position) +
                     ": expected " + expected),
          position_(position), expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string &expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class NotInGamma : public ParseError {
public:
    explicit NotInGamma(const std::string &msg) : ParseError(msg) {}
};

class InvalidJIndex : public ParseError {
public:
    explicit InvalidJIndex(const std::string &msg) : ParseError(msg) {}
};

class InvalidDerivIndex : public ParseError {
public:
    explicit InvalidDerivIndex(const std::string &msg) : ParseError(msg) {}
};

/// Unknown suite name or a suite/config incompatibility.
class SuiteError : public ConfigError {
public:
    explicit SuiteError(const std::string &msg) : ConfigError(msg) {}
};

} // namespace weylk
