#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace helson {

// Exit-code families used by the command line front end.
enum class ErrorKind { validation = 2, resource = 3, verification = 4 };

class HelsonError : public std::runtime_error {
public:
    HelsonError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

// Carries every violated constraint, not just the first.
class ValidationError : public HelsonError {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

inline ValidationError::ValidationError(std::vector<std::string> violations)
    : HelsonError(ErrorKind::validation,
                  violations.empty() ? std::string("invalid input") : violations.front()),
      violations_(std::move(violations)) {}

class ResourceError : public HelsonError {
public:
    explicit ResourceError(const std::string& what) : HelsonError(ErrorKind::resource, what) {}
};

class VerificationError : public HelsonError {
public:
    explicit VerificationError(const std::string& what)
        : HelsonError(ErrorKind::verification, what) {}
};

}  // namespace helson
