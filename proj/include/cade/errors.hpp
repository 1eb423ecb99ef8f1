#ifndef CADE_ERRORS_HPP
#define CADE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cade {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent configuration (exit code 2 at the CLI).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// A required input artifact is missing or unreadable (exit code 3).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Dimension or population-size violation.
class SizingError : public Error {
public:
    explicit SizingError(const std::string& msg) : Error(msg) {}
};

/// Non-finite values or other numeric failures (exit code 4).
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

/// Argument outside its documented domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Pretraining diverged or was handed an unusable state.
class TrainingError : public Error {
public:
    explicit TrainingError(const std::string& msg) : Error(msg) {}
};

/// Fitness evaluation failed for a specific individual.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& msg, std::size_t index)
        : Error(msg), individual_index(index) {}
    std::size_t individual_index;
};

} // namespace cade

#endif
