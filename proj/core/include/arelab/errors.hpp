#pragma once

#include <stdexcept>
#include <string>

namespace arelab {

// Exit-code conventions used by the CLI: 0 success, 2 configuration/input
// error, 3 numeric or convergence error, 4 I/O error.
enum class ErrorCode : int {
    Config = 2,
    Numeric = 3,
    Io = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parameter outside its admissible range (theta outside the model domain,
// invalid alpha/beta, malformed grids, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(ErrorCode::Config, msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(ErrorCode::Config, msg) {}
};

// Tied coordinates where the continuity assumption requires distinct values.
class TieError : public Error {
public:
    explicit TieError(const std::string& msg) : Error(ErrorCode::Config, msg) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& msg) : Error(ErrorCode::Config, msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(ErrorCode::Io, msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(ErrorCode::Io, msg) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(ErrorCode::Numeric, msg) {}
};

// Quadrature/search failed to converge; carries the best estimate reached.
class ConvergenceError : public NumericError {
public:
    ConvergenceError(const std::string& msg, double achieved, double est_error)
        : NumericError(msg), achieved_(achieved), est_error_(est_error) {}
    double achieved() const noexcept { return achieved_; }
    double est_error() const noexcept { return est_error_; }

private:
    double achieved_;
    double est_error_;
};

// Variance (or denominator derivative) collapsed below the usable floor.
class DegeneracyError : public NumericError {
public:
    explicit DegeneracyError(const std::string& msg) : NumericError(msg) {}
};

// Neither a first-order derivative ratio nor the secant ratio stabilizes.
class InconclusiveError : public NumericError {
public:
    explicit InconclusiveError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace arelab
