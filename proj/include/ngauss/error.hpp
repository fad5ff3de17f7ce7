#pragma once

#include <stdexcept>
#include <string>

namespace ngauss {

/// Coarse classification of failures. The CLI maps these onto exit codes.
enum class ErrorKind {
    InvalidInput,  // bad arguments, unreadable or malformed input
    Statistical,   // degenerate sample, region violation, infeasible target
    Numerical,     // an internal numerical routine failed to converge
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& what)
        : Error(ErrorKind::InvalidInput, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what)
        : Error(ErrorKind::InvalidInput, what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t row)
        : Error(ErrorKind::InvalidInput, "row " + std::to_string(row) + ": " + what),
          row_(row) {}

    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& what)
        : Error(ErrorKind::Statistical, what) {}
};

struct DegenerateSampleError : Error {
    explicit DegenerateSampleError(const std::string& what)
        : Error(ErrorKind::Statistical, what) {}
};

/// Argument outside the mathematical domain of a function (e.g. ln_gamma(0)).
struct DomainError : Error {
    explicit DomainError(const std::string& what)
        : Error(ErrorKind::Statistical, what) {}
};

/// Moments outside the Pearson type IV region.
struct RegionError : Error {
    explicit RegionError(const std::string& what)
        : Error(ErrorKind::Statistical, what) {}
};

/// A transformed value overflowed; index() names the offending element.
struct RangeError : Error {
    RangeError(const std::string& what, std::size_t index)
        : Error(ErrorKind::Statistical, what), index_(index) {}

    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Requested operation is not supported for this model or size.
struct CapabilityError : Error {
    explicit CapabilityError(const std::string& what)
        : Error(ErrorKind::Statistical, what) {}
};

struct NumericalError : Error {
    explicit NumericalError(const std::string& what)
        : Error(ErrorKind::Numerical, what) {}
};

}  // namespace ngauss
