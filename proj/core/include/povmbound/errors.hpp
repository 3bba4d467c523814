#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace povmbound {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes disagree, or a matrix that must be square is not.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// A matrix required to be Hermitian deviates from its adjoint beyond tolerance.
class NonHermitianError : public Error {
public:
    NonHermitianError(const std::string& what, double defect, std::ptrdiff_t element = -1)
        : Error(what), defect_(defect), element_(element) {}

    /// Max entrywise |A - A^dagger|.
    double defect() const noexcept { return defect_; }
    /// Offending element index for list inputs, -1 otherwise.
    std::ptrdiff_t element() const noexcept { return element_; }

private:
    double defect_;
    std::ptrdiff_t element_;
};

/// The iterative eigensolver did not converge.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// An operator required to be positive semidefinite has a genuinely negative eigenvalue.
class NotPositiveError : public Error {
public:
    NotPositiveError(const std::string& what, double min_eigenvalue, std::ptrdiff_t element = -1)
        : Error(what), min_eigenvalue_(min_eigenvalue), element_(element) {}

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }
    std::ptrdiff_t element() const noexcept { return element_; }

private:
    double min_eigenvalue_;
    std::ptrdiff_t element_;
};

/// Measurement elements do not sum to the identity within tolerance.
class IncompleteError : public Error {
public:
    IncompleteError(const std::string& what, double max_deviation)
        : Error(what), max_deviation_(max_deviation) {}

    /// Max entrywise |sum - identity|.
    double max_deviation() const noexcept { return max_deviation_; }

private:
    double max_deviation_;
};

/// Entropy order outside (0, inf).
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of the requested operation (e.g. no finite conjugate order).
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Random measurement construction failed repeatedly on singular normalizations.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

/// Instance file is not syntactically well formed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input parsed but violates a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace povmbound
