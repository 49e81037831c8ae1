#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division by zero in the scalar field.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Shape or degree mismatch between operands.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// The spectrum of a matrix is not rational (or the matrix is defective),
// so an exact eigendecomposition does not exist.
class SpectralError : public Error {
public:
    explicit SpectralError(const std::string& what) : Error(what) {}
};

// A matrix claimed to be special unitary failed the exact check.
class NotSpecialUnitary : public Error {
public:
    NotSpecialUnitary() : Error("not special unitary") {}
};

// A coboundary sequence fails delta(delta(x)) = 0 at the reported degree.
class NotAComplex : public Error {
public:
    explicit NotAComplex(int degree)
        : Error("not a complex: delta^" + std::to_string(degree + 1) +
                " o delta^" + std::to_string(degree) + " != 0"),
          degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

// A frozen sign/basis convention turned out to be internally inconsistent.
// These must never fire once the conventions are frozen; they exist so a
// bad edit is caught loudly instead of producing wrong mathematics.
class ConventionError : public Error {
public:
    explicit ConventionError(const std::string& what) : Error(what) {}
};

} // namespace cayley
