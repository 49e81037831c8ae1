#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

#include "cayley/errors.hpp"
#include "cayley/rng.hpp"

namespace cayley {

// Element of the twelfth cyclotomic field Q(z), where z is a primitive 12th
// root of unity.  Elements are stored on the power basis {1, z, z^2, z^3}
// with exact rational coefficients; the minimal polynomial gives the single
// reduction rule z^4 = z^2 - 1.
//
// This field is the smallest one containing every scalar the library needs:
// the imaginary unit i = z^3, the primitive cube root of unity
// w = z^2 - 1, and sqrt(3) = 2z - z^3.
class CycNum {
public:
    CycNum() : c_{} {}
    CycNum(long n) : c_{} { c_[0] = n; }             // NOLINT: implicit by design
    CycNum(const mpq_class& r) : c_{} { c_[0] = r; } // NOLINT: implicit by design
    CycNum(mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3)
        : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    // z^k for any integer k (reduced mod 12).
    static CycNum zeta(int k = 1);
    static CycNum i() { return zeta(3); }
    static CycNum omega() { return CycNum(-1, 0, 1, 0); } // z^2 - 1
    static CycNum sqrt3() { return CycNum(0, 2, 0, -1); } // 2z - z^3

    const mpq_class& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_real() const; // fixed by complex conjugation

    // The rational value of a rational element; throws otherwise.
    const mpq_class& rational() const;

    // Complex conjugation, z -> z^11.
    CycNum conj() const;

    // Galois conjugate z -> z^k for k in {1, 5, 7, 11}.
    CycNum galois(int k) const;

    // Multiplicative inverse; throws DivisionByZero on zero.
    CycNum inverse() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Human-readable form, e.g. "1/2 + 3*z^2"; used in error messages and
    // test diagnostics only (serialization lives in the io module).
    std::string str() const;

private:
    std::array<mpq_class, 4> c_; // coefficients of 1, z, z^2, z^3
};

// |a|^2 = a * conj(a); real and nonnegative, rational whenever a has
// rational coordinates times roots of unity (always checked by callers that
// need a rational value).
CycNum norm_sq(const CycNum& a);

// Random element with small rational coordinates (for property tests).
CycNum random_cyc(Rng& rng);

// Random element that is frequently rational or pure-imaginary, to exercise
// degenerate branches as well as generic ones.
CycNum random_cyc_mixed(Rng& rng);

} // namespace cayley
