#include "cayley/cyclotomic.hpp"

#include <sstream>

namespace cayley {

CycNum CycNum::zeta(int k) {
    // z^12 = 1, and z^4 = z^2 - 1 reduces the exponent range 0..11 to the
    // power basis.  Rather than hard-code twelve cases, multiply out: each
    // step of z^(j+1) = z * z^j shifts coefficients up one slot and folds
    // z^4 back down.
    int e = k % 12;
    if (e < 0) e += 12;
    CycNum r(1);
    for (int j = 0; j < e; ++j) {
        // (a0 + a1 z + a2 z^2 + a3 z^3) * z = a3 z^4 + ... = -a3 + a0 z + (a1+a3) z^2 + a2 z^3
        mpq_class a3 = r.c_[3];
        r.c_[3] = r.c_[2];
        r.c_[2] = r.c_[1] + a3;
        r.c_[1] = r.c_[0];
        r.c_[0] = -a3;
    }
    return r;
}

bool CycNum::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycNum::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycNum::is_real() const { return conj() == *this; }

const mpq_class& CycNum::rational() const {
    if (!is_rational())
        throw DimensionMismatch("expected a rational scalar, got " + str());
    return c_[0];
}

CycNum CycNum::conj() const { return galois(11); }

CycNum CycNum::galois(int k) const {
    // The Galois group of Q(z)/Q is (Z/12)^* = {1, 5, 7, 11}.  On the power
    // basis the three nontrivial automorphisms act by
    //   z -> z^5  = z^3 - z,   z^2 -> 1 - z^2,   z^3 -> z^3
    //   z -> z^7  = -z,        z^2 -> z^2,       z^3 -> -z^3
    //   z -> z^11 = z - z^3,   z^2 -> -(z^2-1),  z^3 -> ... (conjugation)
    switch (k) {
    case 1:
        return *this;
    case 5:
        return CycNum(c_[0] + c_[2], -c_[1], -c_[2], c_[1] + c_[3]);
    case 7:
        return CycNum(c_[0], -c_[1], c_[2], -c_[3]);
    case 11:
        return CycNum(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
    default:
        throw DimensionMismatch("no Galois automorphism z -> z^" + std::to_string(k));
    }
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Multiply by the three nontrivial Galois conjugates: the product of all
    // four conjugates is the field norm, a nonzero rational.
    CycNum cof = galois(5) * galois(7) * galois(11);
    CycNum nrm = *this * cof;
    if (!nrm.is_rational() || sgn(nrm.c_[0]) == 0)
        throw ConventionError("field norm failed to be a nonzero rational for " + str());
    const mpq_class& n = nrm.c_[0];
    return CycNum(cof.c_[0] / n, cof.c_[1] / n, cof.c_[2] / n, cof.c_[3] / n);
}

CycNum CycNum::operator-() const { return CycNum(-c_[0], -c_[1], -c_[2], -c_[3]); }

CycNum& CycNum::operator+=(const CycNum& o) {
    for (int k = 0; k < 4; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    for (int k = 0; k < 4; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    CycNum r = a;
    r += b;
    return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    CycNum r = a;
    r -= b;
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    // Convolve the coefficient arrays, then fold degrees 4..6 back into the
    // power basis using z^4 = z^2 - 1 (so z^5 = z^3 - z, z^6 = -1).
    std::array<mpq_class, 7> conv{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNum r;
    r.c_[0] = conv[0] - conv[4] - conv[6];
    r.c_[1] = conv[1] - conv[5];
    r.c_[2] = conv[2] + conv[4];
    r.c_[3] = conv[3] + conv[5];
    return r;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    static const char* name[4] = {"", "z", "z^2", "z^3"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < 4; ++k) {
        if (sgn(c_[k]) == 0) continue;
        mpq_class v = c_[k];
        if (first) {
            if (sgn(v) < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
            if (sgn(v) < 0) v = -v;
        }
        if (k == 0 || v != 1) {
            os << v.get_str();
            if (k != 0) os << "*";
        }
        os << name[k];
        first = false;
    }
    return os.str();
}

CycNum norm_sq(const CycNum& a) { return a * a.conj(); }

CycNum random_cyc(Rng& rng) {
    return CycNum(rng.small_rational(), rng.small_rational(), rng.small_rational(),
                  rng.small_rational());
}

CycNum random_cyc_mixed(Rng& rng) {
    switch (rng.below(4)) {
    case 0: return CycNum(rng.small_rational());
    case 1: return CycNum(rng.small_rational()) * CycNum::i();
    case 2: return CycNum(rng.small_rational()) + CycNum(rng.small_rational()) * CycNum::i();
    default: return random_cyc(rng);
    }
}

} // namespace cayley
