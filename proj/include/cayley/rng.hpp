#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace cayley {

// Deterministic random source.  All randomized checks draw from this class
// with an explicit seed so that every run of a suite is reproducible and the
// reports can cite the seed they used.  We consume the raw mt19937_64 stream
// directly (rather than going through distribution objects, whose output is
// implementation-defined) so the same seed yields the same draws everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    // Uniform value in [lo, hi] (inclusive).
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Small rational with numerator in [-4, 4] and denominator in {1, 2, 3}.
    // Small values keep exact arithmetic fast while still exercising
    // non-integer coefficients.
    mpq_class small_rational() {
        long num = range(-4, 4);
        long den = range(1, 3);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    // Small nonzero rational.
    mpq_class small_nonzero_rational() {
        for (;;) {
            mpq_class q = small_rational();
            if (sgn(q) != 0) return q;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cayley
