#include "cayley/linalg.hpp"

#include <algorithm>

namespace cayley {

std::vector<mpz_class> char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    int n = a.rows();
    // Faddeev-LeVerrier: exact over the integers (every division by k below
    // is exact; we assert it).  Coefficients are returned lowest-degree
    // first, so c[n] = 1 and c[0] = (-1)^n det(a).
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMatrix am = a * mk;
        mpz_class tr = am.trace();
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mpz_class(-tr).get_mpz_t(),
                    mpz_class(k).get_mpz_t());
        if (r != 0)
            throw ConventionError("characteristic polynomial recursion lost integrality");
        c[static_cast<std::size_t>(n - k)] = q;
        if (k < n) {
            mk = am;
            for (int i = 0; i < n; ++i) mk(i, i) += q;
        }
    }
    return c;
}

namespace {

// All positive divisors of |v| (v != 0), by trial division.  Inputs in this
// library have small constant terms; factoring arbitrary integers is out of
// scope.
std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
            v /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (v > 1) factors.emplace_back(v, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Divide the monic polynomial q (lowest degree first) by (x - r); returns
// true and replaces q by the quotient when the remainder is zero.
bool deflate_root(std::vector<mpz_class>& q, const mpz_class& r) {
    std::size_t m = q.size() - 1; // degree
    std::vector<mpz_class> quot(m);
    mpz_class carry = q[m];
    for (std::size_t k = m; k-- > 0;) {
        quot[k] = carry;
        carry = q[k] + r * carry;
    }
    if (carry != 0) return false;
    q = std::move(quot);
    return true;
}

} // namespace

std::vector<Eigenspace> rational_eigenspaces(const CycMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("eigendecomposition of a non-square matrix");
    int n = m.rows();
    if (n == 0) return {};

    // Clear denominators: the scaled matrix d*m is integral, its eigenvalues
    // are d times those of m, and a monic integer polynomial has only
    // integer rational roots -- so the root search below is over divisors.
    mpz_class d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!m(i, j).is_rational())
                throw DimensionMismatch("eigendecomposition requires rational entries, got " +
                                        m(i, j).str());
            mpz_class den = m(i, j).rational().get_den();
            d = lcm(d, den);
        }
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class scaled = m(i, j).rational() * mpq_class(d);
            b(i, j) = scaled.get_num(); // denominator is 1 by construction
        }

    std::vector<mpz_class> p = char_poly(b);

    // Split off the zero eigenvalue, then search the remaining (nonzero
    // constant term) polynomial for integer roots.
    std::vector<std::pair<mpz_class, int>> roots; // (eigenvalue of b, multiplicity)
    int zero_mult = 0;
    while (p.size() > 1 && p[0] == 0) {
        ++zero_mult;
        p.erase(p.begin());
    }
    if (zero_mult > 0) roots.emplace_back(0, zero_mult);
    if (p.size() > 1) {
        for (const mpz_class& dv : positive_divisors(p[0])) {
            for (int s : {1, -1}) {
                mpz_class r = s * dv;
                int mult = 0;
                while (p.size() > 1 && deflate_root(p, r)) ++mult;
                if (mult > 0) roots.emplace_back(r, mult);
                if (p.size() == 1) break;
            }
            if (p.size() == 1) break;
        }
    }
    int total = 0;
    for (const auto& [r, k] : roots) total += k;
    if (total != n) throw SpectralError("irrational spectrum");

    std::vector<Eigenspace> out;
    int geometric_total = 0;
    for (const auto& [r, k] : roots) {
        Eigenspace es;
        es.value = mpq_class(r, d);
        es.value.canonicalize();
        es.multiplicity = k;
        CycMatrix shifted = m;
        CycNum lambda{es.value};
        for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
        auto [rk, kern] = rank_kernel(std::move(shifted));
        (void)rk;
        if (static_cast<int>(kern.size()) != k)
            throw SpectralError("defective matrix: eigenvalue " + es.value.get_str() +
                                " has geometric multiplicity " + std::to_string(kern.size()) +
                                " < algebraic " + std::to_string(k));
        geometric_total += static_cast<int>(kern.size());
        es.basis = std::move(kern);
        out.push_back(std::move(es));
    }
    if (geometric_total != n) throw SpectralError("eigenspaces do not fill the space");
    std::sort(out.begin(), out.end(),
              [](const Eigenspace& x, const Eigenspace& y) { return x.value > y.value; });
    return out;
}

} // namespace cayley
