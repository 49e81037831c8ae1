#include "cayley/smith.hpp"

namespace cayley {

namespace {

// Elementary operations that keep u * original * v equal to the working
// matrix.  Row operations act on (a, u); column operations on (a, v).

void swap_rows(IntMatrix& a, IntMatrix& u, int r1, int r2) {
    for (int j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u(r1, j), u(r2, j));
}

void swap_cols(IntMatrix& a, IntMatrix& v, int c1, int c2) {
    for (int i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
    for (int i = 0; i < v.rows(); ++i) std::swap(v(i, c1), v(i, c2));
}

// row[r1] += f * row[r2]
void add_row(IntMatrix& a, IntMatrix& u, int r1, int r2, const mpz_class& f) {
    for (int j = 0; j < a.cols(); ++j) a(r1, j) += f * a(r2, j);
    for (int j = 0; j < u.cols(); ++j) u(r1, j) += f * u(r2, j);
}

// col[c1] += f * col[c2]
void add_col(IntMatrix& a, IntMatrix& v, int c1, int c2, const mpz_class& f) {
    for (int i = 0; i < a.rows(); ++i) a(i, c1) += f * a(i, c2);
    for (int i = 0; i < v.rows(); ++i) v(i, c1) += f * v(i, c2);
}

void negate_row(IntMatrix& a, IntMatrix& u, int r) {
    for (int j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    for (int j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
}

// Quotient that minimizes |a - q*b|, i.e. rounds a/b to the nearest integer.
// Using the balanced remainder makes the smallest-pivot strategy converge
// quickly (each reduction at least halves the remainder).
mpz_class balanced_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    int steps = std::min(rows, cols);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest-magnitude nonzero entry of the trailing submatrix
            // becomes the pivot candidate.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = steps; // trailing submatrix is zero: done
                break;
            }
            if (pi != t) swap_rows(a, u, pi, t);
            if (pj != t) swap_cols(a, v, pj, t);

            // Clear the pivot column and row.  Any nonzero remainder is
            // strictly smaller than the pivot, so the outer loop re-selects
            // and terminates.
            bool reduced = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                mpz_class q = balanced_quotient(a(i, t), a(t, t));
                if (q != 0) add_row(a, u, i, t, -q);
                if (a(i, t) != 0) reduced = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                mpz_class q = balanced_quotient(a(t, j), a(t, t));
                if (q != 0) add_col(a, v, j, t, -q);
                if (a(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Enforce the divisibility chain: if the pivot fails to divide
            // some later entry, fold that row in and restart the reduction.
            bool divides_all = true;
            for (int i = t + 1; i < rows && divides_all; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        add_row(a, u, t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (t >= steps) break;
        if (a(t, t) < 0) negate_row(a, u, t);
    }

    SmithForm out;
    out.diag.resize(static_cast<std::size_t>(steps));
    for (int t = 0; t < steps; ++t) {
        out.diag[static_cast<std::size_t>(t)] = a(t, t);
        if (a(t, t) != 0) ++out.rank;
    }
    out.u = std::move(u);
    out.v = std::move(v);

    // Re-multiply before returning: the factorization is the contract.
    IntMatrix check = out.u * m * out.v;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            mpz_class want = (i == j && i < steps) ? out.diag[static_cast<std::size_t>(i)]
                                                   : mpz_class(0);
            if (check(i, j) != want)
                throw ConventionError("smith normal form verification failed");
        }
    for (std::size_t k = 0; k + 1 < out.diag.size(); ++k) {
        const mpz_class& d1 = out.diag[k];
        const mpz_class& d2 = out.diag[k + 1];
        bool ok = (d1 == 0) ? (d2 == 0) : mpz_divisible_p(d2.get_mpz_t(), d1.get_mpz_t());
        if (!ok) throw ConventionError("smith normal form divisibility chain broken");
    }
    return out;
}

} // namespace cayley
