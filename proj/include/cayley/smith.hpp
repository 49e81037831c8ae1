#pragma once

#include <vector>

#include "cayley/matrix.hpp"

namespace cayley {

// Smith normal form U * M * V = D of an integer matrix, with U and V
// unimodular and D diagonal with nonnegative entries d1 | d2 | ... .
struct SmithForm {
    std::vector<mpz_class> diag; // length min(rows, cols), divisibility chain
    int rank = 0;                // number of nonzero diagonal entries
    IntMatrix u;                 // rows x rows, |det| = 1
    IntMatrix v;                 // cols x cols, |det| = 1
};

// Computes the Smith normal form by repeated pivoting on a smallest-magnitude
// entry.  The factorization u * m * v is re-multiplied and compared against
// the diagonal before returning; a mismatch throws ConventionError (it would
// indicate a bug, never bad input).
SmithForm smith_normal_form(const IntMatrix& m);

} // namespace cayley
