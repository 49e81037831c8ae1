#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley::verify {

// One verification suite's outcome.  Suites count violations instead of
// stopping at the first failure, so a report always covers its whole
// population.
struct RunReport {
    std::string check;        // suite name, e.g. "e8.jacobi.strata"
    long population = 0;      // number of objects examined
    long violations = 0;      // exact failures among them
    std::int64_t elapsed_ms = 0;
    std::uint64_t seed = 0;   // sampling seed (0 for purely exhaustive suites)
    std::string ledger_hash;  // convention-ledger fingerprint

    bool passed() const { return violations == 0; }
};

// ---- e8 suites ---------------------------------------------------------

// Exhaustive [e_i, e_j] = -[e_j, e_i] over all unordered basis pairs,
// including the diagonal [e_i, e_i] = 0.
RunReport e8_antisymmetry();

// Exhaustive Jacobi over the nine graded strata (2,246,056 triples).
RunReport e8_jacobi_strata();

RunReport e8_jacobi_random(long samples, std::uint64_t seed);

// trace(ad e_i ad e_j) against the 60(...) formula on sampled basis pairs.
RunReport e8_killing_trace(long samples, std::uint64_t seed);

// Killing Gram matrix has full rank 248.
RunReport e8_killing_rank();

// kappa([z,a], b) + kappa(a, [z,b]) = 0 on sampled triples.
RunReport e8_killing_invariance(long samples, std::uint64_t seed);

// w^3 = id, w is bracket-preserving (exhaustive on basis pairs through the
// grading constraint grade([e_i, e_j]) = grade(e_i) + grade(e_j) mod 3 on
// every table term, plus direct sampled checks), and its fixed subalgebra
// meets the basis exactly in the matrix block.
RunReport e8_w_automorphism();

// phi(a) preserves bracket and Killing form for exact SU(9) samples
// (phased permutations and rational rotation blocks), and phi(w Id) acts as
// the identity.
RunReport e8_phi_automorphism(long matrices, long pairs_per_matrix, std::uint64_t seed);

// tau is a conjugate-linear involution (negating real symmetric matrices in
// the sl(9) block) and sigma is a conjugate-linear involutive bracket
// automorphism, on sampled pairs.
RunReport e8_tau_involution(long samples, std::uint64_t seed);

// The sigma-fixed basis closes under the bracket with real rational
// coordinates (exhaustive over unordered pairs).
RunReport e8_compact_closure();

// Killing form restricted to the compact basis is negative definite
// (every elimination pivot negative, exact).
RunReport e8_compact_definiteness();

std::vector<RunReport> e8_suite(long samples, std::uint64_t seed);

// ---- spin7 suites --------------------------------------------------------

// The Cayley form is self-dual and the operator L = *(F ^ Omega) has exact
// spectrum {3 (x7), -1 (x21)}.
RunReport spin7_spectrum();

// pi7 + pi21 = id, idempotence, orthogonality, image dimensions.
RunReport spin7_projectors();

// pi7(F) = 0 <=> *F = -F ^ Omega on sampled scalar and matrix-valued forms.
RunReport spin7_instanton_equivalence(long samples, std::uint64_t seed);

// Clifford relations, gamma antisymmetry, volume element structure.
RunReport spin7_clifford();

// The spinor isomorphisms: kernel of the Clifford map equals Lambda^2_21,
// R^8 -> S- is an isomorphism, R + Lambda^2_7 -> S+ is an isomorphism.
RunReport spin7_spinor_isos();

// Deformation symbol is invertible for the 8 basis covectors and sampled
// random nonzero covectors.
RunReport spin7_ellipticity(long samples, std::uint64_t seed);

// One intertwiner pair makes the deformation and Dirac symbols coincide for
// every basis covector.
RunReport spin7_symbol_coincidence();

std::vector<RunReport> spin7_suite(long samples, std::uint64_t seed);

// ---- cellcoh suites -------------------------------------------------------

// cohomology against the brute-force oracle on random small complexes.
RunReport cellcoh_oracle(long samples, std::uint64_t seed);

// Euler characteristic consistency and verdict/pi1/homotopy-table checks on
// the shipped fixtures.
RunReport cellcoh_fixtures();

std::vector<RunReport> cellcoh_suite(long samples, std::uint64_t seed);

} // namespace cayley::verify
