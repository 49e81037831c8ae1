#pragma once

#include <string>
#include <vector>

#include "cayley/matrix.hpp"
#include "cayley/rng.hpp"

namespace cayley::cellcoh {

// Integral cellular cochain complexes and their cohomology, the
// orientability criterion Hom(H^3(M,Z), Z_2) = 0, and the homotopy-group
// lookups for the configuration and mapping spaces of the E8 theory.

struct CochainComplex {
    std::vector<int> ranks;        // cochain ranks n_0 .. n_dim
    std::vector<IntMatrix> deltas; // delta^k: Z^{n_k} -> Z^{n_{k+1}}

    int dim() const { return static_cast<int>(ranks.size()) - 1; }

    // Shape consistency and delta(k+1) delta(k) = 0, exactly; throws
    // NotAComplex with the offending degree.
    void validate() const;
};

// Z^betti (+) Z/d_1 (+) ... with 2 <= d_1 | d_2 | ...
struct CohGroup {
    long betti = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return betti == 0 && torsion.empty(); }
    std::string str() const;

    friend bool operator==(const CohGroup& a, const CohGroup& b) {
        return a.betti == b.betti && a.torsion == b.torsion;
    }
    friend bool operator!=(const CohGroup& a, const CohGroup& b) { return !(a == b); }
};

// H^k = ker delta^k / im delta^{k-1} via Smith normal form.
CohGroup cohomology(const CochainComplex& c, int k);

// Independent brute-force route: Betti numbers from ranks over Q, torsion
// from a naive first-pivot integer diagonalization.
CohGroup cohomology_oracle(const CochainComplex& c, int k);

struct OrientabilityVerdict {
    bool criterion_holds = false;
    CohGroup h3;
    std::string reason; // "free part present" | "even torsion present" | "all torsion odd"
};

// The criterion Hom(H^3(M,Z), Z_2) = 0, decided both through the structure
// of H^3 and through |H^3| being finite and odd; the two formulations are
// compared internally (ConventionError on disagreement).
OrientabilityVerdict orientability_verdict(const CochainComplex& c);

struct Pi1Report {
    CohGroup group;         // pi_1 of the irreducible configuration space = H^3(M, Z)
    bool dimension_warning; // set when dim != 8, the geometric setting
};
Pi1Report pi1_config(const CochainComplex& c);

// pi_q of the mapping space into the classifying space: H^{4-q}(M, Z) for
// 1 <= q <= 3.
CohGroup mapping_homotopy(const CochainComplex& c, int q);

// pi_i(E8): Z for i in {3, 15}, trivial otherwise (0 <= i <= 15).
CohGroup e8_homotopy(int i);

// pi_k of the based gauge-equivalence classes over S^n: Z iff n + k = 4
// (1 <= n <= 8, 1 <= k <= 3), cross-checked against e8_homotopy(n+k-1).
CohGroup sphere_config_homotopy(int n, int k);

struct Fixture {
    std::string name;
    std::string description;
    CochainComplex complex;
};

// The shipped complexes: hp2, gr2c4, free-h3, torsion-3, torsion-2.
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name); // throws Error on unknown names

// Random small complex with delta delta = 0 by construction (rows of each
// delta drawn from the integral left-kernel of its predecessor).
CochainComplex random_complex(Rng& rng);

} // namespace cayley::cellcoh
