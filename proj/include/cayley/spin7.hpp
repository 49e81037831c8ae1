#pragma once

#include <utility>
#include <vector>

#include "cayley/kform.hpp"
#include "cayley/matrix.hpp"
#include "cayley/rng.hpp"

namespace cayley::spin7 {

// Spin(7) linear algebra on R^8: the Cayley 4-form, the splitting
// Lambda^2 = Lambda^2_7 (+) Lambda^2_21, the instanton condition, the real
// Clifford algebra Cl(8) on R^16 = S+ (+) S-, and the symbol computations
// for the deformation complex and the Dirac operator.

inline constexpr int kVectorDim = 8;
inline constexpr int kPairCount = 28; // dim Lambda^2 R^8
inline constexpr int kSpinorDim = 16;

// Lexicographic rank of an index pair 1 <= a < b <= 8.
int pair_rank(int a, int b);
const std::pair<int, int>& pair_at(int t);

// The 14-term Cayley 4-form (self-dual, all coefficients +-1).
const KForm& cayley_form();

// The symmetric operator L(F) = star(F ^ Omega) on 2-forms, in the pair
// basis.  Spectrum: 3 with multiplicity 7, -1 with multiplicity 21.
const QMatrix& l_omega_matrix();

// Orthogonal projectors pi7 = (L + 1)/4 and pi21 = (3 - L)/4.
const QMatrix& pi7_matrix();
const QMatrix& pi21_matrix();

// A 2-form with scalar or matrix coefficients.  Scalar forms use 1x1
// matrices; matrix-valued forms (curvature stand-ins) carry anti-hermitian
// traceless d x d coefficients.
struct TwoForm8 {
    int mat_dim = 1;
    std::vector<CycMatrix> coeffs; // one per index pair, in pair_rank order

    static TwoForm8 zero(int mat_dim = 1);

    bool lie_valued() const { return mat_dim > 1; }
    bool is_zero() const;

    // Shape plus, for matrix-valued forms, exact anti-hermitianity and
    // tracelessness of every coefficient.  Throws DimensionMismatch.
    void validate() const;

    // The scalar 2-form of one matrix entry (i, j), as a KForm.
    KForm entry_form(int i, int j) const;

    friend TwoForm8 operator+(const TwoForm8& a, const TwoForm8& b);
    friend TwoForm8 operator-(const TwoForm8& a, const TwoForm8& b);
    friend TwoForm8 operator*(const CycNum& s, const TwoForm8& a);
    friend bool operator==(const TwoForm8& a, const TwoForm8& b);
};

enum class Part { seven, twentyone };

// Coefficientwise application of the projector.
TwoForm8 project(const TwoForm8& f, Part part);

struct InstantonResult {
    bool is_instanton = false;
    TwoForm8 residual;            // pi7(F)
    mpq_class residual_norm_sq;   // exact; zero iff residual vanishes
};

// Decides pi7(F) = 0 and, independently through the exterior algebra,
// star(F ^ Omega) = -F; the two must agree (ConventionError otherwise).
InstantonResult instanton_check(const TwoForm8& f);

// Random sample with small exact coefficients; anti-hermitian traceless
// matrices when mat_dim > 1.
TwoForm8 random_two_form(Rng& rng, int mat_dim);

// ---- Clifford algebra ----------------------------------------------------

// Real 16x16 gamma matrices with gamma_i gamma_j + gamma_j gamma_i =
// -2 delta_ij, built from octonion left multiplication; the volume element
// gamma_1 ... gamma_8 is diagonal +-1 and splits R^16 into S+ (+) S-.
struct GammaRep {
    std::vector<QMatrix> gammas;  // 8 generators
    QMatrix volume;
    std::vector<int> plus_basis;  // coordinates spanning S+
    std::vector<int> minus_basis; // coordinates spanning S-
};
const GammaRep& gamma_rep();

// Clifford multiplication by the covector xi (16x16, linear in xi).
QMatrix clifford(const std::vector<mpq_class>& xi);

// The unit spinor in S+ whose stabilizer reproduces the Cayley form: the
// first plus coordinate vector when compatible, otherwise the exact
// solution of the stabilizer system (see spinor_isos).  16-vector.
const std::vector<mpq_class>& unit_spinor();

struct SpinorIsos {
    QMatrix iso_minus; // 8x8: Lambda^1 -> S-,  a |-> c(a) eta
    QMatrix iso_plus;  // 8x8: R (+) Lambda^2_7 -> S+, (t, b) |-> t eta + c(b) eta
    // Frozen basis of Lambda^2_7 (eigenvalue-3 vectors of L) used for the
    // second factor, each of length 28.
    std::vector<std::vector<mpq_class>> seven_basis;
};

// Builds both isomorphisms and proves, exactly, that the kernel of the
// Clifford map Lambda^2 -> S+ equals Lambda^2_21; throws ConventionError
// ("kernel mismatch") if the cross-module identification fails.
const SpinorIsos& spinor_isos();

// Symbol of the rolled-up deformation operator at xi:
//   a |-> (<xi, a>, pi7(xi ^ a))   as an 8x8 matrix over
// R (+) Lambda^2_7 in the frozen seven_basis coordinates.  Rank 8 for every
// nonzero xi; throws DivisionByZero on xi = 0.
QMatrix deformation_symbol(const std::vector<mpq_class>& xi);

// Symbol of the Dirac operator at xi: Clifford multiplication restricted to
// S- -> S+ (8x8 in the plus/minus coordinate bases).
QMatrix dirac_symbol(const std::vector<mpq_class>& xi);

struct SymbolMatch {
    bool found = false;
    mpq_class s0, s1; // scalars on the Lambda^0 and Lambda^2_7 summands
};

// Finds per-summand scalars (s0, s1) such that
//   dirac_symbol(xi) . iso_minus = iso_plus . diag(s0, s1 I7) . deformation_symbol(xi)
// for every xi, determined at xi = e1 and verified exactly on all 8 basis
// covectors.
SymbolMatch symbol_compare();

} // namespace cayley::spin7
