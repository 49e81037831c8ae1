#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cayley/kform.hpp"
#include "cayley/matrix.hpp"
#include "cayley/rng.hpp"

namespace cayley::e8 {

// The 248-dimensional Lie algebra realized as
//
//   sl(9, C)  (+)  L  (+)  L',     L = L' = third exterior power of C^9,
//
// with the bracket below.  Dimensions: 80 + 84 + 84 = 248.
inline constexpr int kMatrixBlock = 80; // dim sl(9)
inline constexpr int kFormBlock = 84;   // dim of the 3-form space
inline constexpr int kDim = 248;

struct E8Elem {
    CycMatrix r; // 9x9, trace zero
    KForm x;     // degree-3 form on C^9
    KForm y;     // degree-3 form on C^9

    static E8Elem zero();

    E8Elem operator-() const { return {-r, -x, -y}; }
    friend E8Elem operator+(const E8Elem& a, const E8Elem& b) {
        return {a.r + b.r, a.x + b.x, a.y + b.y};
    }
    friend E8Elem operator-(const E8Elem& a, const E8Elem& b) {
        return {a.r - b.r, a.x - b.x, a.y - b.y};
    }
    friend E8Elem operator*(const CycNum& s, const E8Elem& a) {
        return {s * a.r, s * a.x, s * a.y};
    }
    friend bool operator==(const E8Elem& a, const E8Elem& b) {
        return a.r == b.r && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const E8Elem& a, const E8Elem& b) { return !(a == b); }

    bool is_zero() const { return r.is_zero() && x.is_zero() && y.is_zero(); }
};

// The pairing of two 3-forms into a traceless matrix:
//   (x ** y)(u) = star(y ^ star(x ^ u)) + (2/3) <x, y> u.
CycMatrix cross(const KForm& x, const KForm& y);

// The Lie bracket of the model.  Component by component:
//   r:  [r1, r2] + x1 ** y2 - x2 ** y1
//   x:  r1 . x2 - r2 . x1 + star(y1 ^ y2)
//   y:  -r1^T . y2 + r2^T . y1 - star(x1 ^ x2)
// where . is algebra_action and ^T the plain transpose.
E8Elem bracket(const E8Elem& a, const E8Elem& b);

// Killing form: 60 (tr(r1 r2) + <x1, y2> + <x2, y1>).
CycNum killing(const E8Elem& a, const E8Elem& b);

// Order-three automorphism (r, x, y) -> (r, w x, w^2 y) for the primitive
// cube root of unity w; its fixed subalgebra is the sl(9) block.
E8Elem w_apply(const E8Elem& a);

// Conjugate-linear involution (r, x, y) -> (-r^dagger, -conj x, -conj y).
E8Elem tau_hat(const E8Elem& a);

// Conjugate-linear involution whose fixed set is the compact real form:
// (r, x, y) -> (-r^dagger, -conj y, -conj x).
E8Elem sigma_apply(const E8Elem& a);

// Exact test for membership in SU(9).
bool is_special_unitary(const CycMatrix& a);

// Action of a in SU(9): (r, x, y) -> (a r a^{-1}, a.x, (a^{-1})^T.y) where
// a acts on forms slotwise.  Throws NotSpecialUnitary if a fails the test.
E8Elem phi_act(const CycMatrix& a, const E8Elem& v);

// ---- canonical basis -------------------------------------------------
//
// Index layout (frozen; serialization and the structure-constant table
// depend on it):
//   0  .. 71   E_ij, i != j, 1-based (i, j) in row-major order
//   72 .. 79   H_d = E_dd - E_{d+1,d+1}, d = 1..8
//   80 .. 163  x block: basis 3-forms in lexicographic order
//   164.. 247  y block: same 3-forms
int matrix_unit_index(int i, int j);        // the E_ij slot, i != j, 1-based
int cartan_index(int d);                    // the H_d slot, d = 1..8
const MultiIndex& threeform_index(int t);   // t in [0, 84)
int threeform_rank(const MultiIndex& idx);

// Grading by the w eigenvalue: 0 on sl(9), 1 on the x block, 2 on the y
// block.
int basis_grade(int k);

const E8Elem& basis_elem(int k);

// Exact coordinates in the canonical basis (throws on shape mismatch or a
// matrix part with nonzero trace).
std::vector<CycNum> to_coords(const E8Elem& v);
E8Elem from_coords(const std::vector<CycNum>& c);

// Sparse coordinate visitor (skips zeros; used by the table builder and the
// fast verification paths).
void for_each_coord(const E8Elem& v, const std::function<void(int, const CycNum&)>& fn);

// Matrix of ad(v) in the canonical basis: ad_matrix(v) * coords(u) equals
// coords([v, u]).
CycMatrix ad_matrix(const E8Elem& v);

// ---- structure constants ---------------------------------------------
//
// Every structure constant of the canonical basis is an integer multiple of
// 1/3 (the 2/3 in the cross product is the only source of denominators).
// The table stores the numerators as machine integers, which makes the
// exhaustive Jacobi and antisymmetry sweeps run in seconds; exactness is
// asserted while the table is built from the definitional bracket.
class BracketTable {
public:
    struct Term {
        int idx;
        std::int64_t num; // contribution num/3 in coordinate idx
    };

    static const BracketTable& get();

    const std::vector<Term>& entry(int i, int j) const {
        return rows_[static_cast<std::size_t>(i) * kDim + static_cast<std::size_t>(j)];
    }

    // [e_i, e_j] as an element.
    E8Elem bracket_of(int i, int j) const;

    // Accumulates [[e_i, e_j], e_k] into acc over the common denominator 9;
    // touched records which slots were written.
    void double_bracket(int i, int j, int k, std::vector<std::int64_t>& acc,
                        std::vector<int>& touched) const;

private:
    BracketTable();
    std::vector<std::vector<Term>> rows_;
};

// ---- compact real form -------------------------------------------------
//
// Basis of the sigma-fixed subalgebra (all 248 of them, frozen order):
//   0  .. 35   F_ij = E_ij - E_ji        (i < j)
//   36 .. 71   G_ij = i (E_ij + E_ji)    (i < j)
//   72 .. 79   D_d  = i H_d
//   80 .. 163  u_I  = (0,  f_I, -f_I)
//   164.. 247  v_I  = (0, i f_I, i f_I)
// Construction verifies closure under the bracket; a failure throws
// ConventionError (it would mean the basis does not span a subalgebra).
const std::vector<E8Elem>& compact_form_basis();

// Exact rational coordinates of v in the compact basis; throws
// ConventionError when v does not lie in the real span.
std::vector<mpq_class> compact_coords(const E8Elem& v);
std::vector<mpq_class> compact_coords_from_canonical(const std::vector<CycNum>& c);

// Random element supported on `support` canonical basis vectors with small
// mixed coefficients.
E8Elem random_elem(Rng& rng, int support);

} // namespace cayley::e8
