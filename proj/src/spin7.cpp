#include "cayley/spin7.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "cayley/errors.hpp"
#include "cayley/linalg.hpp"

namespace cayley::spin7 {

namespace {

std::vector<std::pair<int, int>> make_pairs() {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(kPairCount);
    for (int a = 1; a <= kVectorDim; ++a)
        for (int b = a + 1; b <= kVectorDim; ++b) pairs.emplace_back(a, b);
    return pairs;
}

const std::vector<std::pair<int, int>>& pair_table() {
    static const std::vector<std::pair<int, int>> pairs = make_pairs();
    return pairs;
}

// The rational part of z conj(z).  For z in the field, z conj(z) = p + q r3
// with p >= |q| r3 >= 0 and the Galois conjugate p - q r3 also nonnegative,
// so p is an exact rational norm: nonnegative, and zero only at z = 0.
mpq_class trace_norm_sq(const CycNum& z) { return (z * z.conj()).coeff(0); }

} // namespace

int pair_rank(int a, int b) {
    if (a < 1 || b <= a || b > kVectorDim)
        throw DimensionMismatch("pair_rank: need 1 <= a < b <= 8");
    return (a - 1) * (2 * kVectorDim - a) / 2 + (b - a - 1);
}

const std::pair<int, int>& pair_at(int t) {
    if (t < 0 || t >= kPairCount) throw DimensionMismatch("pair_at: slot out of range");
    return pair_table()[static_cast<std::size_t>(t)];
}

const KForm& cayley_form() {
    static const KForm omega = [] {
        // The fourteen calibration terms; several index quadruples are
        // deliberately unsorted, with the wedge supplying the sign.
        static constexpr struct {
            std::array<int, 4> idx;
            int sign;
        } kTerms[] = {
            {{1, 2, 3, 4}, +1}, {{1, 2, 7, 8}, -1}, {{1, 6, 3, 8}, -1},
            {{1, 6, 7, 4}, -1}, {{1, 5, 2, 6}, +1}, {{1, 5, 3, 7}, +1},
            {{1, 5, 4, 8}, +1}, {{5, 6, 7, 8}, +1}, {{5, 6, 3, 4}, -1},
            {{5, 2, 7, 4}, -1}, {{5, 2, 3, 8}, -1}, {{3, 7, 4, 8}, +1},
            {{2, 6, 4, 8}, +1}, {{2, 6, 3, 7}, +1},
        };
        KForm omega(kVectorDim, 4);
        for (const auto& term : kTerms) {
            KForm w = KForm::basis(kVectorDim, {term.idx[0]});
            for (int s = 1; s < 4; ++s)
                w = wedge(w, KForm::basis(kVectorDim, {term.idx[s]}));
            omega = omega + CycNum(term.sign) * w;
        }
        return omega;
    }();
    return omega;
}

const QMatrix& l_omega_matrix() {
    static const QMatrix l = [] {
        QMatrix m(kPairCount, kPairCount);
        const KForm& omega = cayley_form();
        for (int t = 0; t < kPairCount; ++t) {
            const auto& [a, b] = pair_at(t);
            KForm image = hodge_star(wedge(KForm::basis(kVectorDim, {a, b}), omega));
            for (int s = 0; s < kPairCount; ++s) {
                const auto& [p, q] = pair_at(s);
                CycNum c = image.coefficient(MultiIndex({p, q}, kVectorDim));
                if (!c.is_rational())
                    throw ConventionError("l_omega_matrix: non-rational entry " + c.str());
                m(s, t) = c.rational();
            }
        }
        return m;
    }();
    return l;
}

const QMatrix& pi7_matrix() {
    static const QMatrix p = [] {
        QMatrix m = l_omega_matrix();
        mpq_class quarter(1, 4);
        for (int i = 0; i < kPairCount; ++i) {
            m(i, i) += 1;
            for (int j = 0; j < kPairCount; ++j) m(i, j) *= quarter;
        }
        return m;
    }();
    return p;
}

const QMatrix& pi21_matrix() {
    static const QMatrix p = [] {
        QMatrix m = -l_omega_matrix();
        mpq_class quarter(1, 4);
        for (int i = 0; i < kPairCount; ++i) {
            m(i, i) += 3;
            for (int j = 0; j < kPairCount; ++j) m(i, j) *= quarter;
        }
        return m;
    }();
    return p;
}

// ---- TwoForm8 --------------------------------------------------------------

TwoForm8 TwoForm8::zero(int mat_dim) {
    TwoForm8 f;
    f.mat_dim = mat_dim;
    f.coeffs.assign(kPairCount, CycMatrix(mat_dim, mat_dim));
    return f;
}

bool TwoForm8::is_zero() const {
    for (const CycMatrix& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

void TwoForm8::validate() const {
    if (mat_dim < 1) throw DimensionMismatch("TwoForm8: matrix dimension must be positive");
    if (static_cast<int>(coeffs.size()) != kPairCount)
        throw DimensionMismatch("TwoForm8: expected 28 coefficients");
    for (const CycMatrix& c : coeffs) {
        if (c.rows() != mat_dim || c.cols() != mat_dim)
            throw DimensionMismatch("TwoForm8: coefficient of wrong shape");
        if (lie_valued()) {
            if (!(dagger(c) == -c))
                throw DimensionMismatch("TwoForm8: coefficient is not anti-hermitian");
            if (!c.trace().is_zero())
                throw DimensionMismatch("TwoForm8: coefficient has nonzero trace");
        }
    }
}

KForm TwoForm8::entry_form(int i, int j) const {
    KForm f(kVectorDim, 2);
    for (int t = 0; t < kPairCount; ++t) {
        const CycNum& c = coeffs[static_cast<std::size_t>(t)](i, j);
        if (c.is_zero()) continue;
        const auto& [a, b] = pair_at(t);
        f.add_term(MultiIndex({a, b}, kVectorDim), c);
    }
    return f;
}

TwoForm8 operator+(const TwoForm8& a, const TwoForm8& b) {
    if (a.mat_dim != b.mat_dim) throw DimensionMismatch("TwoForm8: mixed matrix dimensions");
    TwoForm8 out = a;
    for (int t = 0; t < kPairCount; ++t)
        out.coeffs[static_cast<std::size_t>(t)] =
            out.coeffs[static_cast<std::size_t>(t)] + b.coeffs[static_cast<std::size_t>(t)];
    return out;
}

TwoForm8 operator-(const TwoForm8& a, const TwoForm8& b) {
    if (a.mat_dim != b.mat_dim) throw DimensionMismatch("TwoForm8: mixed matrix dimensions");
    TwoForm8 out = a;
    for (int t = 0; t < kPairCount; ++t)
        out.coeffs[static_cast<std::size_t>(t)] =
            out.coeffs[static_cast<std::size_t>(t)] - b.coeffs[static_cast<std::size_t>(t)];
    return out;
}

TwoForm8 operator*(const CycNum& s, const TwoForm8& a) {
    TwoForm8 out = a;
    for (CycMatrix& c : out.coeffs) c = s * c;
    return out;
}

bool operator==(const TwoForm8& a, const TwoForm8& b) {
    return a.mat_dim == b.mat_dim && a.coeffs == b.coeffs;
}

TwoForm8 project(const TwoForm8& f, Part part) {
    const QMatrix& p = part == Part::seven ? pi7_matrix() : pi21_matrix();
    TwoForm8 out = TwoForm8::zero(f.mat_dim);
    for (int t = 0; t < kPairCount; ++t) {
        CycMatrix acc(f.mat_dim, f.mat_dim);
        for (int s = 0; s < kPairCount; ++s) {
            if (sgn(p(t, s)) == 0) continue;
            if (f.coeffs[static_cast<std::size_t>(s)].is_zero()) continue;
            acc = acc + CycNum(p(t, s)) * f.coeffs[static_cast<std::size_t>(s)];
        }
        out.coeffs[static_cast<std::size_t>(t)] = acc;
    }
    return out;
}

InstantonResult instanton_check(const TwoForm8& f) {
    f.validate();
    InstantonResult result;
    result.residual = project(f, Part::seven);
    bool via_projector = result.residual.is_zero();

    // Independent route through the exterior algebra, one matrix entry at a
    // time: star(F ^ Omega) = -F.
    bool via_star = true;
    const KForm& omega = cayley_form();
    for (int i = 0; i < f.mat_dim && via_star; ++i)
        for (int j = 0; j < f.mat_dim && via_star; ++j) {
            KForm entry = f.entry_form(i, j);
            if (!(hodge_star(wedge(entry, omega)) == -entry)) via_star = false;
        }

    if (via_projector != via_star)
        throw ConventionError("instanton_check: the projector and star criteria disagree");

    result.is_instanton = via_projector;
    result.residual_norm_sq = 0;
    for (const CycMatrix& c : result.residual.coeffs)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j)
                result.residual_norm_sq += trace_norm_sq(c(i, j));
    return result;
}

TwoForm8 random_two_form(Rng& rng, int mat_dim) {
    TwoForm8 f = TwoForm8::zero(mat_dim);
    int support = 6 + static_cast<int>(rng.below(8));
    for (int s = 0; s < support; ++s) {
        int t = static_cast<int>(rng.below(kPairCount));
        CycMatrix& c = f.coeffs[static_cast<std::size_t>(t)];
        if (mat_dim == 1) {
            c(0, 0) += random_cyc_mixed(rng);
        } else {
            // Anti-hermitian traceless: imaginary rationals down the
            // diagonal (balanced in the last slot), generic entries above it.
            CycMatrix m(mat_dim, mat_dim);
            mpq_class diag_sum(0);
            for (int i = 0; i + 1 < mat_dim; ++i) {
                mpq_class q = rng.small_rational();
                m(i, i) = CycNum::i() * CycNum(q);
                diag_sum += q;
            }
            m(mat_dim - 1, mat_dim - 1) = CycNum::i() * CycNum(mpq_class(-diag_sum));
            for (int i = 0; i < mat_dim; ++i)
                for (int j = i + 1; j < mat_dim; ++j) {
                    CycNum z = random_cyc_mixed(rng);
                    m(i, j) = z;
                    m(j, i) = -z.conj();
                }
            c = c + m;
        }
    }
    return f;
}

// ---- Clifford algebra ------------------------------------------------------

namespace {

using Oct = std::array<int, 8>;

// Quaternion product on integer 4-vectors (basis 1, i, j, k).
std::array<int, 4> quat_mult(const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

std::array<int, 4> quat_conj(const std::array<int, 4>& x) {
    return {x[0], -x[1], -x[2], -x[3]};
}

// Cayley-Dickson doubling: (a, b)(c, d) = (a c - conj(d) b, d a + b conj(c)).
Oct oct_mult(const Oct& x, const Oct& y) {
    std::array<int, 4> a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
    std::array<int, 4> c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
    std::array<int, 4> first = quat_mult(a, c), sub = quat_mult(quat_conj(d), b);
    std::array<int, 4> second = quat_mult(d, a), add = quat_mult(b, quat_conj(c));
    Oct out{};
    for (int k = 0; k < 4; ++k) {
        out[static_cast<std::size_t>(k)] =
            first[static_cast<std::size_t>(k)] - sub[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k + 4)] =
            second[static_cast<std::size_t>(k)] + add[static_cast<std::size_t>(k)];
    }
    return out;
}

GammaRep build_gamma() {
    // Left multiplication matrices of the octonion basis.
    std::array<std::array<std::array<int, 8>, 8>, 8> lmul{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Oct ei{}, ej{};
            ei[static_cast<std::size_t>(i)] = 1;
            ej[static_cast<std::size_t>(j)] = 1;
            Oct prod = oct_mult(ei, ej);
            for (int r = 0; r < 8; ++r)
                lmul[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]
                    [static_cast<std::size_t>(j)] = prod[static_cast<std::size_t>(r)];
        }

    GammaRep rep;
    rep.gammas.reserve(8);
    for (int i = 0; i < 8; ++i) {
        QMatrix g(kSpinorDim, kSpinorDim);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                int v = lmul[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]
                            [static_cast<std::size_t>(c)];
                g(8 + r, c) = v;  // L_i block
                g(c, 8 + r) = -v; // -L_i^T block
            }
        rep.gammas.push_back(std::move(g));
    }

    // Clifford relations, exactly.
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j) {
            QMatrix s = rep.gammas[static_cast<std::size_t>(i)] *
                            rep.gammas[static_cast<std::size_t>(j)] +
                        rep.gammas[static_cast<std::size_t>(j)] *
                            rep.gammas[static_cast<std::size_t>(i)];
            QMatrix want(kSpinorDim, kSpinorDim);
            if (i == j)
                for (int d = 0; d < kSpinorDim; ++d) want(d, d) = -2;
            if (!(s == want)) throw ConventionError("gamma_rep: Clifford relation failed");
        }

    rep.volume = rep.gammas[0];
    for (int i = 1; i < 8; ++i) rep.volume = rep.volume * rep.gammas[static_cast<std::size_t>(i)];
    for (int r = 0; r < kSpinorDim; ++r)
        for (int c = 0; c < kSpinorDim; ++c) {
            const mpq_class& v = rep.volume(r, c);
            bool ok = r == c ? (v == 1 || v == -1) : sgn(v) == 0;
            if (!ok) throw ConventionError("gamma_rep: volume element is not diagonal +-1");
        }
    for (int d = 0; d < kSpinorDim; ++d)
        (rep.volume(d, d) == 1 ? rep.plus_basis : rep.minus_basis).push_back(d);
    if (rep.plus_basis.size() != 8 || rep.minus_basis.size() != 8)
        throw ConventionError("gamma_rep: volume eigenspaces are not 8+8");
    return rep;
}

} // namespace

const GammaRep& gamma_rep() {
    static const GammaRep rep = build_gamma();
    return rep;
}

QMatrix clifford(const std::vector<mpq_class>& xi) {
    if (xi.size() != kVectorDim) throw DimensionMismatch("clifford: expected an 8-vector");
    const GammaRep& rep = gamma_rep();
    QMatrix m(kSpinorDim, kSpinorDim);
    for (int a = 0; a < kVectorDim; ++a) {
        if (sgn(xi[static_cast<std::size_t>(a)]) == 0) continue;
        m = m + xi[static_cast<std::size_t>(a)] * rep.gammas[static_cast<std::size_t>(a)];
    }
    return m;
}

namespace {

// Plus-block of c(beta) = sum_t beta_t gamma_a gamma_b for a 2-form beta in
// pair coordinates (even products preserve S+).
QMatrix clifford_two_form_plus(const std::vector<mpq_class>& beta) {
    const GammaRep& rep = gamma_rep();
    QMatrix acc(8, 8);
    for (int t = 0; t < kPairCount; ++t) {
        if (sgn(beta[static_cast<std::size_t>(t)]) == 0) continue;
        const auto& [a, b] = pair_at(t);
        QMatrix prod = rep.gammas[static_cast<std::size_t>(a - 1)] *
                       rep.gammas[static_cast<std::size_t>(b - 1)];
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                acc(r, c) += beta[static_cast<std::size_t>(t)] *
                             prod(rep.plus_basis[static_cast<std::size_t>(r)],
                                  rep.plus_basis[static_cast<std::size_t>(c)]);
    }
    return acc;
}

// Basis of the eigenvalue `lambda` eigenspace of L.
std::vector<std::vector<mpq_class>> l_eigenspace(int lambda) {
    QMatrix shifted = l_omega_matrix();
    for (int d = 0; d < kPairCount; ++d) shifted(d, d) -= lambda;
    return rank_kernel(shifted).second;
}

// Does the kernel of the Clifford map Lambda^2 -> S+ built on eta equal the
// eigenvalue-(-1) eigenspace of L?  Exact: the kernel must have dimension 21
// and consist of eigenvectors.
bool clifford_kernel_matches(const std::vector<mpq_class>& eta16) {
    const GammaRep& rep = gamma_rep();
    QMatrix b(8, kPairCount);
    for (int t = 0; t < kPairCount; ++t) {
        const auto& [p, q] = pair_at(t);
        std::vector<mpq_class> w(kSpinorDim, 0);
        const QMatrix& gq = rep.gammas[static_cast<std::size_t>(q - 1)];
        const QMatrix& gp = rep.gammas[static_cast<std::size_t>(p - 1)];
        std::vector<mpq_class> tmp = gq.apply(eta16);
        w = gp.apply(tmp);
        for (int r = 0; r < 8; ++r)
            b(r, t) = w[static_cast<std::size_t>(rep.plus_basis[static_cast<std::size_t>(r)])];
    }
    std::vector<std::vector<mpq_class>> kernel = rank_kernel(b).second;
    if (static_cast<int>(kernel.size()) != 21) return false;
    const QMatrix& l = l_omega_matrix();
    for (const auto& v : kernel) {
        std::vector<mpq_class> lv = l.apply(v);
        for (int s = 0; s < kPairCount; ++s)
            if (lv[static_cast<std::size_t>(s)] != -v[static_cast<std::size_t>(s)]) return false;
    }
    return true;
}

std::vector<mpq_class> choose_unit_spinor() {
    const GammaRep& rep = gamma_rep();
    std::vector<mpq_class> eta(kSpinorDim, 0);
    eta[static_cast<std::size_t>(rep.plus_basis[0])] = 1;
    if (clifford_kernel_matches(eta)) return eta;

    // The first coordinate spinor is incompatible with the coordinate Cayley
    // form; solve for the S+ vector annihilated by c(beta) for every beta in
    // Lambda^2_21 (the stabilizer condition), which pins eta up to scale.
    std::vector<std::vector<mpq_class>> basis21 = l_eigenspace(-1);
    QMatrix system(static_cast<int>(basis21.size()) * 8, 8);
    for (std::size_t k = 0; k < basis21.size(); ++k) {
        QMatrix block = clifford_two_form_plus(basis21[k]);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) system(static_cast<int>(k) * 8 + r, c) = block(r, c);
    }
    std::vector<std::vector<mpq_class>> kernel = rank_kernel(system).second;
    if (kernel.size() != 1)
        throw ConventionError("unit_spinor: stabilizer solution space has dimension " +
                              std::to_string(kernel.size()));
    // Normalize exactly; the solution must admit a rational unit scale.
    mpq_class norm_sq(0);
    for (const mpq_class& v : kernel[0]) norm_sq += v * v;
    mpz_class num = norm_sq.get_num(), den = norm_sq.get_den();
    mpz_class sqrt_num, sqrt_den, rem_num, rem_den;
    mpz_sqrtrem(sqrt_num.get_mpz_t(), rem_num.get_mpz_t(), num.get_mpz_t());
    mpz_sqrtrem(sqrt_den.get_mpz_t(), rem_den.get_mpz_t(), den.get_mpz_t());
    if (sgn(rem_num) != 0 || sgn(rem_den) != 0)
        throw ConventionError("unit_spinor: stabilizer vector has irrational norm");
    mpq_class scale(sqrt_den, sqrt_num);
    scale.canonicalize();
    std::fill(eta.begin(), eta.end(), mpq_class(0));
    for (int r = 0; r < 8; ++r)
        eta[static_cast<std::size_t>(rep.plus_basis[static_cast<std::size_t>(r)])] =
            scale * kernel[0][static_cast<std::size_t>(r)];
    if (!clifford_kernel_matches(eta))
        throw ConventionError("unit_spinor: stabilizer solution fails the kernel test");
    return eta;
}

} // namespace

const std::vector<mpq_class>& unit_spinor() {
    static const std::vector<mpq_class> eta = choose_unit_spinor();
    return eta;
}

const SpinorIsos& spinor_isos() {
    static const SpinorIsos isos = [] {
        const GammaRep& rep = gamma_rep();
        const std::vector<mpq_class>& eta = unit_spinor();
        if (!clifford_kernel_matches(eta))
            throw ConventionError(
                "kernel mismatch: the Clifford kernel is not Lambda^2_21 for this spinor");

        SpinorIsos isos;
        isos.iso_minus = QMatrix(8, 8);
        for (int a = 0; a < kVectorDim; ++a) {
            std::vector<mpq_class> w = rep.gammas[static_cast<std::size_t>(a)].apply(eta);
            for (int r = 0; r < 8; ++r)
                isos.iso_minus(r, a) =
                    w[static_cast<std::size_t>(rep.minus_basis[static_cast<std::size_t>(r)])];
        }
        if (rank(isos.iso_minus) != 8)
            throw ConventionError("spinor_isos: Lambda^1 -> S- is not invertible");

        isos.seven_basis = l_eigenspace(3);
        if (isos.seven_basis.size() != 7)
            throw ConventionError("spinor_isos: Lambda^2_7 has the wrong dimension");
        isos.iso_plus = QMatrix(8, 8);
        for (int r = 0; r < 8; ++r)
            isos.iso_plus(r, 0) =
                eta[static_cast<std::size_t>(rep.plus_basis[static_cast<std::size_t>(r)])];
        std::vector<mpq_class> eta_plus(8);
        for (int r = 0; r < 8; ++r)
            eta_plus[static_cast<std::size_t>(r)] =
                eta[static_cast<std::size_t>(rep.plus_basis[static_cast<std::size_t>(r)])];
        for (std::size_t k = 0; k < isos.seven_basis.size(); ++k) {
            std::vector<mpq_class> w =
                clifford_two_form_plus(isos.seven_basis[k]).apply(eta_plus);
            for (int r = 0; r < 8; ++r)
                isos.iso_plus(r, static_cast<int>(k) + 1) = w[static_cast<std::size_t>(r)];
        }
        if (rank(isos.iso_plus) != 8)
            throw ConventionError("spinor_isos: R (+) Lambda^2_7 -> S+ is not invertible");
        return isos;
    }();
    return isos;
}

namespace {

// Pseudo-inverse coordinates on span(seven_basis): P = (E^T E)^{-1} E^T,
// so that P w are the Lambda^2_7 coordinates of pi7(w) for any 2-form w.
const QMatrix& seven_coords_matrix() {
    static const QMatrix p = [] {
        const SpinorIsos& isos = spinor_isos();
        QMatrix e(kPairCount, 7);
        for (int k = 0; k < 7; ++k)
            for (int s = 0; s < kPairCount; ++s)
                e(s, k) = isos.seven_basis[static_cast<std::size_t>(k)]
                                          [static_cast<std::size_t>(s)];
        QMatrix gram = e.transposed() * e;
        std::optional<QMatrix> inv = inverse(gram);
        if (!inv) throw ConventionError("seven_coords_matrix: degenerate Gram matrix");
        return *inv * e.transposed();
    }();
    return p;
}

} // namespace

QMatrix deformation_symbol(const std::vector<mpq_class>& xi) {
    if (xi.size() != kVectorDim)
        throw DimensionMismatch("deformation_symbol: expected an 8-vector");
    bool zero = true;
    for (const mpq_class& v : xi)
        if (sgn(v) != 0) zero = false;
    if (zero) throw DivisionByZero("deformation_symbol: xi must be nonzero");

    const QMatrix& p = seven_coords_matrix();
    QMatrix sym(8, 8);
    for (int a = 0; a < kVectorDim; ++a) {
        sym(0, a) = xi[static_cast<std::size_t>(a)];
        // Pair coordinates of xi ^ e_a.
        std::vector<mpq_class> w(kPairCount, 0);
        for (int t = 0; t < kPairCount; ++t) {
            const auto& [pp, qq] = pair_at(t);
            mpq_class val(0);
            if (qq - 1 == a) val += xi[static_cast<std::size_t>(pp - 1)];
            if (pp - 1 == a) val -= xi[static_cast<std::size_t>(qq - 1)];
            w[static_cast<std::size_t>(t)] = val;
        }
        std::vector<mpq_class> coords = p.apply(w);
        for (int r = 0; r < 7; ++r) sym(1 + r, a) = coords[static_cast<std::size_t>(r)];
    }
    return sym;
}

QMatrix dirac_symbol(const std::vector<mpq_class>& xi) {
    const GammaRep& rep = gamma_rep();
    QMatrix c = clifford(xi);
    QMatrix sym(8, 8);
    for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s)
            sym(r, s) = c(rep.plus_basis[static_cast<std::size_t>(r)],
                          rep.minus_basis[static_cast<std::size_t>(s)]);
    return sym;
}

SymbolMatch symbol_compare() {
    const SpinorIsos& isos = spinor_isos();

    auto rhs_parts = [&isos](const QMatrix& sigma) {
        // Split iso_plus . diag(s0, s1 I7) . sigma into the s0 and s1
        // contributions.
        QMatrix part0(8, 8), part1(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                part0(r, c) = isos.iso_plus(r, 0) * sigma(0, c);
                mpq_class acc(0);
                for (int k = 1; k < 8; ++k) acc += isos.iso_plus(r, k) * sigma(k, c);
                part1(r, c) = acc;
            }
        return std::make_pair(part0, part1);
    };

    // Solve for the scalars at xi = e1 (64 equations, 2 unknowns).
    std::vector<mpq_class> e1(kVectorDim, 0);
    e1[0] = 1;
    QMatrix lhs = dirac_symbol(e1) * isos.iso_minus;
    auto [p0, p1] = rhs_parts(deformation_symbol(e1));
    QMatrix system(64, 2);
    std::vector<mpq_class> rhs(64);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            system(r * 8 + c, 0) = p0(r, c);
            system(r * 8 + c, 1) = p1(r, c);
            rhs[static_cast<std::size_t>(r * 8 + c)] = lhs(r, c);
        }
    std::optional<std::vector<mpq_class>> sol = solve(system, rhs);
    SymbolMatch match;
    if (!sol) return match;
    match.s0 = (*sol)[0];
    match.s1 = (*sol)[1];

    // Verify on every basis covector; linearity in xi extends the identity
    // to all of R^8.
    for (int a = 0; a < kVectorDim; ++a) {
        std::vector<mpq_class> xi(kVectorDim, 0);
        xi[static_cast<std::size_t>(a)] = 1;
        QMatrix left = dirac_symbol(xi) * isos.iso_minus;
        auto [q0, q1] = rhs_parts(deformation_symbol(xi));
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                if (left(r, c) != match.s0 * q0(r, c) + match.s1 * q1(r, c)) return match;
    }
    match.found = true;
    return match;
}

} // namespace cayley::spin7
