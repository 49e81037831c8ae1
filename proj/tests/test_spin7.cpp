#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cayley/errors.hpp"
#include "cayley/kform.hpp"
#include "cayley/linalg.hpp"
#include "cayley/rng.hpp"
#include "cayley/spin7.hpp"

using namespace cayley;
using namespace cayley::spin7;

namespace {

// Scalar 2-form from (pair, coefficient) terms.
TwoForm8 scalar_form(std::initializer_list<std::pair<std::pair<int, int>, long>> terms) {
    TwoForm8 f = TwoForm8::zero(1);
    for (const auto& [pair, c] : terms)
        f.coeffs[pair_rank(pair.first, pair.second)](0, 0) = CycNum(c);
    return f;
}

std::vector<mpq_class> covector(std::initializer_list<mpq_class> entries) {
    return {entries};
}

// v = -dxOmega18 + dx27 - dx36 + dx45, an eigenvalue-3 vector of L (pure
// Lambda^2_7 content).
TwoForm8 seven_sample() {
    return scalar_form({{{1, 8}, -1}, {{2, 7}, 1}, {{3, 6}, -1}, {{4, 5}, 1}});
}

} // namespace

TEST_CASE("pair indexing is the lexicographic rank") {
    CHECK(pair_rank(1, 2) == 0);
    CHECK(pair_rank(1, 8) == 6);
    CHECK(pair_rank(2, 3) == 7);
    CHECK(pair_rank(7, 8) == 27);
    for (int t = 0; t < kPairCount; ++t) {
        const auto& [a, b] = pair_at(t);
        CHECK(1 <= a);
        CHECK(a < b);
        CHECK(b <= kVectorDim);
        CHECK(pair_rank(a, b) == t);
    }
}

TEST_CASE("Cayley form: 14 unit terms, frozen signs, self-dual") {
    const KForm& om = cayley_form();
    CHECK(om.degree() == 4);
    CHECK(om.terms().size() == 14);
    for (const auto& [idx, c] : om.terms())
        CHECK((c == CycNum(1) || c == CycNum(-1)));

    CHECK(om.coefficient(MultiIndex({1, 2, 3, 4}, 8)) == CycNum(1));
    CHECK(om.coefficient(MultiIndex({5, 6, 7, 8}, 8)) == CycNum(1));
    CHECK(om.coefficient(MultiIndex({1, 2, 7, 8}, 8)) == CycNum(-1));
    CHECK(om.coefficient(MultiIndex({3, 4, 5, 6}, 8)) == CycNum(-1));
    CHECK(om.coefficient(MultiIndex({1, 3, 6, 8}, 8)) == CycNum(1));
    // No stray term outside the 14.
    CHECK(om.coefficient(MultiIndex({1, 2, 3, 5}, 8)).is_zero());

    CHECK(hodge_star(om) == om);
    // |Omega|^2 = 14, so Omega ^ Omega = 14 vol.
    CHECK(wedge(om, om) == CycNum(14) * volume_form(8));
}

TEST_CASE("L(F) = star(F ^ Omega): symmetry, frozen column, spectrum") {
    const QMatrix& L = l_omega_matrix();
    CHECK(L.rows() == kPairCount);
    CHECK(L.cols() == kPairCount);

    mpq_class trace = 0;
    for (int i = 0; i < kPairCount; ++i) {
        trace += L(i, i);
        for (int j = 0; j < i; ++j) CHECK(L(i, j) == L(j, i));
    }
    CHECK(trace == 0); // 7 * 3 + 21 * (-1)

    // L dx12 = dx34 - dx56 - dx78: the quadruple {12, 34, 56, 78} closes up.
    int col = pair_rank(1, 2);
    for (int r = 0; r < kPairCount; ++r) {
        mpq_class want = 0;
        if (r == pair_rank(3, 4)) want = 1;
        if (r == pair_rank(5, 6) || r == pair_rank(7, 8)) want = -1;
        CHECK(L(r, col) == want);
    }

    CycMatrix lc(kPairCount, kPairCount);
    for (int i = 0; i < kPairCount; ++i)
        for (int j = 0; j < kPairCount; ++j) lc(i, j) = CycNum(L(i, j));
    std::vector<Eigenspace> spaces = rational_eigenspaces(lc);
    REQUIRE(spaces.size() == 2);
    CHECK(spaces[0].value == 3);
    CHECK(spaces[0].multiplicity == 7);
    CHECK(spaces[1].value == -1);
    CHECK(spaces[1].multiplicity == 21);
}

TEST_CASE("projectors split Lambda^2 into the 7 and 21 parts") {
    const QMatrix& p7 = pi7_matrix();
    const QMatrix& p21 = pi21_matrix();
    QMatrix id = QMatrix::identity(kPairCount);

    CHECK(p7 + p21 == id);
    CHECK(p7 * p7 == p7);
    CHECK(p21 * p21 == p21);
    CHECK((p7 * p21).is_zero());
    CHECK(rank(p7) == 7);
    CHECK(rank(p21) == 21);

    // The frozen eigenvalue-3 sample is fixed by pi7 and killed by pi21.
    TwoForm8 v = seven_sample();
    CHECK(project(v, Part::seven) == v);
    CHECK(project(v, Part::twentyone).is_zero());
    // And L v = 3 v, straight from the operator.
    const QMatrix& L = l_omega_matrix();
    for (int r = 0; r < kPairCount; ++r) {
        mpq_class acc = 0;
        for (int c = 0; c < kPairCount; ++c) {
            if (v.coeffs[c](0, 0).is_zero()) continue;
            acc += L(r, c) * v.coeffs[c](0, 0).rational();
        }
        CHECK(CycNum(acc) == CycNum(3) * v.coeffs[r](0, 0));
    }
}

TEST_CASE("instanton check: projections, residuals, exact norms") {
    CHECK(instanton_check(TwoForm8::zero(1)).is_instanton);
    CHECK(instanton_check(TwoForm8::zero(3)).is_instanton);

    Rng rng(515);
    for (int trial = 0; trial < 10; ++trial) {
        int d = trial % 2 == 0 ? 1 : 2;
        TwoForm8 f = random_two_form(rng, d);
        TwoForm8 f21 = project(f, Part::twentyone);
        InstantonResult ok = instanton_check(f21);
        CHECK(ok.is_instanton);
        CHECK(ok.residual.is_zero());
        CHECK(ok.residual_norm_sq == 0);
        // Putting the seven part back breaks it unless it was zero already.
        InstantonResult full = instanton_check(f);
        TwoForm8 f7 = project(f, Part::seven);
        CHECK(full.is_instanton == f7.is_zero());
        CHECK(full.residual == f7);
    }

    // Pure Lambda^2_7 sample: residual is the form itself, norm 4.
    TwoForm8 v = seven_sample();
    InstantonResult res = instanton_check(v);
    CHECK_FALSE(res.is_instanton);
    CHECK(res.residual == v);
    CHECK(res.residual_norm_sq == 4);
}

TEST_CASE("TwoForm8 validation rejects malformed coefficients") {
    TwoForm8 f = TwoForm8::zero(2);
    f.validate();

    // Not anti-hermitian.
    f.coeffs[0](0, 1) = CycNum(1);
    CHECK_THROWS_AS(f.validate(), DimensionMismatch);
    f.coeffs[0](1, 0) = CycNum(-1);
    f.validate(); // antisymmetric real is fine

    // Nonzero trace: i on one diagonal slot only.
    TwoForm8 g = TwoForm8::zero(2);
    g.coeffs[3](0, 0) = CycNum::i();
    CHECK_THROWS_AS(g.validate(), DimensionMismatch);
    g.coeffs[3](1, 1) = -CycNum::i();
    g.validate();

    // Wrong matrix shape.
    TwoForm8 h = TwoForm8::zero(2);
    h.coeffs[5] = CycMatrix(1, 1);
    CHECK_THROWS_AS(h.validate(), DimensionMismatch);
}

TEST_CASE("gamma matrices generate Cl(8) with split volume") {
    const GammaRep& rep = gamma_rep();
    REQUIRE(rep.gammas.size() == 8);
    QMatrix id = QMatrix::identity(kSpinorDim);

    for (int i = 0; i < 8; ++i) {
        CHECK(rep.gammas[i] * rep.gammas[i] == mpq_class(-1) * id);
        for (int j = i + 1; j < 8; ++j)
            CHECK((rep.gammas[i] * rep.gammas[j] + rep.gammas[j] * rep.gammas[i]).is_zero());
    }

    CHECK(rep.volume * rep.volume == id);
    CHECK(rep.plus_basis.size() == 8);
    CHECK(rep.minus_basis.size() == 8);
    for (int c : rep.plus_basis) CHECK(rep.volume(c, c) == 1);
    for (int c : rep.minus_basis) CHECK(rep.volume(c, c) == -1);

    // Each generator anticommutes with the volume, i.e. swaps S+ and S-.
    for (const QMatrix& g : rep.gammas)
        CHECK((g * rep.volume + rep.volume * g).is_zero());

    // c(xi)^2 = -|xi|^2 on random covectors.
    Rng rng(8128);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpq_class> xi(kVectorDim);
        mpq_class norm = 0;
        for (auto& q : xi) {
            q = rng.small_rational();
            norm += q * q;
        }
        CHECK(clifford(xi) * clifford(xi) == (-norm) * id);
    }
}

TEST_CASE("unit spinor and the two spinor isomorphisms") {
    const std::vector<mpq_class>& eta = unit_spinor();
    REQUIRE(eta.size() == kSpinorDim);
    mpq_class norm = 0;
    for (const mpq_class& q : eta) norm += q * q;
    CHECK(norm == 1);
    // eta lives in S+.
    const GammaRep& rep = gamma_rep();
    for (int c : rep.minus_basis) CHECK(sgn(eta[c]) == 0);

    const SpinorIsos& isos = spinor_isos();
    CHECK(rank(isos.iso_minus) == 8);
    CHECK(rank(isos.iso_plus) == 8);
    REQUIRE(isos.seven_basis.size() == 7);
    const QMatrix& L = l_omega_matrix();
    for (const auto& v : isos.seven_basis) {
        REQUIRE(v.size() == kPairCount);
        for (int r = 0; r < kPairCount; ++r) {
            mpq_class acc = 0;
            for (int c = 0; c < kPairCount; ++c) acc += L(r, c) * v[c];
            CHECK(acc == 3 * v[r]);
        }
    }
}

TEST_CASE("deformation symbol: shape, linearity, injectivity") {
    std::vector<mpq_class> e1 = covector({1, 0, 0, 0, 0, 0, 0, 0});
    QMatrix s = deformation_symbol(e1);
    CHECK(s.rows() == 8);
    CHECK(s.cols() == 8);
    CHECK(rank(s) == 8);
    // Row 0 is the inner product with xi.
    for (int c = 0; c < 8; ++c) CHECK(s(0, c) == e1[c]);

    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<mpq_class> xi(kVectorDim);
        bool nonzero = false;
        for (auto& q : xi) {
            q = rng.small_rational();
            if (sgn(q) != 0) nonzero = true;
        }
        if (!nonzero) xi[0] = 1;
        QMatrix sym = deformation_symbol(xi);
        CHECK(rank(sym) == 8);
        for (int c = 0; c < 8; ++c) CHECK(sym(0, c) == xi[c]);
        // Homogeneity of degree one.
        std::vector<mpq_class> xi4 = xi;
        for (auto& q : xi4) q *= 4;
        CHECK(deformation_symbol(xi4) == mpq_class(4) * sym);
    }

    CHECK_THROWS_AS(deformation_symbol(std::vector<mpq_class>(8, 0)), DivisionByZero);
}

TEST_CASE("Dirac symbol is an exact isometry up to scale") {
    Rng rng(100);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<mpq_class> xi(kVectorDim);
        mpq_class norm = 0;
        for (auto& q : xi) {
            q = rng.small_rational();
            norm += q * q;
        }
        if (sgn(norm) == 0) {
            xi[1] = 1;
            norm = 1;
        }
        QMatrix d = dirac_symbol(xi);
        CHECK(d.transposed() * d == norm * QMatrix::identity(8));
        CHECK(rank(d) == 8);
    }
}

TEST_CASE("the two symbols coincide through the spinor isomorphisms") {
    SymbolMatch match = symbol_compare();
    REQUIRE(match.found);
    CHECK(match.s0 == -1);
    CHECK(match.s1 == 1);

    // Re-check the intertwining at a covector away from the basis.
    const SpinorIsos& isos = spinor_isos();
    std::vector<mpq_class> xi = covector({1, 1, 0, 0, 0, 0, 0, 0});
    QMatrix lhs = dirac_symbol(xi) * isos.iso_minus;
    QMatrix sigma = deformation_symbol(xi);
    QMatrix scaled(8, 8);
    for (int c = 0; c < 8; ++c) {
        scaled(0, c) = match.s0 * sigma(0, c);
        for (int r = 1; r < 8; ++r) scaled(r, c) = match.s1 * sigma(r, c);
    }
    CHECK(lhs == isos.iso_plus * scaled);
}
