#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/e8.hpp"
#include "cayley/errors.hpp"
#include "cayley/rng.hpp"

using namespace cayley;
using namespace cayley::e8;

namespace {

E8Elem matrix_elem(const CycMatrix& r) { return {r, KForm(9, 3), KForm(9, 3)}; }

E8Elem x_elem(const KForm& x) { return {CycMatrix(9, 9), x, KForm(9, 3)}; }

E8Elem y_elem(const KForm& y) { return {CycMatrix(9, 9), KForm(9, 3), y}; }

CycMatrix unit(int i, int j) {
    CycMatrix m(9, 9);
    m(i - 1, j - 1) = CycNum(1);
    return m;
}

} // namespace

TEST_CASE("bracket anchors in the matrix block") {
    E8Elem e12 = matrix_elem(unit(1, 2));
    E8Elem e21 = matrix_elem(unit(2, 1));
    E8Elem e23 = matrix_elem(unit(2, 3));
    E8Elem h1 = matrix_elem(unit(1, 1) - unit(2, 2));

    CHECK(bracket(e12, e21) == h1);
    CHECK(bracket(h1, e12) == CycNum(2) * e12);
    CHECK(bracket(e12, e23) == matrix_elem(unit(1, 3)));
    CHECK(bracket(e12, e12).is_zero());
}

TEST_CASE("cross product of a 3-form with itself") {
    KForm f = KForm::basis(9, {1, 2, 3});
    CycMatrix m = cross(f, f);
    mpq_class third(1, 3);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            CycNum expected(0);
            if (i == j) expected = CycNum(mpq_class(i < 3 ? 2 : -1) * third);
            CHECK(m(i, j) == expected);
        }
    CHECK(m.trace().is_zero());
}

TEST_CASE("cross products are traceless") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        int a = static_cast<int>(rng.below(84)), b = static_cast<int>(rng.below(84));
        CycMatrix m = cross(CycNum(rng.small_rational()) * KForm::basis(9, threeform_index(a)),
                            random_cyc_mixed(rng) * KForm::basis(9, threeform_index(b)));
        CHECK(m.trace().is_zero());
    }
}

TEST_CASE("bracket respects the grading") {
    KForm f = KForm::basis(9, {1, 2, 3});
    KForm g = KForm::basis(9, {4, 5, 6});
    KForm h = KForm::basis(9, {1, 2, 4});

    E8Elem xy = bracket(x_elem(f), y_elem(h));
    CHECK(xy.x.is_zero());
    CHECK(xy.y.is_zero());
    CHECK_FALSE(xy.r.is_zero());

    E8Elem xx = bracket(x_elem(f), x_elem(g));
    CHECK(xx.r.is_zero());
    CHECK(xx.x.is_zero());
    CHECK(xx.y == -hodge_star(wedge(f, g)));
    CHECK_FALSE(xx.y.is_zero());

    E8Elem yy = bracket(y_elem(f), y_elem(g));
    CHECK(yy.r.is_zero());
    CHECK(yy.y.is_zero());
    CHECK(yy.x == hodge_star(wedge(f, g)));
}

TEST_CASE("bracket is bilinear, antisymmetric, and satisfies Jacobi") {
    Rng rng(11);
    for (int t = 0; t < 12; ++t) {
        E8Elem a = random_elem(rng, 3);
        E8Elem b = random_elem(rng, 3);
        E8Elem c = random_elem(rng, 2);
        CycNum s = random_cyc_mixed(rng);

        CHECK(bracket(a, b) == -bracket(b, a));
        CHECK(bracket(s * a + c, b) == s * bracket(a, b) + bracket(c, b));
        E8Elem jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                     bracket(bracket(c, a), b);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("ad_matrix matches the bracket in coordinates") {
    Rng rng(13);
    for (int t = 0; t < 5; ++t) {
        E8Elem v = random_elem(rng, 3);
        E8Elem u = random_elem(rng, 3);
        std::vector<CycNum> expect = to_coords(bracket(v, u));
        std::vector<CycNum> got = ad_matrix(v).apply(to_coords(u));
        CHECK(expect == got);
    }
}

TEST_CASE("killing form anchors") {
    E8Elem h1 = matrix_elem(unit(1, 1) - unit(2, 2));
    CHECK(killing(h1, h1) == CycNum(120));
    CHECK(killing(matrix_elem(unit(1, 2)), matrix_elem(unit(2, 1))) == CycNum(60));

    KForm f = KForm::basis(9, {1, 2, 3});
    CHECK(killing(x_elem(f), y_elem(f)) == CycNum(60));
    CHECK(killing(x_elem(f), x_elem(f)).is_zero());

    // And the trace definition agrees: trace(ad X ad Y) summed entrywise.
    Rng rng(17);
    for (int t = 0; t < 3; ++t) {
        int i = static_cast<int>(rng.below(kDim)), j = static_cast<int>(rng.below(kDim));
        CycMatrix a = ad_matrix(basis_elem(i)), b = ad_matrix(basis_elem(j));
        CycNum tr(0);
        for (int p = 0; p < kDim; ++p)
            for (int q = 0; q < kDim; ++q) tr += a(p, q) * b(q, p);
        CHECK(tr == killing(basis_elem(i), basis_elem(j)));
    }
}

TEST_CASE("w is an order-three automorphism fixing the matrix block") {
    Rng rng(19);
    E8Elem r_only = matrix_elem(unit(3, 5));
    CHECK(w_apply(r_only) == r_only);

    for (int t = 0; t < 8; ++t) {
        E8Elem a = random_elem(rng, 3);
        E8Elem b = random_elem(rng, 3);
        CHECK(w_apply(w_apply(w_apply(a))) == a);
        CHECK(bracket(w_apply(a), w_apply(b)) == w_apply(bracket(a, b)));
        CHECK(killing(w_apply(a), w_apply(b)) == killing(a, b));
    }
}

TEST_CASE("tau is a conjugate-linear involution") {
    Rng rng(23);
    for (int t = 0; t < 8; ++t) {
        E8Elem a = random_elem(rng, 3);
        CycNum c = random_cyc_mixed(rng);
        CHECK(tau_hat(tau_hat(a)) == a);
        CHECK(tau_hat(c * a) == c.conj() * tau_hat(a));
        CHECK(tau_hat(CycNum::i() * a) == -(CycNum::i() * tau_hat(a)));
    }
    // Real symmetric matrices are negated.
    CycMatrix sym = unit(1, 2) + unit(2, 1);
    CHECK(tau_hat(matrix_elem(sym)) == -matrix_elem(sym));
}

TEST_CASE("sigma is a conjugate-linear bracket automorphism") {
    Rng rng(29);
    for (int t = 0; t < 8; ++t) {
        E8Elem a = random_elem(rng, 3);
        E8Elem b = random_elem(rng, 3);
        CHECK(sigma_apply(sigma_apply(a)) == a);
        CHECK(sigma_apply(bracket(a, b)) == bracket(sigma_apply(a), sigma_apply(b)));
    }
}

TEST_CASE("compact basis is sigma-fixed with negative Killing squares") {
    const std::vector<E8Elem>& basis = compact_form_basis();
    REQUIRE(basis.size() == 248);
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const E8Elem& b = basis[rng.below(basis.size())];
        CHECK(sigma_apply(b) == b);
        CycNum k = killing(b, b);
        REQUIRE(k.is_rational());
        CHECK(k.rational() < 0);
    }
}

TEST_CASE("compact coordinates round-trip") {
    const std::vector<E8Elem>& basis = compact_form_basis();
    Rng rng(37);
    for (int t = 0; t < 6; ++t) {
        E8Elem v = E8Elem::zero();
        std::vector<mpq_class> want(248);
        for (int s = 0; s < 5; ++s) {
            std::size_t k = rng.below(basis.size());
            mpq_class q = rng.small_rational();
            want[k] += q;
            v = v + CycNum(q) * basis[k];
        }
        CHECK(compact_coords(v) == want);
    }
    // A vector outside the real span is rejected.
    CHECK_THROWS_AS(compact_coords(CycNum::i() * basis[0]), const ConventionError&);
}

TEST_CASE("phi rejects matrices outside SU(9)") {
    CHECK_THROWS_AS(phi_act(CycNum(2) * CycMatrix::identity(9), E8Elem::zero()),
                    const NotSpecialUnitary&);
    // A bare transposition is unitary with determinant -1.
    CycMatrix swap = CycMatrix::identity(9);
    swap(0, 0) = CycNum(0);
    swap(1, 1) = CycNum(0);
    swap(0, 1) = CycNum(1);
    swap(1, 0) = CycNum(1);
    CHECK_FALSE(is_special_unitary(swap));
    CHECK_THROWS_AS(phi_act(swap, E8Elem::zero()), const NotSpecialUnitary&);
}

TEST_CASE("phi of central elements is the identity map") {
    Rng rng(41);
    CycMatrix id = CycMatrix::identity(9);
    CycMatrix omega_id = CycNum::omega() * id;
    CHECK(is_special_unitary(omega_id));
    for (int t = 0; t < 5; ++t) {
        E8Elem v = random_elem(rng, 4);
        CHECK(phi_act(id, v) == v);
        CHECK(phi_act(omega_id, v) == v);
    }
}

TEST_CASE("phi of a phased permutation preserves bracket and killing") {
    // Cyclic shift with a balancing phase: det of the 9-cycle is +1, so all
    // phases can stay trivial except one pair chosen to cancel.
    CycMatrix a(9, 9);
    for (int j = 0; j < 9; ++j) a((j + 1) % 9, j) = CycNum(1);
    REQUIRE(is_special_unitary(a));

    Rng rng(43);
    for (int t = 0; t < 6; ++t) {
        E8Elem u = random_elem(rng, 3);
        E8Elem v = random_elem(rng, 3);
        CHECK(bracket(phi_act(a, u), phi_act(a, v)) == phi_act(a, bracket(u, v)));
        CHECK(killing(phi_act(a, u), phi_act(a, v)) == killing(u, v));
    }

    // Multiplicativity on a second exact unitary.
    CycMatrix b = CycMatrix::identity(9);
    b(4, 4) = CycNum::zeta(1);
    b(7, 7) = CycNum::zeta(11);
    REQUIRE(is_special_unitary(b));
    E8Elem u = random_elem(rng, 3);
    CHECK(phi_act(a * b, u) == phi_act(a, phi_act(b, u)));
}

TEST_CASE("canonical coordinates round-trip") {
    Rng rng(47);
    for (int t = 0; t < 6; ++t) {
        E8Elem v = random_elem(rng, 5);
        CHECK(from_coords(to_coords(v)) == v);
    }
    for (int k = 0; k < kDim; k += 17) {
        std::vector<CycNum> c(kDim, CycNum(0));
        c[static_cast<std::size_t>(k)] = CycNum(1);
        CHECK(to_coords(from_coords(c)) == c);
    }
    CHECK_THROWS_AS(to_coords(matrix_elem(unit(1, 1))), const DimensionMismatch&);
}

TEST_CASE("structure-constant table agrees with the definitional bracket") {
    const BracketTable& table = BracketTable::get();
    Rng rng(53);
    for (int t = 0; t < 40; ++t) {
        int i = static_cast<int>(rng.below(kDim)), j = static_cast<int>(rng.below(kDim));
        CHECK(table.bracket_of(i, j) == bracket(basis_elem(i), basis_elem(j)));
    }
}
