#include "cayley/e8.hpp"

#include <algorithm>
#include <map>

#include "cayley/errors.hpp"
#include "cayley/linalg.hpp"

namespace cayley::e8 {

namespace {

constexpr int kN = 9; // the underlying C^9

void validate(const E8Elem& v) {
    if (v.r.rows() != kN || v.r.cols() != kN)
        throw DimensionMismatch("element matrix part must be 9x9");
    if (v.x.dim() != kN || v.x.degree() != 3 || v.y.dim() != kN || v.y.degree() != 3)
        throw DimensionMismatch("element form parts must be 3-forms on C^9");
}

// tr(a b) without materializing the product.
CycNum trace_product(const CycMatrix& a, const CycMatrix& b) {
    CycNum t(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const CycNum& aik = a(i, k);
            if (aik.is_zero()) continue;
            const CycNum& bki = b(k, i);
            if (bki.is_zero()) continue;
            t += aik * bki;
        }
    return t;
}

const std::vector<MultiIndex>& threeform_table() {
    static const std::vector<MultiIndex> table = [] {
        std::vector<MultiIndex> t;
        t.reserve(kFormBlock);
        for (int a = 1; a <= kN; ++a)
            for (int b = a + 1; b <= kN; ++b)
                for (int c = b + 1; c <= kN; ++c) t.push_back(MultiIndex({a, b, c}, kN));
        return t;
    }();
    return table;
}

const std::map<MultiIndex, int>& threeform_ranks() {
    static const std::map<MultiIndex, int> ranks = [] {
        std::map<MultiIndex, int> m;
        const auto& table = threeform_table();
        for (int t = 0; t < kFormBlock; ++t) m.emplace(table[static_cast<std::size_t>(t)], t);
        return m;
    }();
    return ranks;
}

} // namespace

E8Elem E8Elem::zero() { return {CycMatrix(kN, kN), KForm(kN, 3), KForm(kN, 3)}; }

int matrix_unit_index(int i, int j) {
    if (i < 1 || i > kN || j < 1 || j > kN || i == j)
        throw DimensionMismatch("matrix unit E_ij needs distinct 1-based indices");
    return (i - 1) * 8 + (j < i ? j - 1 : j - 2);
}

int cartan_index(int d) {
    if (d < 1 || d > 8) throw DimensionMismatch("Cartan index out of range");
    return 71 + d;
}

const MultiIndex& threeform_index(int t) {
    if (t < 0 || t >= kFormBlock) throw DimensionMismatch("3-form rank out of range");
    return threeform_table()[static_cast<std::size_t>(t)];
}

int threeform_rank(const MultiIndex& idx) {
    auto it = threeform_ranks().find(idx);
    if (it == threeform_ranks().end())
        throw DimensionMismatch("not a 3-form basis label: " + idx.str());
    return it->second;
}

int basis_grade(int k) {
    if (k < 0 || k >= kDim) throw DimensionMismatch("basis index out of range");
    if (k < kMatrixBlock) return 0;
    return k < kMatrixBlock + kFormBlock ? 1 : 2;
}

const E8Elem& basis_elem(int k) {
    static const std::vector<E8Elem> table = [] {
        std::vector<E8Elem> t;
        t.reserve(kDim);
        // Off-diagonal matrix units, row-major.
        for (int i = 1; i <= kN; ++i)
            for (int j = 1; j <= kN; ++j) {
                if (i == j) continue;
                E8Elem v = E8Elem::zero();
                v.r(i - 1, j - 1) = CycNum(1);
                t.push_back(std::move(v));
            }
        // Cartan differences H_d.
        for (int d = 1; d <= 8; ++d) {
            E8Elem v = E8Elem::zero();
            v.r(d - 1, d - 1) = CycNum(1);
            v.r(d, d) = CycNum(-1);
            t.push_back(std::move(v));
        }
        // x block, then y block.
        for (int part = 0; part < 2; ++part)
            for (int f = 0; f < kFormBlock; ++f) {
                E8Elem v = E8Elem::zero();
                KForm& target = part == 0 ? v.x : v.y;
                target.add_term(threeform_index(f), CycNum(1));
                t.push_back(std::move(v));
            }
        return t;
    }();
    if (k < 0 || k >= kDim) throw DimensionMismatch("basis index out of range");
    return table[static_cast<std::size_t>(k)];
}

void for_each_coord(const E8Elem& v, const std::function<void(int, const CycNum&)>& fn) {
    validate(v);
    // Off-diagonal part, in index order (row-major agrees with the layout).
    for (int i = 1; i <= kN; ++i)
        for (int j = 1; j <= kN; ++j) {
            if (i == j) continue;
            const CycNum& c = v.r(i - 1, j - 1);
            if (!c.is_zero()) fn(matrix_unit_index(i, j), c);
        }
    // Diagonal: diag = sum_d a_d H_d forces a_d = d_1 + ... + d_d, and the
    // ninth partial sum is the trace, which must vanish.
    bool diag_nonzero = false;
    for (int i = 0; i < kN; ++i)
        if (!v.r(i, i).is_zero()) {
            diag_nonzero = true;
            break;
        }
    if (diag_nonzero) {
        CycNum partial(0);
        for (int d = 1; d <= 8; ++d) {
            partial += v.r(d - 1, d - 1);
            if (!partial.is_zero()) fn(cartan_index(d), partial);
        }
        partial += v.r(kN - 1, kN - 1);
        if (!partial.is_zero())
            throw DimensionMismatch("matrix part has nonzero trace " + partial.str());
    }
    for (const auto& [idx, c] : v.x.terms()) fn(kMatrixBlock + threeform_rank(idx), c);
    for (const auto& [idx, c] : v.y.terms())
        fn(kMatrixBlock + kFormBlock + threeform_rank(idx), c);
}

std::vector<CycNum> to_coords(const E8Elem& v) {
    std::vector<CycNum> c(static_cast<std::size_t>(kDim), CycNum(0));
    for_each_coord(v, [&c](int k, const CycNum& val) { c[static_cast<std::size_t>(k)] = val; });
    return c;
}

E8Elem from_coords(const std::vector<CycNum>& c) {
    if (static_cast<int>(c.size()) != kDim)
        throw DimensionMismatch("coordinate vector must have length 248");
    E8Elem v = E8Elem::zero();
    int k = 0;
    for (int i = 1; i <= kN; ++i)
        for (int j = 1; j <= kN; ++j) {
            if (i == j) continue;
            v.r(i - 1, j - 1) = c[static_cast<std::size_t>(k++)];
        }
    // Invert the partial-sum map: d_d = a_d - a_{d-1}.
    CycNum prev(0);
    for (int d = 1; d <= 8; ++d) {
        const CycNum& a = c[static_cast<std::size_t>(cartan_index(d))];
        v.r(d - 1, d - 1) = a - prev;
        prev = a;
    }
    v.r(kN - 1, kN - 1) = -prev;
    for (int f = 0; f < kFormBlock; ++f) {
        const CycNum& cx = c[static_cast<std::size_t>(kMatrixBlock + f)];
        if (!cx.is_zero()) v.x.add_term(threeform_index(f), cx);
        const CycNum& cy = c[static_cast<std::size_t>(kMatrixBlock + kFormBlock + f)];
        if (!cy.is_zero()) v.y.add_term(threeform_index(f), cy);
    }
    return v;
}

CycMatrix cross(const KForm& x, const KForm& y) {
    if (x.dim() != kN || x.degree() != 3 || y.dim() != kN || y.degree() != 3)
        throw DimensionMismatch("cross is defined for 3-forms on C^9");
    CycMatrix m(kN, kN);
    if (x.is_zero() || y.is_zero()) return m;
    for (int j = 1; j <= kN; ++j) {
        KForm u = KForm::basis(kN, {j});
        KForm t = hodge_star(wedge(y, hodge_star(wedge(x, u))));
        for (const auto& [idx, c] : t.terms()) m(idx.indices()[0] - 1, j - 1) = c;
    }
    CycNum shift = CycNum(mpq_class(2, 3)) * pairing(x, y);
    if (!shift.is_zero())
        for (int i = 0; i < kN; ++i) m(i, i) += shift;
    return m;
}

E8Elem bracket(const E8Elem& a, const E8Elem& b) {
    validate(a);
    validate(b);
    E8Elem out = E8Elem::zero();
    bool arz = a.r.is_zero(), brz = b.r.is_zero();

    if (!arz && !brz) out.r = a.r * b.r - b.r * a.r;
    if (!a.x.is_zero() && !b.y.is_zero()) out.r += cross(a.x, b.y);
    if (!b.x.is_zero() && !a.y.is_zero()) out.r -= cross(b.x, a.y);

    if (!arz && !b.x.is_zero()) out.x += algebra_action(a.r, b.x);
    if (!brz && !a.x.is_zero()) out.x -= algebra_action(b.r, a.x);
    if (!a.y.is_zero() && !b.y.is_zero()) out.x += hodge_star(wedge(a.y, b.y));

    if (!arz && !b.y.is_zero()) out.y -= algebra_action(a.r.transposed(), b.y);
    if (!brz && !a.y.is_zero()) out.y += algebra_action(b.r.transposed(), a.y);
    if (!a.x.is_zero() && !b.x.is_zero()) out.y -= hodge_star(wedge(a.x, b.x));

    return out;
}

CycNum killing(const E8Elem& a, const E8Elem& b) {
    validate(a);
    validate(b);
    CycNum k = trace_product(a.r, b.r) + pairing(a.x, b.y) + pairing(b.x, a.y);
    return CycNum(60) * k;
}

E8Elem w_apply(const E8Elem& a) {
    validate(a);
    CycNum w = CycNum::omega();
    return {a.r, w * a.x, (w * w) * a.y};
}

E8Elem tau_hat(const E8Elem& a) {
    validate(a);
    return {-dagger(a.r), -a.x.conj(), -a.y.conj()};
}

E8Elem sigma_apply(const E8Elem& a) {
    validate(a);
    return {-dagger(a.r), -a.y.conj(), -a.x.conj()};
}

bool is_special_unitary(const CycMatrix& a) {
    if (a.rows() != kN || a.cols() != kN) return false;
    if (!(dagger(a) * a == CycMatrix::identity(kN))) return false;
    return det(a) == CycNum(1);
}

E8Elem phi_act(const CycMatrix& a, const E8Elem& v) {
    validate(v);
    if (!is_special_unitary(a)) throw NotSpecialUnitary();
    // a^{-1} = a^dagger, so (a^{-1})^T is the entrywise conjugate.
    return {a * v.r * dagger(a), group_action(a, v.x), group_action(conj(a), v.y)};
}

CycMatrix ad_matrix(const E8Elem& v) {
    const BracketTable& table = BracketTable::get();
    CycMatrix m(kDim, kDim);
    for_each_coord(v, [&m, &table](int i, const CycNum& ci) {
        for (int j = 0; j < kDim; ++j) {
            for (const BracketTable::Term& t : table.entry(i, j)) {
                mpq_class q(t.num, 3);
                q.canonicalize();
                m(t.idx, j) += ci * CycNum(q);
            }
        }
    });
    return m;
}

BracketTable::BracketTable() {
    rows_.resize(static_cast<std::size_t>(kDim) * kDim);
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            E8Elem br = bracket(basis_elem(i), basis_elem(j));
            std::vector<Term>& terms = rows_[static_cast<std::size_t>(i) * kDim +
                                             static_cast<std::size_t>(j)];
            for_each_coord(br, [&terms](int k, const CycNum& c) {
                // Every structure constant must be an integer over 3; this
                // is what makes the machine-integer fast path exact.
                if (!c.is_rational())
                    throw ConventionError("structure constant is not rational: " + c.str());
                mpq_class scaled = c.rational() * 3;
                if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p())
                    throw ConventionError("structure constant out of representable range: " +
                                          c.str());
                terms.push_back({k, static_cast<std::int64_t>(scaled.get_num().get_si())});
            });
        }
    }
}

const BracketTable& BracketTable::get() {
    static const BracketTable table;
    return table;
}

E8Elem BracketTable::bracket_of(int i, int j) const {
    std::vector<CycNum> c(static_cast<std::size_t>(kDim), CycNum(0));
    for (const Term& t : entry(i, j)) {
        mpq_class q(t.num, 3);
        q.canonicalize();
        c[static_cast<std::size_t>(t.idx)] = q;
    }
    return from_coords(c);
}

void BracketTable::double_bracket(int i, int j, int k, std::vector<std::int64_t>& acc,
                                  std::vector<int>& touched) const {
    for (const Term& t : entry(i, j)) {
        for (const Term& s : entry(t.idx, k)) {
            if (acc[static_cast<std::size_t>(s.idx)] == 0) touched.push_back(s.idx);
            acc[static_cast<std::size_t>(s.idx)] += t.num * s.num;
        }
    }
}

const std::vector<E8Elem>& compact_form_basis() {
    static const std::vector<E8Elem> basis = [] {
        std::vector<E8Elem> b;
        b.reserve(kDim);
        CycNum i = CycNum::i();
        // F_ij = E_ij - E_ji for i < j.
        for (int p = 1; p <= kN; ++p)
            for (int q = p + 1; q <= kN; ++q) {
                E8Elem v = E8Elem::zero();
                v.r(p - 1, q - 1) = CycNum(1);
                v.r(q - 1, p - 1) = CycNum(-1);
                b.push_back(std::move(v));
            }
        // G_ij = i (E_ij + E_ji) for i < j.
        for (int p = 1; p <= kN; ++p)
            for (int q = p + 1; q <= kN; ++q) {
                E8Elem v = E8Elem::zero();
                v.r(p - 1, q - 1) = i;
                v.r(q - 1, p - 1) = i;
                b.push_back(std::move(v));
            }
        // D_d = i H_d.
        for (int d = 1; d <= 8; ++d) {
            E8Elem v = E8Elem::zero();
            v.r(d - 1, d - 1) = i;
            v.r(d, d) = -i;
            b.push_back(std::move(v));
        }
        // u_I = (0, f_I, -f_I) and v_I = (0, i f_I, i f_I).
        for (int f = 0; f < kFormBlock; ++f) {
            E8Elem v = E8Elem::zero();
            v.x.add_term(threeform_index(f), CycNum(1));
            v.y.add_term(threeform_index(f), CycNum(-1));
            b.push_back(std::move(v));
        }
        for (int f = 0; f < kFormBlock; ++f) {
            E8Elem v = E8Elem::zero();
            v.x.add_term(threeform_index(f), i);
            v.y.add_term(threeform_index(f), i);
            b.push_back(std::move(v));
        }
        // Each element must be fixed by sigma -- the defining property of
        // the compact real span.
        for (const E8Elem& v : b)
            if (!(sigma_apply(v) == v))
                throw ConventionError("compact basis element is not sigma-fixed");
        return b;
    }();
    return basis;
}

std::vector<mpq_class> compact_coords_from_canonical(const std::vector<CycNum>& c) {
    if (c.size() != static_cast<std::size_t>(kDim))
        throw DimensionMismatch("expected 248 canonical coordinates");
    std::vector<mpq_class> out(static_cast<std::size_t>(kDim));
    CycNum i = CycNum::i();
    CycNum half{mpq_class(1, 2)};
    auto rational_or_throw = [](const CycNum& z) -> mpq_class {
        if (!z.is_rational())
            throw ConventionError("element is not in the compact real span: coefficient " +
                                  z.str());
        return z.rational();
    };
    int pair_slot = 0;
    for (int p = 1; p <= kN; ++p)
        for (int q = p + 1; q <= kN; ++q, ++pair_slot) {
            const CycNum& a = c[static_cast<std::size_t>(matrix_unit_index(p, q))];
            const CycNum& b = c[static_cast<std::size_t>(matrix_unit_index(q, p))];
            out[static_cast<std::size_t>(pair_slot)] = rational_or_throw(half * (a - b));
            out[static_cast<std::size_t>(36 + pair_slot)] =
                rational_or_throw(-i * half * (a + b));
        }
    for (int d = 1; d <= 8; ++d)
        out[static_cast<std::size_t>(71 + d)] =
            rational_or_throw(-i * c[static_cast<std::size_t>(cartan_index(d))]);
    for (int f = 0; f < kFormBlock; ++f) {
        const CycNum& a = c[static_cast<std::size_t>(kMatrixBlock + f)];
        const CycNum& b = c[static_cast<std::size_t>(kMatrixBlock + kFormBlock + f)];
        out[static_cast<std::size_t>(kMatrixBlock + f)] = rational_or_throw(half * (a - b));
        out[static_cast<std::size_t>(kMatrixBlock + kFormBlock + f)] =
            rational_or_throw(-i * half * (a + b));
    }
    return out;
}

std::vector<mpq_class> compact_coords(const E8Elem& v) {
    return compact_coords_from_canonical(to_coords(v));
}

E8Elem random_elem(Rng& rng, int support) {
    E8Elem v = E8Elem::zero();
    for (int s = 0; s < support; ++s) {
        int k = static_cast<int>(rng.below(kDim));
        v = v + random_cyc_mixed(rng) * basis_elem(k);
    }
    return v;
}

} // namespace cayley::e8
