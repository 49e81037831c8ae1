#include "cayley/cellcoh.hpp"

#include <algorithm>
#include <utility>

#include "cayley/errors.hpp"
#include "cayley/linalg.hpp"
#include "cayley/smith.hpp"

namespace cayley::cellcoh {

namespace {

bool in_range(const CochainComplex& c, int k) { return k >= 0 && k <= c.dim(); }

// Rank helpers that tolerate empty matrices (a degree with no cells).
int integer_rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    QMatrix q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q(i, j) = mpq_class(m(i, j));
    return rank(q);
}

} // namespace

void CochainComplex::validate() const {
    if (ranks.empty()) throw DimensionMismatch("complex: at least one degree required");
    for (int n : ranks)
        if (n < 0) throw DimensionMismatch("complex: negative cochain rank");
    if (deltas.size() + 1 != ranks.size())
        throw DimensionMismatch("complex: expected one delta per adjacent degree pair");
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        const IntMatrix& d = deltas[k];
        if (d.rows() != ranks[k + 1] || d.cols() != ranks[k])
            throw DimensionMismatch("complex: delta^" + std::to_string(k) +
                                    " has shape " + std::to_string(d.rows()) + "x" +
                                    std::to_string(d.cols()) + ", expected " +
                                    std::to_string(ranks[k + 1]) + "x" +
                                    std::to_string(ranks[k]));
    }
    for (std::size_t k = 0; k + 1 < deltas.size(); ++k)
        if (!(deltas[k + 1] * deltas[k]).is_zero()) throw NotAComplex(static_cast<int>(k));
}

CohGroup cohomology(const CochainComplex& c, int k) {
    c.validate();
    if (!in_range(c, k))
        throw DimensionMismatch("cohomology: degree " + std::to_string(k) +
                                " outside 0.." + std::to_string(c.dim()));
    CohGroup h;
    int kernel_dim = c.ranks[static_cast<std::size_t>(k)];
    if (k < c.dim()) {
        const IntMatrix& dk = c.deltas[static_cast<std::size_t>(k)];
        if (dk.rows() > 0 && dk.cols() > 0)
            kernel_dim -= smith_normal_form(dk).rank;
    }
    int image_rank = 0;
    if (k > 0) {
        const IntMatrix& prev = c.deltas[static_cast<std::size_t>(k - 1)];
        if (prev.rows() > 0 && prev.cols() > 0) {
            SmithForm snf = smith_normal_form(prev);
            image_rank = snf.rank;
            for (const mpz_class& d : snf.diag)
                if (d >= 2) h.torsion.push_back(d);
        }
    }
    h.betti = kernel_dim - image_rank;
    return h;
}

namespace {

// Naive elementary-divisor computation: always take the first nonzero entry
// as pivot, clear with truncated quotients, enforce divisibility by folding
// offending entries into the pivot position.  Deliberately unoptimized; this
// is the oracle the Smith form is checked against.
std::vector<mpz_class> naive_divisors(IntMatrix m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> diag;
    int t = 0;
    while (t < rows && t < cols) {
        // First nonzero entry of the trailing submatrix, row-major.
        int pr = -1, pc = -1;
        for (int i = t; i < rows && pr < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (sgn(m(i, j)) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
        for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));
        bool cleared = false;
        while (!cleared) {
            cleared = true;
            for (int i = t + 1; i < rows; ++i) {
                if (sgn(m(i, t)) == 0) continue;
                mpz_class q = m(i, t) / m(t, t); // truncated
                for (int j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (sgn(m(i, t)) != 0) { // remainder: swap up and retry
                    for (int j = 0; j < cols; ++j) std::swap(m(t, j), m(i, j));
                    cleared = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (sgn(m(t, j)) == 0) continue;
                mpz_class q = m(t, j) / m(t, t);
                for (int i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (sgn(m(t, j)) != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, j));
                    cleared = false;
                }
            }
        }
        diag.push_back(abs(m(t, t)));
        ++t;
    }
    // Divisibility fixup: replace offending adjacent pairs by gcd and lcm
    // until the chain holds.
    bool chained = false;
    while (!chained) {
        chained = true;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (sgn(diag[i]) == 0) {
                // Zeros sort to the end of the chain.
                if (sgn(diag[i + 1]) != 0) {
                    std::swap(diag[i], diag[i + 1]);
                    chained = false;
                }
                continue;
            }
            if (diag[i + 1] % diag[i] != 0) {
                mpz_class g = gcd(diag[i], diag[i + 1]);
                mpz_class l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                chained = false;
            }
        }
    }
    return diag;
}

} // namespace

CohGroup cohomology_oracle(const CochainComplex& c, int k) {
    c.validate();
    if (!in_range(c, k))
        throw DimensionMismatch("cohomology_oracle: degree out of range");
    CohGroup h;
    int kernel_dim = c.ranks[static_cast<std::size_t>(k)];
    if (k < c.dim()) kernel_dim -= integer_rank(c.deltas[static_cast<std::size_t>(k)]);
    int image_rank = 0;
    if (k > 0) {
        const IntMatrix& prev = c.deltas[static_cast<std::size_t>(k - 1)];
        if (prev.rows() > 0 && prev.cols() > 0) {
            for (const mpz_class& d : naive_divisors(prev)) {
                if (sgn(d) == 0) continue;
                ++image_rank;
                if (d >= 2) h.torsion.push_back(d);
            }
        }
    }
    h.betti = kernel_dim - image_rank;
    return h;
}

std::string CohGroup::str() const {
    if (is_trivial()) return "0";
    std::string out;
    if (betti == 1) out = "Z";
    else if (betti > 1) out = "Z^" + std::to_string(betti);
    for (const mpz_class& d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

OrientabilityVerdict orientability_verdict(const CochainComplex& c) {
    c.validate();
    if (c.dim() < 3)
        throw DimensionMismatch("orientability_verdict: dimension too small (need >= 3)");
    OrientabilityVerdict verdict;
    verdict.h3 = cohomology(c, 3);

    // Route one: Hom(H^3, Z_2) = 0 iff H^3 has no free part and no factor
    // Z/d with d even.
    bool free_part = verdict.h3.betti != 0;
    bool even_torsion = false;
    for (const mpz_class& d : verdict.h3.torsion)
        if (d % 2 == 0) even_torsion = true;
    bool via_hom = !free_part && !even_torsion;

    // Route two: |H^3| finite and odd.
    bool finite = verdict.h3.betti == 0;
    bool odd_order = true;
    for (const mpz_class& d : verdict.h3.torsion)
        if (d % 2 == 0) odd_order = false;
    bool via_order = finite && odd_order;

    if (via_hom != via_order)
        throw ConventionError("orientability_verdict: the two formulations disagree");

    verdict.criterion_holds = via_hom;
    verdict.reason = free_part      ? "free part present"
                     : even_torsion ? "even torsion present"
                                    : "all torsion odd";
    return verdict;
}

Pi1Report pi1_config(const CochainComplex& c) {
    c.validate();
    if (c.dim() < 3)
        throw DimensionMismatch("pi1_config: dimension too small (need >= 3)");
    return {cohomology(c, 3), c.dim() != 8};
}

CohGroup mapping_homotopy(const CochainComplex& c, int q) {
    if (q < 1 || q > 3)
        throw DimensionMismatch("mapping_homotopy: q must be between 1 and 3");
    c.validate();
    if (c.dim() < 4 - q)
        throw DimensionMismatch("mapping_homotopy: dimension too small for q = " +
                                std::to_string(q));
    return cohomology(c, 4 - q);
}

CohGroup e8_homotopy(int i) {
    if (i < 0 || i > 15) throw DimensionMismatch("e8_homotopy: i must be between 0 and 15");
    CohGroup g;
    g.betti = (i == 3 || i == 15) ? 1 : 0;
    return g;
}

CohGroup sphere_config_homotopy(int n, int k) {
    if (n < 1 || n > 8) throw DimensionMismatch("sphere_config_homotopy: n must be 1..8");
    if (k < 1 || k > 3) throw DimensionMismatch("sphere_config_homotopy: k must be 1..3");
    CohGroup g;
    g.betti = (n + k == 4) ? 1 : 0;
    // The loop-space reduction identifies this group with pi_{n+k-1}(E8).
    if (!(g == e8_homotopy(n + k - 1)))
        throw ConventionError("sphere_config_homotopy: disagrees with the E8 table");
    return g;
}

namespace {

CochainComplex diagonal_fixture(std::vector<int> ranks) {
    CochainComplex c;
    c.ranks = std::move(ranks);
    for (std::size_t k = 0; k + 1 < c.ranks.size(); ++k)
        c.deltas.emplace_back(c.ranks[k + 1], c.ranks[k]);
    return c;
}

std::vector<Fixture> make_fixtures() {
    std::vector<Fixture> out;

    out.push_back({"hp2",
                   "Quaternionic projective plane: one cell in each of the degrees 0, 4, 8, "
                   "so every differential vanishes and H^3 = 0.",
                   diagonal_fixture({1, 0, 0, 0, 1, 0, 0, 0, 1})});

    out.push_back({"gr2c4",
                   "Grassmannian of 2-planes in C^4 via its six Schubert cells, one for each "
                   "partition inside a 2x2 box: real degrees 0, 2, 4, 4, 6, 8.  Cells sit in "
                   "even degrees only, so the differentials vanish and H^3 = 0.",
                   diagonal_fixture({1, 0, 1, 0, 2, 0, 1, 0, 1})});

    out.push_back({"free-h3",
                   "Product-of-spheres cell structure (S^3 x S^5): cells in degrees 0, 3, 5, "
                   "8 with zero differentials, so H^3 = Z and the criterion fails on the "
                   "free part.",
                   diagonal_fixture({1, 0, 0, 1, 0, 1, 0, 0, 1})});

    Fixture t3{"torsion-3",
               "Mapping-cone-style complex with delta^2 = (3): H^3 = Z/3, finite of odd "
               "order, so the criterion holds.",
               diagonal_fixture({1, 0, 1, 1, 0, 0, 0, 0, 1})};
    t3.complex.deltas[2](0, 0) = 3;
    out.push_back(std::move(t3));

    Fixture t2{"torsion-2",
               "Mapping-cone-style complex with delta^2 = (2): H^3 = Z/2, and the "
               "criterion fails on even torsion.",
               diagonal_fixture({1, 0, 1, 1, 0, 0, 0, 0, 1})};
    t2.complex.deltas[2](0, 0) = 2;
    out.push_back(std::move(t2));

    for (const Fixture& f : out) f.complex.validate();
    return out;
}

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = make_fixtures();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    throw Error("unknown fixture \"" + name + "\"; available: hp2, gr2c4, free-h3, "
                "torsion-3, torsion-2");
}

CochainComplex random_complex(Rng& rng) {
    CochainComplex c;
    int dim = 2 + static_cast<int>(rng.below(4)); // 2..5
    c.ranks.resize(static_cast<std::size_t>(dim) + 1);
    for (int& n : c.ranks) n = static_cast<int>(rng.below(7)); // 0..6
    for (int k = 0; k < dim; ++k) {
        IntMatrix d(c.ranks[static_cast<std::size_t>(k) + 1],
                    c.ranks[static_cast<std::size_t>(k)]);
        bool force_zero = rng.below(3) == 0;
        if (!force_zero && d.rows() > 0 && d.cols() > 0) {
            if (k == 0 || c.deltas.back().is_zero()) {
                for (int i = 0; i < d.rows(); ++i)
                    for (int j = 0; j < d.cols(); ++j)
                        d(i, j) = static_cast<long>(rng.range(-4, 4));
            } else {
                // Rows must annihilate the image of the previous delta: draw
                // them from the integral left-kernel.
                const IntMatrix& prev = c.deltas.back();
                QMatrix pt(prev.cols(), prev.rows());
                for (int i = 0; i < prev.rows(); ++i)
                    for (int j = 0; j < prev.cols(); ++j) pt(j, i) = mpq_class(prev(i, j));
                std::vector<std::vector<mpq_class>> basis = rank_kernel(pt).second;
                std::vector<std::vector<mpz_class>> integral;
                for (const auto& v : basis) {
                    mpz_class scale(1);
                    for (const mpq_class& q : v)
                        scale = scale / gcd(scale, q.get_den()) * q.get_den();
                    std::vector<mpz_class> w;
                    for (const mpq_class& q : v) {
                        mpq_class s = q * scale;
                        s.canonicalize();
                        w.push_back(s.get_num());
                    }
                    integral.push_back(std::move(w));
                }
                for (int i = 0; i < d.rows(); ++i)
                    for (const auto& w : integral) {
                        long coeff = static_cast<long>(rng.range(-2, 2));
                        if (coeff == 0) continue;
                        for (int j = 0; j < d.cols(); ++j)
                            d(i, j) += coeff * w[static_cast<std::size_t>(j)];
                    }
            }
        }
        c.deltas.push_back(std::move(d));
    }
    c.validate();
    return c;
}

} // namespace cayley::cellcoh
