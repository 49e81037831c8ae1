#include "cayley/kform.hpp"

#include <algorithm>
#include <sstream>

#include "cayley/linalg.hpp"

namespace cayley {

namespace {

void check_index(const std::vector<int>& idx, int dim) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 1 || idx[k] > dim)
            throw DimensionMismatch("multi-index entry " + std::to_string(idx[k]) +
                                    " outside [1, " + std::to_string(dim) + "]");
        if (k > 0 && idx[k - 1] >= idx[k])
            throw DimensionMismatch("multi-index is not strictly increasing");
    }
}

// Number of pairs (a, b) with a in lhs, b in rhs, a > b; the parity of the
// shuffle that sorts the concatenation lhs ++ rhs.
int crossing_count(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    int count = 0;
    for (int a : lhs)
        for (int b : rhs)
            if (a > b) ++count;
    return count;
}

} // namespace

MultiIndex::MultiIndex(std::initializer_list<int> idx, int dim) : idx_(idx) {
    check_index(idx_, dim);
}

MultiIndex::MultiIndex(std::vector<int> idx, int dim) : idx_(std::move(idx)) {
    check_index(idx_, dim);
}

bool MultiIndex::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

MultiIndex MultiIndex::complement(int dim) const {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(dim) - idx_.size());
    for (int i = 1; i <= dim; ++i)
        if (!contains(i)) c.push_back(i);
    return MultiIndex(std::move(c), dim);
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << "dx_{";
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (k) os << ",";
        os << idx_[k];
    }
    os << "}";
    return os.str();
}

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || degree < 0 || degree > dim)
        throw DimensionMismatch("no " + std::to_string(degree) + "-forms on dimension " +
                                std::to_string(dim));
}

KForm KForm::basis(int dim, const MultiIndex& idx) {
    KForm f(dim, idx.degree());
    f.add_term(idx, CycNum(1));
    return f;
}

KForm KForm::basis(int dim, std::initializer_list<int> idx) {
    return basis(dim, MultiIndex(idx, dim));
}

CycNum KForm::coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? CycNum(0) : it->second;
}

void KForm::add_term(const MultiIndex& idx, const CycNum& c) {
    if (idx.degree() != degree_)
        throw DimensionMismatch("term degree " + std::to_string(idx.degree()) +
                                " does not match form degree " + std::to_string(degree_));
    check_index(idx.indices(), dim_);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KForm KForm::operator-() const {
    KForm r(dim_, degree_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
    return r;
}

KForm& KForm::operator+=(const KForm& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw DimensionMismatch("adding forms of different shape");
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw DimensionMismatch("subtracting forms of different shape");
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
}

KForm operator*(const CycNum& s, const KForm& f) {
    KForm r(f.dim_, f.degree_);
    if (s.is_zero()) return r;
    for (const auto& [idx, c] : f.terms_) r.terms_.emplace(idx, s * c);
    return r;
}

KForm KForm::conj() const {
    KForm r(dim_, degree_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, c.conj());
    return r;
}

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << idx.str();
        first = false;
    }
    return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms on different spaces");
    int deg = a.degree() + b.degree();
    if (deg > a.dim()) return KForm(a.dim(), a.dim()); // identically zero
    KForm r(a.dim(), deg);
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            // Disjointness check and merge in one pass.
            const std::vector<int>& la = ia.indices();
            const std::vector<int>& lb = ib.indices();
            bool disjoint = true;
            for (int x : lb)
                if (ia.contains(x)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            std::vector<int> merged;
            merged.reserve(la.size() + lb.size());
            std::merge(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(merged));
            int sign = crossing_count(la, lb) % 2 ? -1 : 1;
            CycNum c = ca * cb;
            r.add_term(MultiIndex(std::move(merged), a.dim()), sign < 0 ? -c : c);
        }
    }
    return r;
}

KForm hodge_star(const KForm& a) {
    int n = a.dim();
    KForm r(n, n - a.degree());
    for (const auto& [idx, c] : a.terms()) {
        MultiIndex comp = idx.complement(n);
        // Sign fixed by dx_I ^ star(dx_I) = dx_1 ^ ... ^ dx_n.
        int sign = crossing_count(idx.indices(), comp.indices()) % 2 ? -1 : 1;
        r.add_term(comp, sign < 0 ? -c : c);
    }
    return r;
}

KForm volume_form(int dim) {
    std::vector<int> all(static_cast<std::size_t>(dim));
    for (int i = 1; i <= dim; ++i) all[static_cast<std::size_t>(i - 1)] = i;
    return KForm::basis(dim, MultiIndex(std::move(all), dim));
}

KForm algebra_action(const CycMatrix& r, const KForm& f) {
    int n = f.dim();
    if (r.rows() != n || r.cols() != n)
        throw DimensionMismatch("algebra action: matrix does not match form dimension");
    KForm out(n, f.degree());
    for (const auto& [idx, c] : f.terms()) {
        const std::vector<int>& ix = idx.indices();
        for (std::size_t slot = 0; slot < ix.size(); ++slot) {
            int j = ix[slot];
            // Replace e_j in slot `slot` by r e_j = sum_i r(i,j) e_i.
            for (int i = 1; i <= n; ++i) {
                const CycNum& rij = r(i - 1, j - 1);
                if (rij.is_zero()) continue;
                if (i != j && idx.contains(i)) continue; // repeated axis dies
                std::vector<int> rep = ix;
                rep[slot] = i;
                // Bubble the replaced entry into place, tracking the sign.
                int sign = 1;
                std::size_t p = slot;
                while (p > 0 && rep[p - 1] > rep[p]) {
                    std::swap(rep[p - 1], rep[p]);
                    sign = -sign;
                    --p;
                }
                while (p + 1 < rep.size() && rep[p] > rep[p + 1]) {
                    std::swap(rep[p], rep[p + 1]);
                    sign = -sign;
                    ++p;
                }
                CycNum term = rij * c;
                out.add_term(MultiIndex(rep, n), sign < 0 ? -term : term);
            }
        }
    }
    return out;
}

namespace {

// Determinant by cofactor expansion along the first column, skipping zero
// entries.  The k x k minors taken by group_action are tiny (k <= 4 in
// practice) and usually sparse, where this beats elimination: no field
// inversions, and a zero column short-circuits immediately.
CycNum cofactor_det(const CycMatrix& m, std::vector<int>& live_rows, int col) {
    if (static_cast<int>(live_rows.size()) == 1) return m(live_rows[0], col);
    CycNum total(0);
    for (std::size_t r = 0; r < live_rows.size(); ++r) {
        const CycNum& pivot = m(live_rows[r], col);
        if (pivot.is_zero()) continue;
        int removed = live_rows[r];
        live_rows.erase(live_rows.begin() + static_cast<std::ptrdiff_t>(r));
        CycNum sub = cofactor_det(m, live_rows, col + 1);
        live_rows.insert(live_rows.begin() + static_cast<std::ptrdiff_t>(r), removed);
        if (!sub.is_zero()) {
            CycNum term = pivot * sub;
            total += (r % 2) ? -term : term;
        }
    }
    return total;
}

CycNum small_det(const CycMatrix& m) {
    std::vector<int> live(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) live[static_cast<std::size_t>(i)] = i;
    return cofactor_det(m, live, 0);
}

// Lexicographic successor of a k-combination of {1..n}; false at the end.
bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

KForm group_action(const CycMatrix& a, const KForm& f) {
    int n = f.dim();
    if (a.rows() != n || a.cols() != n)
        throw DimensionMismatch("group action: matrix does not match form dimension");
    if (det(a).is_zero()) throw DimensionMismatch("group action requires an invertible matrix");
    int k = f.degree();
    KForm out(n, k);
    if (f.is_zero()) return out;
    if (k == 0) return f; // scalars are untouched

    // Coefficient of e_T in (a e_{i1}) ^ ... ^ (a e_{ik}) is the k x k minor
    // det a[T, I]; walk all target combinations once per source term.
    std::vector<int> target(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] = i + 1;
    do {
        CycNum total(0);
        for (const auto& [idx, c] : f.terms()) {
            const std::vector<int>& src = idx.indices();
            CycMatrix minor(k, k);
            bool degenerate = false;
            for (int j = 0; j < k && !degenerate; ++j) {
                bool col_nonzero = false;
                for (int i = 0; i < k; ++i) {
                    minor(i, j) = a(target[static_cast<std::size_t>(i)] - 1,
                                    src[static_cast<std::size_t>(j)] - 1);
                    if (!minor(i, j).is_zero()) col_nonzero = true;
                }
                degenerate = !col_nonzero;
            }
            if (degenerate) continue;
            CycNum d = small_det(minor);
            if (!d.is_zero()) total += d * c;
        }
        if (!total.is_zero()) out.add_term(MultiIndex(target, n), total);
    } while (next_combination(target, n));
    return out;
}

CycNum pairing(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree())
        throw DimensionMismatch("pairing of forms of different shape");
    CycNum s(0);
    // Walk the sparser form, look up in the other.
    const KForm& small = a.term_count() <= b.term_count() ? a : b;
    const KForm& large = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [idx, c] : small.terms()) {
        CycNum o = large.coefficient(idx);
        if (!o.is_zero()) s += c * o;
    }
    return s;
}

} // namespace cayley
