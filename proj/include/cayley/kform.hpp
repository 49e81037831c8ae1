#pragma once

#include <initializer_list>
#include <map>
#include <vector>

#include "cayley/matrix.hpp"

namespace cayley {

// Strictly increasing list of axis indices in [1, dim]; the label dx_I of a
// basis k-form.  Indices are 1-based throughout, matching the usual
// coordinate notation dx_1, ..., dx_n.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> idx, int dim);
    MultiIndex(std::vector<int> idx, int dim);

    int degree() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& indices() const { return idx_; }
    bool contains(int i) const;

    // Complement within [1, dim], again strictly increasing.
    MultiIndex complement(int dim) const;

    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.idx_ < b.idx_; }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.idx_ == b.idx_; }

    std::string str() const; // "dx_{1,3,5}" style, for diagnostics

private:
    std::vector<int> idx_;
};

// Alternating k-form on C^dim with cyclotomic coefficients, stored sparsely
// on the basis {dx_I : I strictly increasing}.  Zero coefficients are pruned
// immediately, so equality of the term maps is equality of forms.
class KForm {
public:
    KForm() : dim_(0), degree_(0) {}
    KForm(int dim, int degree);

    // The basis form dx_I (coefficient 1).
    static KForm basis(int dim, const MultiIndex& idx);
    static KForm basis(int dim, std::initializer_list<int> idx);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of dx_I (zero when absent).
    CycNum coefficient(const MultiIndex& idx) const;

    // Adds c * dx_I.  The index must already be strictly increasing.
    void add_term(const MultiIndex& idx, const CycNum& c);

    const std::map<MultiIndex, CycNum>& terms() const { return terms_; }

    KForm operator-() const;
    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const CycNum& s, const KForm& f);
    friend bool operator==(const KForm& a, const KForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

    // Entrywise complex conjugation of coefficients.
    KForm conj() const;

    std::string str() const;

private:
    int dim_;
    int degree_;
    std::map<MultiIndex, CycNum> terms_;
};

// Exterior product.  Forms must live on the same C^dim; the result degree is
// the sum (the zero form when it exceeds dim).
KForm wedge(const KForm& a, const KForm& b);

// Hodge star for the standard orthonormal basis and orientation
// dx_1 ^ ... ^ dx_n: star(dx_I) = sign * dx_{I^c} with the sign fixed by
// dx_I ^ star(dx_I) = dx_1 ^ ... ^ dx_n.
KForm hodge_star(const KForm& a);

// The volume form dx_1 ^ ... ^ dx_n.
KForm volume_form(int dim);

// Action of a matrix as a derivation: r acts on each slot of dx_I through
// r e_j = sum_i r(i, j) e_i.  (The infinitesimal version of group_action.)
KForm algebra_action(const CycMatrix& r, const KForm& f);

// Action of an invertible matrix on all slots at once:
// dx_I -> (a e_{i1}) ^ ... ^ (a e_{ik}).  Throws on singular a.
KForm group_action(const CycMatrix& a, const KForm& f);

// Coefficientwise bilinear pairing <a, b> = sum_I a_I b_I (no conjugation).
CycNum pairing(const KForm& a, const KForm& b);

} // namespace cayley
