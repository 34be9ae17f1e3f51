// Subspaces of E^n with canonical echelon bases and lattice operations.
#pragma once

#include "phinmod/matrix.hpp"

namespace phinmod {

/**
 * A subspace of E^n carrying its canonical reduced-echelon basis: basis vectors
 * have pivots at strictly increasing coordinates, pivot entries 1, and zeros at
 * every other basis vector's pivot coordinate.  Equal subspaces therefore have
 * identical bases, so == and containment are structural.
 */
class Subspace {
public:
    Subspace() = default;
    /// Span of arbitrary vectors (empty list allowed: the zero subspace).
    static Subspace span(int ambient_dim, const FieldSpec& spec, const std::vector<Vec>& vectors);
    static Subspace full(int ambient_dim, const FieldSpec& spec);
    static Subspace zero(int ambient_dim, const FieldSpec& spec);

    int ambient_dim() const { return ambient_; }
    int dim() const { return (int)basis_.size(); }
    const FieldSpec& spec() const { return spec_; }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    /// Image under an invertible (or any) matrix.
    Subspace image(const Matrix& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    std::string str() const;

private:
    int ambient_ = 0;
    FieldSpec spec_;
    std::vector<Vec> basis_;
};

/// echelon_basis: canonicalize a list of vectors into a Subspace.
inline Subspace echelon_basis(int ambient_dim, const FieldSpec& spec, const std::vector<Vec>& vs) {
    return Subspace::span(ambient_dim, spec, vs);
}

/**
 * The matrix of m restricted to the m-invariant subspace u, written in u's
 * canonical basis.  Throws LinalgError when u is not invariant under m.
 */
Matrix restrict_operator(const Matrix& m, const Subspace& u);

}  // namespace phinmod
