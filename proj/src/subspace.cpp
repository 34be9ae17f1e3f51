#include "phinmod/subspace.hpp"

#include <sstream>

namespace phinmod {

Subspace Subspace::span(int ambient_dim, const FieldSpec& spec, const std::vector<Vec>& vectors) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.spec_ = spec;
    if (vectors.empty()) return s;
    Matrix m((int)vectors.size(), ambient_dim, spec);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if ((int)vectors[i].size() != ambient_dim)
            throw LinalgError("vector does not match ambient dimension");
        for (int j = 0; j < ambient_dim; ++j) m.at((int)i, j) = vectors[i][j];
    }
    auto pivots = rref(m);
    for (size_t k = 0; k < pivots.size(); ++k) s.basis_.push_back(m.row((int)k));
    return s;
}

Subspace Subspace::full(int ambient_dim, const FieldSpec& spec) {
    std::vector<Vec> vs;
    for (int i = 0; i < ambient_dim; ++i) {
        Vec v(ambient_dim, FieldElement::zero(spec));
        v[i] = FieldElement::one(spec);
        vs.push_back(std::move(v));
    }
    return span(ambient_dim, spec, vs);
}

Subspace Subspace::zero(int ambient_dim, const FieldSpec& spec) {
    return span(ambient_dim, spec, {});
}

bool Subspace::contains(const Vec& v) const {
    if ((int)v.size() != ambient_) throw LinalgError("ambient dimension mismatch");
    // Reduce v against the echelon basis.
    Vec rem = v;
    for (const auto& b : basis_) {
        int piv = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!b[j].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        if (!rem[piv].is_zero()) rem = vec_sub(rem, vec_scale(rem[piv], b));
    }
    return vec_is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw LinalgError("ambient dimension mismatch");
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw LinalgError("ambient dimension mismatch");
    std::vector<Vec> vs = basis_;
    vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, spec_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw LinalgError("ambient dimension mismatch");
    int k = dim(), m = other.dim();
    if (k == 0 || m == 0) return zero(ambient_, spec_);
    // x in both spans: sum_i c_i a_i = sum_j d_j b_j; nullspace of [A^T | -B^T].
    Matrix sys(ambient_, k + m, spec_);
    for (int i = 0; i < ambient_; ++i) {
        for (int j = 0; j < k; ++j) sys.at(i, j) = basis_[j][i];
        for (int j = 0; j < m; ++j) sys.at(i, k + j) = -other.basis_[j][i];
    }
    std::vector<Vec> vs;
    for (const auto& sol : nullspace(sys)) {
        Vec v(ambient_, FieldElement::zero(spec_));
        for (int j = 0; j < k; ++j)
            if (!sol[j].is_zero()) v = vec_add(v, vec_scale(sol[j], basis_[j]));
        vs.push_back(std::move(v));
    }
    return span(ambient_, spec_, vs);
}

Subspace Subspace::image(const Matrix& m) const {
    std::vector<Vec> vs;
    for (const auto& b : basis_) vs.push_back(m.apply(b));
    return span(m.rows(), spec_, vs);
}

bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return false;
    if (a.basis_.size() != b.basis_.size()) return false;
    for (size_t i = 0; i < a.basis_.size(); ++i)
        if (a.basis_[i] != b.basis_[i]) return false;
    return true;
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span{";
    for (size_t i = 0; i < basis_.size(); ++i) {
        os << (i ? "; " : "") << "(";
        for (int j = 0; j < ambient_; ++j) os << (j ? ", " : "") << basis_[i][j].str();
        os << ")";
    }
    os << "}";
    return os.str();
}

Matrix restrict_operator(const Matrix& m, const Subspace& u) {
    if (m.rows() != m.cols() || m.rows() != u.ambient_dim())
        throw LinalgError("restrict_operator wants a square matrix on u's ambient space");
    int k = u.dim();
    Matrix basis_cols(u.ambient_dim(), k, m.spec());
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < u.ambient_dim(); ++i) basis_cols.at(i, j) = u.basis()[j][i];
    Matrix out(k, k, m.spec());
    for (int j = 0; j < k; ++j) {
        Vec img = m.apply(u.basis()[j]);
        auto coords = solve(basis_cols, img);
        if (!coords || !u.contains(img))
            throw LinalgError("subspace is not invariant under the operator");
        for (int i = 0; i < k; ++i) out.at(i, j) = (*coords)[i];
    }
    return out;
}

}  // namespace phinmod
