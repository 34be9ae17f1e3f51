#include "phinmod/normalize.hpp"

#include <algorithm>

namespace phinmod {

namespace {

Matrix basis_to_transition(const std::vector<Vec>& basis, const FieldSpec& spec) {
    // Columns f1,f2,f3; the transition carrying old coordinates to the new basis
    // coordinates is T^{-1}.
    Matrix T(3, 3, spec);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) T.at(i, j) = basis[j][i];
    if (T.determinant().is_zero()) throw NormalizeError("chosen basis is degenerate");
    return T.inverse();
}

Vec unit_vec(int i, const FieldSpec& spec) {
    Vec v(3, FieldElement::zero(spec));
    v[i] = FieldElement::one(spec);
    return v;
}

// First vector of the ambient space outside the given subspace.
Vec vector_outside(const Subspace& s) {
    const FieldSpec& spec = s.spec();
    for (int i = 0; i < 3; ++i) {
        Vec v = unit_vec(i, spec);
        if (!s.contains(v)) return v;
    }
    throw InternalError("no vector outside a proper subspace");
}

// First basis-like vector of `inside` that is not in `avoid`.
Vec vector_in_outside(const Subspace& inside, const Subspace& avoid) {
    for (const auto& b : inside.basis())
        if (!avoid.contains(b)) return b;
    // try sums of basis vectors
    for (size_t i = 0; i < inside.basis().size(); ++i)
        for (size_t j = i + 1; j < inside.basis().size(); ++j) {
            Vec v = vec_add(inside.basis()[i], inside.basis()[j]);
            if (!avoid.contains(v)) return v;
        }
    throw InternalError("subspace unexpectedly contained in another");
}

Subspace kernel_of(const Matrix& m) {
    return Subspace::span(m.rows(), m.spec(), nullspace(m));
}

bool is_triangular(const Matrix& m) {
    bool lower = true, upper = true;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i < j && !m.at(i, j).is_zero()) lower = false;
            if (i > j && !m.at(i, j).is_zero()) upper = false;
        }
    return lower || upper;
}

}  // namespace

std::pair<Matrix, Matrix> align_monodromy(const Matrix& N) {
    const FieldSpec& spec = N.spec();
    if ((N * N * N).is_zero() == false) throw NormalizeError("N is not nilpotent");
    int rank = N.rank();
    Matrix N_std = standard_N(rank, spec);
    if (rank == 0) return {N_std, Matrix::identity(3, spec)};
    if (rank == 1) {
        // basis f1, f2, f3 with N f1 = f3, N f2 = 0, N f3 = 0.
        Subspace ker = kernel_of(N);
        Vec f1 = vector_outside(ker);
        Vec f3 = N.apply(f1);
        Subspace f3_span = Subspace::span(3, spec, {f3});
        Vec f2 = vector_in_outside(ker, f3_span);
        return {N_std, basis_to_transition({f1, f2, f3}, spec)};
    }
    if (rank == 2) {
        // chain f1 -> f2 -> f3.
        Matrix N2 = N * N;
        Subspace kerN2 = kernel_of(N2);
        Vec f1 = vector_outside(kerN2);
        Vec f2 = N.apply(f1);
        Vec f3 = N.apply(f2);
        return {N_std, basis_to_transition({f1, f2, f3}, spec)};
    }
    throw NormalizeError("nilpotent 3x3 matrix with impossible rank");
}

namespace {

// --- crystalline (rank 0) -------------------------------------------------

std::vector<FieldElement> eigenvalues_of(const Matrix& phi,
                                         const std::optional<JordanHint>& hint) {
    const FieldSpec& spec = phi.spec();
    if (hint) {
        if (hint->eigenvalues.size() != 3)
            throw NormalizeError("jordan hint must carry three eigenvalues");
        Matrix prod = Matrix::identity(3, spec);
        for (const auto& l : hint->eigenvalues)
            prod = prod * (phi - Matrix::identity(3, spec).scaled(l));
        if (!prod.is_zero())
            throw NormalizeError("jordan hint eigenvalues do not annihilate phi");
        return hint->eigenvalues;
    }
    if (is_triangular(phi)) return {phi.at(0, 0), phi.at(1, 1), phi.at(2, 2)};
    throw NormalizeError(
        "eigenvalues not available: phi is not triangular and no jordan hint was given");
}

// Distinct eigenvalues with multiplicities, multiplicity-descending.
std::vector<std::pair<FieldElement, int>> tally(const std::vector<FieldElement>& eigen) {
    std::vector<std::pair<FieldElement, int>> out;
    for (const auto& l : eigen) {
        bool found = false;
        for (auto& [v, c] : out)
            if (v == l) {
                ++c;
                found = true;
            }
        if (!found) out.emplace_back(l, 1);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

PhiNormalization normalize_crystalline(const Matrix& phi,
                                       const std::optional<JordanHint>& hint) {
    const FieldSpec& spec = phi.spec();
    Matrix I = Matrix::identity(3, spec);
    auto classes = tally(eigenvalues_of(phi, hint));

    PhiNormalization out;
    if (classes.size() == 1) {
        const FieldElement& l = classes[0].first;
        Matrix S = phi - I.scaled(l);
        Subspace ker = kernel_of(S);
        out.eigen = {l};
        if (ker.dim() == 3) {
            out.shape = StandardShape::C1;
            out.transition = I;
        } else if (ker.dim() == 2) {
            out.shape = StandardShape::C2;
            Vec f1 = vector_outside(ker);
            Vec f2 = S.apply(f1);
            Vec f3 = vector_in_outside(ker, Subspace::span(3, spec, {f2}));
            out.transition = basis_to_transition({f1, f2, f3}, spec);
        } else if (ker.dim() == 1) {
            out.shape = StandardShape::C3;
            Subspace ker2 = kernel_of(S * S);
            Vec f1 = vector_outside(ker2);
            Vec f2 = S.apply(f1);
            Vec f3 = S.apply(f2);
            out.transition = basis_to_transition({f1, f2, f3}, spec);
        } else {
            throw NormalizeError("phi - lambda is invertible for the claimed eigenvalue");
        }
    } else if (classes.size() == 2) {
        const FieldElement& l = classes[0].first;   // multiplicity 2
        const FieldElement& l3 = classes[1].first;  // multiplicity 1
        if (classes[0].second != 2)
            throw NormalizeError("inconsistent eigenvalue multiplicities");
        Matrix S = phi - I.scaled(l);
        Subspace ker = kernel_of(S);
        Subspace ker3 = kernel_of(phi - I.scaled(l3));
        if (ker3.dim() != 1) throw NormalizeError("simple eigenvalue with wrong eigenspace");
        Vec f3 = ker3.basis()[0];
        out.eigen = {l, l3};
        if (ker.dim() == 2) {
            out.shape = StandardShape::C4;
            out.transition =
                basis_to_transition({ker.basis()[0], ker.basis()[1], f3}, spec);
        } else if (ker.dim() == 1) {
            out.shape = StandardShape::C5;
            Subspace ker2 = kernel_of(S * S);
            Vec f1 = vector_in_outside(ker2, ker);
            Vec f2 = S.apply(f1);
            out.transition = basis_to_transition({f1, f2, f3}, spec);
        } else {
            throw NormalizeError("double eigenvalue with wrong eigenspace dimension");
        }
    } else {
        out.shape = StandardShape::C6;
        std::vector<FieldElement> ls = {classes[0].first, classes[1].first, classes[2].first};
        // Sort by valuation descending, ties by encoding order.
        std::sort(ls.begin(), ls.end(), [](const FieldElement& a, const FieldElement& b) {
            Valuation va = a.valuation(), vb = b.valuation();
            if (va != vb) return vb < va;
            return FieldElement::compare_encoding(a, b) < 0;
        });
        std::vector<Vec> basis;
        for (const auto& l : ls) {
            Subspace ker = kernel_of(phi - I.scaled(l));
            if (ker.dim() != 1) throw NormalizeError("distinct eigenvalue with wrong eigenspace");
            basis.push_back(ker.basis()[0]);
        }
        out.eigen = ls;
        out.transition = basis_to_transition(basis, spec);
    }
    out.phi_std = standard_phi(out.shape, out.eigen, spec);
    if (out.transition * phi * out.transition.inverse() != out.phi_std)
        throw InternalError("crystalline normalization failed to reach the standard shape");
    return out;
}

// --- rank 1 and rank 2 ----------------------------------------------------

// Expect phi e1 = p x e1 + u e2 + v e3, phi e2 = y e2 + w e3, phi e3 = x e3.
struct Rank1Data {
    FieldElement x, y, u, v, w;
};

Rank1Data read_rank1(const Matrix& phi, const FieldSpec& spec) {
    FieldElement p = FieldElement::from_rational(spec, spec.prime);
    Rank1Data d{phi.at(2, 2), phi.at(1, 1), phi.at(1, 0), phi.at(2, 0), phi.at(2, 1)};
    bool ok = phi.at(0, 1).is_zero() && phi.at(0, 2).is_zero() && phi.at(1, 2).is_zero() &&
              phi.at(0, 0) == p * d.x;
    if (!ok) throw NormalizeError("phi incompatible with the standard rank-1 monodromy");
    return d;
}

Matrix from_entries(const FieldSpec& spec, const std::vector<std::vector<FieldElement>>& e) {
    Matrix m(3, 3, spec);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = e[i][j];
    return m;
}

PhiNormalization normalize_rank1(const Matrix& phi) {
    const FieldSpec& spec = phi.spec();
    FieldElement p = FieldElement::from_rational(spec, spec.prime);
    FieldElement one = FieldElement::one(spec);
    FieldElement zero = FieldElement::zero(spec);
    Rank1Data d = read_rank1(phi, spec);
    // 1 - p is invertible (p != 1), x != 0 by invertibility of phi.
    FieldElement c = (one - p).inverse() * d.x.inverse();  // 1/(x(1-p))

    PhiNormalization out;
    if (d.y == d.x && d.w.is_zero()) {
        out.shape = StandardShape::R1S1;
        out.eigen = {d.x};
        out.transition = from_entries(
            spec, {{one, zero, zero}, {d.u * c, one, zero}, {d.v * c, zero, one}});
    } else if (d.y == d.x) {
        out.shape = StandardShape::R1S2;
        out.eigen = {d.x};
        FieldElement b31 = (d.v * d.x * (one - p) - d.u * d.w) * c * c;
        out.transition = from_entries(
            spec, {{one, zero, zero}, {d.u * d.w * c, d.w, zero}, {b31, zero, one}});
    } else if (d.y == p * d.x && d.u.is_zero()) {
        out.shape = StandardShape::R1S3;
        out.eigen = {d.x};
        out.transition = from_entries(
            spec, {{one, zero, zero}, {zero, one, zero}, {d.v * c, d.w * c, one}});
    } else if (d.y == p * d.x) {
        out.shape = StandardShape::R1S4;
        out.eigen = {d.x};
        FieldElement b31 = (d.u * d.u * d.w + d.u * d.v * d.x * (one - p)) * c * c;
        out.transition = from_entries(
            spec, {{d.u, zero, zero}, {zero, one, zero}, {b31, d.u * d.w * c, d.u}});
    } else {
        out.shape = StandardShape::R1S5;
        out.eigen = {d.x, d.y};
        FieldElement xmy = (d.x - d.y).inverse();
        FieldElement b21 = d.u * (d.y - p * d.x).inverse();
        FieldElement b31 = (d.v * d.x - d.v * d.y + d.u * d.w) * d.x.inverse() * xmy *
                           (one - p).inverse();
        out.transition = from_entries(
            spec, {{one, zero, zero}, {b21, one, zero}, {b31, d.w * xmy, one}});
    }
    out.phi_std = standard_phi(out.shape, out.eigen, spec);
    Matrix N_std = standard_N(1, spec);
    if (out.transition * phi * out.transition.inverse() != out.phi_std ||
        out.transition * N_std * out.transition.inverse() != N_std)
        throw InternalError("rank-1 normalization failed to reach the standard shape");
    return out;
}

PhiNormalization normalize_rank2(const Matrix& phi) {
    const FieldSpec& spec = phi.spec();
    FieldElement p = FieldElement::from_rational(spec, spec.prime);
    FieldElement one = FieldElement::one(spec);
    FieldElement zero = FieldElement::zero(spec);
    // Expect phi e1 = p^2 x e1 + p y e2 + z e3, phi e2 = p x e2 + y e3, phi e3 = x e3.
    FieldElement x = phi.at(2, 2), y = phi.at(2, 1), z = phi.at(2, 0);
    bool ok = phi.at(0, 1).is_zero() && phi.at(0, 2).is_zero() && phi.at(1, 2).is_zero() &&
              phi.at(0, 0) == p * p * x && phi.at(1, 1) == p * x && phi.at(1, 0) == p * y;
    if (!ok) throw NormalizeError("phi incompatible with the standard rank-2 monodromy");
    FieldElement c = (one - p).inverse() * x.inverse();  // 1/(x(1-p))
    FieldElement b31 =
        (p * y * y + z * x * (one - p)) * c * c * (one + p).inverse();
    PhiNormalization out;
    out.shape = StandardShape::R2;
    out.eigen = {x};
    out.transition =
        from_entries(spec, {{one, zero, zero}, {y * c, one, zero}, {b31, y * c, one}});
    out.phi_std = standard_phi(out.shape, out.eigen, spec);
    Matrix N_std = standard_N(2, spec);
    if (out.transition * phi * out.transition.inverse() != out.phi_std ||
        out.transition * N_std * out.transition.inverse() != N_std)
        throw InternalError("rank-2 normalization failed to reach the standard shape");
    return out;
}

}  // namespace

PhiNormalization normalize_phi(const Matrix& phi, int n_rank,
                               const std::optional<JordanHint>& hint) {
    switch (n_rank) {
        case 0: return normalize_crystalline(phi, hint);
        case 1: return normalize_rank1(phi);
        case 2: return normalize_rank2(phi);
        default: throw NormalizeError("monodromy rank must be 0, 1, or 2");
    }
}

Normalization normalize(const PhiNModule& m) {
    require_valid(m);
    auto [N_std, P_N] = align_monodromy(m.N);
    Matrix phi_aligned = P_N * m.phi * P_N.inverse();
    int rank = m.N.rank();

    std::optional<JordanHint> hint = m.jordan;
    PhiNormalization pn = normalize_phi(phi_aligned, rank, hint);

    Normalization out;
    out.shape = pn.shape;
    out.eigen = pn.eigen;
    out.phi_std = pn.phi_std;
    out.N_std = N_std;
    out.transition = pn.transition * P_N;
    out.fil_std.L1 = m.fil.L1.image(out.transition);
    out.fil_std.L2 = m.fil.L2.image(out.transition);
    return out;
}

}  // namespace phinmod
