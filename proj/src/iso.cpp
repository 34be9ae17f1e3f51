#include "phinmod/iso.hpp"

namespace phinmod {

namespace {

std::vector<Vec> annihilator_of(const Subspace& s) {
    Matrix rows(std::max(s.dim(), 1), s.ambient_dim(), s.spec());
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.ambient_dim(); ++j) rows.at(i, j) = s.basis()[i][j];
    return nullspace(rows);
}

}  // namespace

IsoResult are_isomorphic(const PhiNModule& a, const PhiNModule& b) {
    require_valid(a);
    require_valid(b);
    if (!(a.field == b.field)) throw ValidationError("mismatched field specs");
    if (!(a.hodge == b.hodge)) return {};  // filtration types differ, no isomorphism

    const FieldSpec& spec = a.field;
    int n = 3;
    // Linear system on the entries of P: intertwining plus filtration mapping.
    std::vector<std::vector<FieldElement>> rows;
    auto add_intertwine = [&](const Matrix& A, const Matrix& B) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<FieldElement> row(n * n, FieldElement::zero(spec));
                for (int k = 0; k < n; ++k) {
                    row[i * n + k] += A.at(k, j);
                    row[k * n + j] -= B.at(i, k);
                }
                rows.push_back(std::move(row));
            }
    };
    add_intertwine(a.phi, b.phi);
    add_intertwine(a.N, b.N);
    auto add_carry = [&](const Subspace& from, const Subspace& to) {
        for (const auto& h : annihilator_of(to))
            for (const auto& v : from.basis()) {
                std::vector<FieldElement> row(n * n, FieldElement::zero(spec));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) row[i * n + j] += h[i] * v[j];
                rows.push_back(std::move(row));
            }
    };
    add_carry(a.fil.L1, b.fil.L1);
    add_carry(a.fil.L2, b.fil.L2);

    Matrix sys((int)rows.size(), n * n, spec);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < n * n; ++j) sys.at(i, j) = rows[i][j];
    std::vector<Vec> sol = nullspace(sys);
    if (sol.empty()) return {};

    std::vector<Matrix> basis;
    for (const auto& v : sol) {
        Matrix P(n, n, spec);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P.at(i, j) = v[i * n + j];
        basis.push_back(std::move(P));
    }

    // The identity is the canonical witness whenever it qualifies.
    Matrix I = Matrix::identity(n, spec);
    if (a.phi == b.phi && a.N == b.N && a.fil.L1 == b.fil.L1 && a.fil.L2 == b.fil.L2)
        return {true, I};

    // det(sum t_i P_i) has degree <= 3 in each t_i; sample t in {0,1,2,3}^k.
    int k = (int)basis.size();
    std::vector<int> idx(k, 0);
    auto advance = [&]() {
        for (int i = k - 1; i >= 0; --i) {
            if (++idx[i] < 4) return true;
            idx[i] = 0;
        }
        return false;
    };
    while (advance()) {
        Matrix P = Matrix::zero(n, n, spec);
        for (int i = 0; i < k; ++i) {
            if (idx[i] == 0) continue;
            P = P + basis[i].scaled(FieldElement::from_rational(spec, idx[i]));
        }
        if (P.determinant().is_zero()) continue;
        // Verify the defining equations exactly before emitting the witness.
        bool ok = P * a.phi == b.phi * P && P * a.N == b.N * P &&
                  a.fil.L1.image(P) == b.fil.L1 && a.fil.L2.image(P) == b.fil.L2;
        if (!ok) throw InternalError("intertwiner solution violates its defining equations");
        return {true, P};
    }
    return {};
}

ShapeCheckResult commutant_shape_check(StandardShape shape) {
    // Sample eigenvalues only need the shape's genericity, not valuations.
    FieldSpec spec = make_field(2, 1);
    auto two = FieldElement::from_rational(spec, 2);
    auto three = FieldElement::from_rational(spec, 3);
    auto five = FieldElement::from_rational(spec, 5);
    std::vector<FieldElement> eigen;
    switch (shape_eigen_count(shape)) {
        case 1: eigen = {two}; break;
        case 2: eigen = {two, three}; break;
        default: eigen = {two, three, five};
    }
    Matrix phi = standard_phi(shape, eigen, spec);
    Matrix N = standard_N(shape_monodromy_rank(shape), spec);
    std::vector<Matrix> basis = intertwiner_space({{phi, phi}, {N, N}});

    ShapeCheckResult out;
    CommutantPattern pat = commutant_pattern(shape);
    out.dimension = (int)basis.size();
    if (out.dimension != pat.dimension()) {
        out.mismatch = "dimension " + std::to_string(out.dimension) + " != expected " +
                       std::to_string(pat.dimension());
        return out;
    }
    for (const auto& P : basis) {
        if (pat.matches(P)) continue;
        for (int i = 0; i < 9; ++i) {
            int r = i / 3, c = i % 3;
            if (pat.cls[i] < 0 && !P.at(r, c).is_zero()) {
                out.mismatch = "entry (" + std::to_string(r + 1) + "," +
                               std::to_string(c + 1) + ") should vanish";
                return out;
            }
            for (int j = i + 1; j < 9; ++j)
                if (pat.cls[i] >= 0 && pat.cls[i] == pat.cls[j] &&
                    P.at(r, c) != P.at(j / 3, j % 3)) {
                    out.mismatch = "entries (" + std::to_string(r + 1) + "," +
                                   std::to_string(c + 1) + ") and (" +
                                   std::to_string(j / 3 + 1) + "," +
                                   std::to_string(j % 3 + 1) + ") should be equal";
                    return out;
                }
        }
        out.mismatch = "basis element violates the lemma pattern";
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace phinmod
