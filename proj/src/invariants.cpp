#include "phinmod/invariants.hpp"

namespace phinmod {

Rat hodge_invariant(const Subspace& u, const Filtration& fil, HodgeType h) {
    int d1 = u.intersect(fil.L1).dim();
    int d2 = u.intersect(fil.L2).dim();
    Rat out = Rat(h.s) * d1 + Rat(h.r) * (d2 - d1);
    out.canonicalize();
    return out;
}

Valuation newton_invariant(const Subspace& u, const Matrix& phi) {
    if (u.dim() == 0) return Valuation(0);
    return restrict_operator(phi, u).determinant().valuation();
}

Subspace SubobjectFamily::random_member(Rng& rng) const {
    if (isolated()) return fixed;
    const FieldSpec& spec = ambient.spec();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Vec> vs = fixed.basis();
        for (int extra = 0; extra < dim - fixed.dim(); ++extra) {
            Vec v(ambient.ambient_dim(), FieldElement::zero(spec));
            for (const auto& b : ambient.basis())
                v = vec_add(v, vec_scale(FieldElement::from_rational(spec, rng.small_rational()), b));
            vs.push_back(std::move(v));
        }
        Subspace u = Subspace::span(ambient.ambient_dim(), spec, vs);
        if (u.dim() == dim) return u;
    }
    throw InternalError("failed to sample a family member of the right dimension");
}

namespace {

Subspace coord_space(const FieldSpec& spec, std::initializer_list<int> axes) {
    std::vector<Vec> vs;
    for (int a : axes) {
        Vec v(3, FieldElement::zero(spec));
        v[a] = FieldElement::one(spec);
        vs.push_back(std::move(v));
    }
    return Subspace::span(3, spec, vs);
}

SubobjectFamily make_family(const Subspace& V, const Subspace& W, int k, const Matrix& phi,
                            const Matrix& N) {
    SubobjectFamily f;
    f.fixed = V;
    f.ambient = W;
    f.dim = k;
    // Newton invariant from one member; constancy and invariance spot-checked below.
    Rng rng(0x5eedf00dULL + (std::uint64_t)k * 131 + (std::uint64_t)V.dim() * 17 +
            (std::uint64_t)W.dim());
    Subspace first = f.random_member(rng);
    f.newton = newton_invariant(first, phi);
    for (int check = 0; check < 2; ++check) {
        Subspace u = f.random_member(rng);
        Matrix phi_res = restrict_operator(phi, u);  // throws when not invariant
        restrict_operator(N, u);
        if (phi_res.determinant().valuation() != f.newton)
            throw InternalError("Newton invariant is not constant on a subobject family");
    }
    return f;
}

}  // namespace

std::vector<SubobjectFamily> invariant_families(const Matrix& phi, const Matrix& N,
                                                StandardShape shape) {
    const FieldSpec& spec = phi.spec();
    auto C = [&](std::initializer_list<int> axes) { return coord_space(spec, axes); };
    Subspace Z = Subspace::zero(3, spec);
    Subspace D = Subspace::full(3, spec);
    auto iso = [&](const Subspace& u) { return make_family(u, u, u.dim(), phi, N); };
    auto fam = [&](const Subspace& V, const Subspace& W, int k) {
        return make_family(V, W, k, phi, N);
    };

    switch (shape) {
        case StandardShape::C1:
            return {fam(Z, D, 1), fam(Z, D, 2)};
        case StandardShape::C2:
            // lines in E(e2,e3); planes containing e2
            return {fam(Z, C({1, 2}), 1), fam(C({1}), D, 2)};
        case StandardShape::C3:
            return {iso(C({2})), iso(C({1, 2}))};
        case StandardShape::C4:
            // lines in E(e1,e2); E e3; E(e1,e2); planes containing e3
            return {fam(Z, C({0, 1}), 1), iso(C({2})), iso(C({0, 1})), fam(C({2}), D, 2)};
        case StandardShape::C5:
            return {iso(C({1})), iso(C({2})), iso(C({0, 1})), iso(C({1, 2}))};
        case StandardShape::C6:
            return {iso(C({0})),    iso(C({1})),    iso(C({2})),
                    iso(C({0, 1})), iso(C({1, 2})), iso(C({0, 2}))};
        case StandardShape::R1S1:
            return {fam(Z, C({1, 2}), 1), iso(C({1, 2})), iso(C({0, 2}))};
        case StandardShape::R1S2:
            return {iso(C({2})), iso(C({0, 2})), iso(C({1, 2}))};
        case StandardShape::R1S3:
            return {iso(C({1})), iso(C({2})), fam(C({2}), D, 2)};
        case StandardShape::R1S4:
            return {iso(C({1})), iso(C({2})), iso(C({1, 2}))};
        case StandardShape::R1S5:
            return {iso(C({1})), iso(C({2})), iso(C({1, 2})), iso(C({0, 2}))};
        case StandardShape::R2:
            return {iso(C({2})), iso(C({1, 2}))};
    }
    throw InternalError("unknown shape");
}

namespace {

int max_intersection_dim(const SubobjectFamily& f, const Subspace& L) {
    int from_W = f.ambient.intersect(L).dim();
    int from_V = f.fixed.intersect(L).dim() + (f.dim - f.fixed.dim());
    return std::min(from_W, from_V);
}

}  // namespace

Rat family_max_hodge(const SubobjectFamily& f, const Filtration& fil, HodgeType h) {
    int d1 = max_intersection_dim(f, fil.L1);
    int d2 = std::min(max_intersection_dim(f, fil.L2), f.dim);
    d2 = std::max(d2, d1);
    Rat out = Rat(h.s) * d1 + Rat(h.r) * (d2 - d1);
    out.canonicalize();
    return out;
}

Subspace family_max_member(const SubobjectFamily& f, const Filtration& fil, HodgeType h) {
    (void)h;
    if (f.isolated()) return f.fixed;
    const FieldSpec& spec = f.ambient.spec();
    // Greedy: extend V by vectors of W ∩ L1, then W ∩ L2, then W.
    Subspace u = f.fixed;
    auto grow_from = [&](const Subspace& pool) {
        for (const auto& b : pool.basis()) {
            if (u.dim() >= f.dim) return;
            if (u.contains(b)) continue;
            std::vector<Vec> vs = u.basis();
            vs.push_back(b);
            u = Subspace::span(3, spec, vs);
        }
    };
    grow_from(f.ambient.intersect(fil.L1));
    grow_from(f.ambient.intersect(fil.L2));
    grow_from(f.ambient);
    if (u.dim() != f.dim) throw InternalError("greedy member construction failed");
    return u;
}

Admissibility is_admissible(const PhiNModule& m) {
    Admissibility out;
    out.norm = normalize(m);
    const auto& norm = out.norm;

    Rat tH_D = Rat(m.hodge.r) + Rat(m.hodge.s);
    Valuation tN_D = m.phi.determinant().valuation();
    if (Valuation(tH_D) != tN_D) {
        AdmissibilityWitness w;
        w.det_mismatch = true;
        w.t_H_D = tH_D;
        w.t_N_D = tN_D;
        out.witness = std::move(w);
        return out;
    }

    Matrix back = norm.transition.inverse();
    out.families = invariant_families(norm.phi_std, norm.N_std, norm.shape);
    for (const auto& f : out.families) {
        Rat mh = family_max_hodge(f, norm.fil_std, m.hodge);
        if (Valuation(mh) > f.newton) {
            AdmissibilityWitness w;
            w.t_H_D = tH_D;
            w.t_N_D = tN_D;
            w.family = f;
            w.member_std = family_max_member(f, norm.fil_std, m.hodge);
            w.member_input = w.member_std.image(back);
            w.member_hodge = mh;
            out.witness = std::move(w);
            return out;
        }
    }
    out.admissible = true;
    return out;
}

}  // namespace phinmod
