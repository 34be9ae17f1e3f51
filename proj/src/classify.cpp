#include "phinmod/classify.hpp"

#include <algorithm>

namespace phinmod {

namespace {

Vec realize_rat(const FieldSpec& spec, const std::array<Rat, 3>& a) {
    Vec v(3, FieldElement::zero(spec));
    for (int i = 0; i < 3; ++i) v[i] = FieldElement::from_rational(spec, a[i]);
    return v;
}

std::pair<Subspace, Subspace> pattern_flag(const CatalogEntry& e, const FieldSpec& spec,
                                           const std::vector<FieldElement>& fil) {
    Vec w1 = e.w1.realize(spec, fil);
    Subspace L1 = Subspace::span(3, spec, {w1});
    Subspace L2;
    if (e.l2_fixed) {
        L2 = Subspace::span(3, spec,
                            {realize_rat(spec, (*e.l2_fixed)[0]), realize_rat(spec, (*e.l2_fixed)[1])});
    } else {
        L2 = Subspace::span(3, spec, {w1, e.u2.realize(spec, fil)});
    }
    if (L1.dim() != 1 || L2.dim() != 2 || !L2.contains(L1))
        throw CatalogError("filtration parameters degenerate the pattern flag");
    return {L1, L2};
}

/// Annihilator covectors of a subspace (orthogonal complement w.r.t. the dot pairing).
std::vector<Vec> annihilator(const Subspace& s) {
    if (s.dim() == 0) {
        std::vector<Vec> out;
        for (int i = 0; i < s.ambient_dim(); ++i) {
            Vec h(s.ambient_dim(), FieldElement::zero(s.spec()));
            h[i] = FieldElement::one(s.spec());
            out.push_back(std::move(h));
        }
        return out;
    }
    Matrix rows((int)s.basis().size(), s.ambient_dim(), s.spec());
    for (int i = 0; i < (int)s.basis().size(); ++i)
        for (int j = 0; j < s.ambient_dim(); ++j) rows.at(i, j) = s.basis()[i][j];
    return nullspace(rows);
}

FieldElement dot(const Vec& a, const Vec& b) {
    FieldElement r = FieldElement::zero(a[0].spec());
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

/// Solve z = t*anchor + sum params[i]*dir_i; returns the slot parameters.
std::optional<std::vector<std::pair<int, FieldElement>>> read_pattern(
    const Vec& z, const PatternVec& pat, const FieldSpec& spec) {
    std::vector<Vec> cols;
    if (!pat.projective) cols.push_back(pat.anchor_vec(spec));
    for (const auto& [idx, dir] : pat.slots) cols.push_back(realize_rat(spec, dir));
    Matrix A(3, (int)cols.size(), spec);
    for (int j = 0; j < (int)cols.size(); ++j)
        for (int i = 0; i < 3; ++i) A.at(i, j) = cols[j][i];
    if (A.rank() != (int)cols.size()) throw InternalError("pattern directions are dependent");
    auto x = solve(A, z);
    if (!x) return std::nullopt;
    std::vector<std::pair<int, FieldElement>> params;
    if (pat.projective) {
        // homogeneous coordinates; canonical scale: first nonzero becomes 1
        int first = -1;
        for (size_t i = 0; i < x->size(); ++i)
            if (!(*x)[i].is_zero()) {
                first = (int)i;
                break;
            }
        if (first < 0) return std::nullopt;
        FieldElement inv = (*x)[first].inverse();
        for (size_t i = 0; i < pat.slots.size(); ++i)
            params.emplace_back(pat.slots[i].first, inv * (*x)[i]);
    } else {
        if ((*x)[0].is_zero()) return std::nullopt;
        FieldElement inv = (*x)[0].inverse();
        for (size_t i = 0; i < pat.slots.size(); ++i)
            params.emplace_back(pat.slots[i].first, inv * (*x)[i + 1]);
    }
    return params;
}

struct Reduction {
    std::vector<FieldElement> fil_params;
    Matrix C;
};

/**
 * Find C in the commutant of the standard (phi,N) carrying the normalized
 * filtration onto the entry's pattern, and read off the filtration parameters.
 * The closed conditions are linear in C; parameter domains and the final flag
 * equality are verified exactly on each candidate.
 */
std::optional<Reduction> reduce_filtration(const CatalogEntry& e, const Normalization& norm,
                                           const std::vector<Matrix>& commutant) {
    const FieldSpec& spec = norm.phi_std.spec();
    int k = (int)commutant.size();
    const Subspace& L1 = norm.fil_std.L1;
    const Subspace& L2 = norm.fil_std.L2;
    Vec v1 = L1.basis()[0];
    Vec v2;
    for (const auto& b : L2.basis())
        if (!L1.contains(b)) {
            v2 = b;
            break;
        }
    if (v2.empty()) throw InternalError("L2 has no vector outside L1");

    // Conditions of the form h . C v = 0, collected as rows over commutant coords.
    std::vector<std::vector<FieldElement>> rows;
    auto add_row = [&](const Vec& h, const Vec& v) {
        std::vector<FieldElement> row;
        row.reserve(k);
        for (const auto& B : commutant) row.push_back(dot(h, B.apply(v)));
        rows.push_back(std::move(row));
    };
    auto add_colinear = [&](const Vec& v, const Vec& a) {
        // C v parallel to a: a[j] (Cv)[i] - a[i] (Cv)[j] = 0 for all i < j.
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Vec h(3, FieldElement::zero(spec));
                h[i] = a[j];
                h[j] = -a[i];
                add_row(h, v);
            }
    };

    if (e.l2_fixed) {
        Subspace W = Subspace::span(
            3, spec, {realize_rat(spec, (*e.l2_fixed)[0]), realize_rat(spec, (*e.l2_fixed)[1])});
        for (const auto& h : annihilator(W)) {
            add_row(h, v1);
            add_row(h, v2);
        }
    } else {
        Subspace W1 = e.w1.cone(spec);
        if (!e.w1.has_slots()) {
            add_colinear(v1, e.w1.anchor_vec(spec));
        } else {
            for (const auto& h : annihilator(W1)) add_row(h, v1);
        }
        if (!e.u2.has_slots()) {
            Vec a2 = e.u2.anchor_vec(spec);
            if (W1.dim() == 2 && W1.contains(a2)) {
                for (const auto& h : annihilator(W1)) add_row(h, v2);
            } else if (!e.w1.has_slots()) {
                // a2 in span(C v1, C v2) with C v1 already parallel to the anchor:
                // det[a1, a2, C v2] = 0, i.e. h = a1 x a2.
                Vec a1 = e.w1.anchor_vec(spec);
                Vec h(3, FieldElement::zero(spec));
                h[0] = a1[1] * a2[2] - a1[2] * a2[1];
                h[1] = a1[2] * a2[0] - a1[0] * a2[2];
                h[2] = a1[0] * a2[1] - a1[1] * a2[0];
                add_row(h, v2);
            } else if (W1.dim() < 3) {
                // C^{-1} a2 lies in (algebra . a2) ∩ L2; a one-dimensional
                // intersection pins the preimage line.
                std::vector<Vec> za;
                for (const auto& B : commutant) za.push_back(B.apply(a2));
                Subspace Z = Subspace::span(3, spec, za);
                Subspace Zp = L2.intersect(Z);
                if (Zp.dim() == 0) return std::nullopt;
                if (Zp.dim() == 1) add_colinear(Zp.basis()[0], a2);
                // dim >= 2: a2 lands in C L2 automatically.
            }
        }
    }

    // Solution space of the homogeneous conditions.
    Matrix sys((int)rows.size(), k, spec);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < k; ++j) sys.at(i, j) = rows[i][j];
    std::vector<Vec> sol = rows.empty() ? std::vector<Vec>() : nullspace(sys);
    if (rows.empty()) {
        // no conditions: the whole commutant
        for (int i = 0; i < k; ++i) {
            Vec t(k, FieldElement::zero(spec));
            t[i] = FieldElement::one(spec);
            sol.push_back(std::move(t));
        }
    }
    if (sol.empty()) return std::nullopt;
    int d = (int)sol.size();
    if (d > 4) throw InternalError("unexpectedly large reduction solution space");

    // Deterministic grid over the solution space.  Every open condition (nonzero
    // determinant, readable parameters, parameter domains) excludes a locus of
    // per-variable degree at most 16, so 17 values per axis cannot all be bad
    // when a valid point exists.
    static const std::array<Rat, 17> kVals = {
        Rat(1), Rat(0),  Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3), Rat(4), Rat(-4),
        Rat(5), Rat(-5), Rat(6),  Rat(-6), Rat(7), Rat(-7), Rat(8), Rat(-8)};
    std::vector<int> idx(d, 0);
    auto advance = [&]() {
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[i] < (int)kVals.size()) return true;
            idx[i] = 0;
        }
        return false;
    };
    do {
        bool all_zero = true;
        for (int i = 0; i < d; ++i)
            if (kVals[idx[i]] != 0) all_zero = false;
        if (all_zero) continue;

        Matrix C = Matrix::zero(3, 3, spec);
        for (int i = 0; i < d; ++i) {
            if (kVals[idx[i]] == 0) continue;
            Matrix term = Matrix::zero(3, 3, spec);
            for (int j = 0; j < k; ++j) {
                if (sol[i][j].is_zero()) continue;
                term = term + commutant[j].scaled(sol[i][j]);
            }
            C = C + term.scaled(FieldElement::from_rational(spec, kVals[idx[i]]));
        }
        if (C.determinant().is_zero()) continue;

        // Read parameters from the transformed flag.
        std::vector<FieldElement> fil(e.n_fil, FieldElement::zero(spec));
        Vec z1 = C.apply(v1);
        auto p1 = read_pattern(z1, e.w1, spec);
        if (!p1) continue;
        for (const auto& [i, val] : *p1) fil[i] = val;
        if (e.u2.has_slots() && !e.l2_fixed) {
            Subspace CL2 = L2.image(C);
            Subspace X = CL2.intersect(e.u2.cone(spec));
            if (X.dim() != 1) continue;
            auto p2 = read_pattern(X.basis()[0], e.u2, spec);
            if (!p2) continue;
            for (const auto& [i, val] : *p2) fil[i] = val;
        }
        if (!e.fil_ok(fil)) continue;
        if (e.projective_fil) {
            bool all0 = true;
            for (const auto& f : fil)
                if (!f.is_zero()) all0 = false;
            if (all0) continue;
        }

        // Exact verification: the flag must land on the pattern.
        std::pair<Subspace, Subspace> pat;
        try {
            pat = pattern_flag(e, spec, fil);
        } catch (const CatalogError&) {
            continue;
        }
        if (L1.image(C) == pat.first && L2.image(C) == pat.second)
            return Reduction{std::move(fil), std::move(C)};
    } while (advance());
    return std::nullopt;
}

}  // namespace

PhiNModule instantiate(const FamilyInstance& fi) {
    if (auto bad = instance_constraint_violation(fi))
        throw CatalogError(family_name(fi.id) + ": " + *bad);
    const CatalogEntry& e = catalog_entry(fi.id);
    PhiNModule m;
    m.field = fi.field;
    m.hodge = fi.hodge;
    m.phi = standard_phi(e.shape, fi.eigen_params, fi.field);
    m.N = standard_N(shape_monodromy_rank(e.shape), fi.field);
    auto [L1, L2] = pattern_flag(e, fi.field, fi.fil_params);
    m.fil = {L1, L2};
    if (shape_monodromy_rank(e.shape) == 0) {
        JordanHint hint;
        for (int i = 0; i < 3; ++i) hint.eigenvalues.push_back(m.phi.at(i, i));
        hint.change_of_basis = Matrix::identity(3, fi.field);
        m.jordan = hint;
    }
    return m;
}

ClassifyResult classify(const PhiNModule& m, bool check_unique) {
    Admissibility adm = is_admissible(m);
    if (!adm.admissible) throw NotAdmissibleError("module is not admissible");
    const Normalization& norm = adm.norm;

    std::vector<Rat> vals;
    for (const auto& l : norm.eigen) vals.push_back(l.valuation().value());

    std::vector<Matrix> commutant =
        intertwiner_space({{norm.phi_std, norm.phi_std}, {norm.N_std, norm.N_std}});

    std::vector<std::pair<FamilyId, Reduction>> matches;
    for (const auto& e : catalog()) {
        if (e.shape != norm.shape) continue;
        if (!e.vals_ok(vals, m.hodge)) continue;
        auto red = reduce_filtration(e, norm, commutant);
        if (red) {
            matches.emplace_back(e.id, std::move(*red));
            if (!check_unique) break;
        }
    }
    if (matches.empty())
        throw NoFamilyMatchError("no catalog family matches an admissible module");
    if (matches.size() > 1) {
        std::string names;
        for (const auto& [id, r] : matches) names += " " + family_name(id);
        throw NoFamilyMatchError("ambiguous catalog match:" + names);
    }

    ClassifyResult out;
    out.fi.id = matches[0].first;
    out.fi.field = m.field;
    out.fi.hodge = m.hodge;
    out.fi.eigen_params = norm.eigen;
    out.fi.fil_params = matches[0].second.fil_params;
    out.transition = (matches[0].second.C * norm.transition).inverse();
    return out;
}

ReducibilityReport reducibility(const FamilyInstance& fi) {
    if (auto bad = instance_constraint_violation(fi))
        throw CatalogError(family_name(fi.id) + ": " + *bad);
    return catalog_entry(fi.id).reducibility(fi);
}

namespace {

/// Eigenvalue-valuation tuples on the (1/e)Z grid compatible with admissibility.
std::vector<std::vector<Rat>> valid_tuples(const CatalogEntry& e, HodgeType h,
                                           const FieldSpec& spec) {
    std::vector<std::vector<Rat>> out;
    long denom = spec.ramification;
    long hi = denom * (h.r + h.s);
    auto grid = [&](long k) {
        Rat q(k, denom);
        q.canonicalize();
        return q;
    };
    // v(det phi_std) = r+s pins the last coordinate.
    int p_offset = 0;
    switch (e.shape) {
        case StandardShape::R1S1:
        case StandardShape::R1S2: p_offset = 1; break;
        case StandardShape::R1S3:
        case StandardShape::R1S4: p_offset = 2; break;
        case StandardShape::R1S5: p_offset = 1; break;
        case StandardShape::R2: p_offset = 3; break;
        default: p_offset = 0;
    }
    Rat target = Rat(h.r + h.s - p_offset);
    if (e.n_eigen == 1) {
        // multiplicity 3 on the determinant
        Rat v = target / 3;
        v.canonicalize();
        Rat scaled = v * denom;
        scaled.canonicalize();
        if (scaled.get_den() == 1 && v >= 0 && v <= Rat(h.r + h.s)) {  // on the grid
            std::vector<Rat> t = {v};
            if (e.vals_ok(t, h)) out.push_back(t);
        }
    } else if (e.n_eigen == 2) {
        for (long k = 0; k <= hi; ++k) {
            Rat v = grid(k);
            Rat w = target - 2 * v;
            if (w < 0 || w > Rat(h.r + h.s)) continue;
            std::vector<Rat> t = {v, w};
            if (e.vals_ok(t, h)) out.push_back(t);
        }
    } else {
        for (long k1 = 0; k1 <= hi; ++k1)
            for (long k2 = 0; k2 <= k1; ++k2) {
                Rat v1 = grid(k1), v2 = grid(k2);
                Rat v3 = target - v1 - v2;
                if (v3 < 0 || v3 > v2) continue;
                std::vector<Rat> t = {v1, v2, v3};
                if (e.vals_ok(t, h)) out.push_back(t);
            }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Rat>> valid_eigen_valuations(FamilyId id, HodgeType h,
                                                     const FieldSpec& spec) {
    return valid_tuples(catalog_entry(id), h, spec);
}

std::vector<FamilyListing> enumerate_families(HodgeType h, const FieldSpec& spec,
                                              std::optional<int> n_rank) {
    if (h.r <= 0 || h.r >= h.s) throw CatalogError("Hodge type requires 0<r<s");
    std::vector<FamilyListing> out;
    for (const auto& e : catalog()) {
        int rank = family_monodromy_rank(e.id);
        if (n_rank && rank != *n_rank) continue;
        if (valid_tuples(e, h, spec).empty()) continue;
        out.push_back({e.id, rank, e.constraint_text(h)});
    }
    return out;
}

namespace {

bool fil_params_match(const CatalogEntry& e, const std::vector<FieldElement>& a,
                      const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    if (e.projective_fil) {
        // [a0:a1] == [b0:b1]
        return a[0] * b[1] == a[1] * b[0];
    }
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool eigen_match(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b,
                 const std::array<int, 3>& perm) {
    for (int i = 0; i < 3; ++i)
        if (a[i] != b[perm[i]]) return false;
    return true;
}

bool cris26_equivalent(const FamilyInstance& a, const FamilyInstance& b) {
    const FieldElement& La = a.fil_params[0];
    const FieldElement& Lb = b.fil_params[0];
    FieldElement one = FieldElement::one(a.field);
    struct Rel {
        std::array<int, 3> perm;
        int kind;
    };
    static const Rel rels[6] = {
        {{0, 1, 2}, 0},  // L' = L
        {{1, 2, 0}, 1},  // L' + 1/L = 1
        {{2, 0, 1}, 2},  // L + 1/L' = 1
        {{0, 2, 1}, 3},  // L L' = 1
        {{2, 1, 0}, 4},  // 1/L + 1/L' = 1
        {{1, 0, 2}, 5},  // L + L' = 1
    };
    for (const auto& rel : rels) {
        if (!eigen_match(a.eigen_params, b.eigen_params, rel.perm)) continue;
        bool ok = false;
        switch (rel.kind) {
            case 0: ok = La == Lb; break;
            case 1: ok = Lb + La.inverse() == one; break;
            case 2: ok = La + Lb.inverse() == one; break;
            case 3: ok = La * Lb == one; break;
            case 4: ok = La.inverse() + Lb.inverse() == one; break;
            case 5: ok = La + Lb == one; break;
        }
        if (ok) return true;
    }
    return false;
}

struct CrossCase {
    FamilyId i, j;
    std::array<int, 3> perm;  // a.eigen[k] == b.eigen[perm[k]], a of family i
};

const std::vector<CrossCase>& cross_cases() {
    static const std::vector<CrossCase> cases = {
        {FamilyId::Cris17, FamilyId::Cris19, {2, 1, 0}},
        {FamilyId::Cris17, FamilyId::Cris19, {1, 2, 0}},
        {FamilyId::Cris17, FamilyId::Cris21, {0, 2, 1}},
        {FamilyId::Cris17, FamilyId::Cris21, {2, 0, 1}},
        {FamilyId::Cris19, FamilyId::Cris21, {1, 0, 2}},
        {FamilyId::Cris19, FamilyId::Cris21, {1, 2, 0}},
        {FamilyId::Cris18, FamilyId::Cris20, {1, 2, 0}},
        {FamilyId::Cris18, FamilyId::Cris22, {0, 2, 1}},
        {FamilyId::Cris20, FamilyId::Cris22, {1, 0, 2}},
        {FamilyId::Cris23, FamilyId::Cris24, {1, 0, 2}},
        {FamilyId::Cris23, FamilyId::Cris24, {1, 2, 0}},
        {FamilyId::Cris23, FamilyId::Cris25, {2, 1, 0}},
        {FamilyId::Cris23, FamilyId::Cris25, {2, 0, 1}},
        {FamilyId::Cris24, FamilyId::Cris25, {0, 2, 1}},
        {FamilyId::Cris24, FamilyId::Cris25, {1, 2, 0}},
    };
    return cases;
}

std::array<int, 3> invert(const std::array<int, 3>& p) {
    std::array<int, 3> q{};
    for (int i = 0; i < 3; ++i) q[p[i]] = i;
    return q;
}

}  // namespace

bool param_equivalent(const FamilyInstance& a, const FamilyInstance& b) {
    if (!(a.field == b.field) || !(a.hodge == b.hodge)) return false;
    if (a.id == b.id) {
        const CatalogEntry& e = catalog_entry(a.id);
        if (a.id == FamilyId::Cris26) return cris26_equivalent(a, b);
        if (a.eigen_params.size() != b.eigen_params.size()) return false;
        // identity
        bool ident = true;
        for (size_t i = 0; i < a.eigen_params.size(); ++i)
            if (a.eigen_params[i] != b.eigen_params[i]) ident = false;
        if (ident && fil_params_match(e, a.fil_params, b.fil_params)) return true;
        // allowed eigenvalue swaps (three-eigenvalue families without fil params)
        for (const auto& perm : e.eigen_swaps)
            if (e.n_eigen == 3 && eigen_match(a.eigen_params, b.eigen_params, perm) &&
                fil_params_match(e, a.fil_params, b.fil_params))
                return true;
        return false;
    }
    // Cross-family table, closed under each side's within-family swaps (the
    // propositions allow those freely, so compositions are equivalences too).
    auto variants = [](const FamilyInstance& x) {
        std::vector<std::vector<FieldElement>> out = {x.eigen_params};
        if (x.eigen_params.size() == 3)
            for (const auto& perm : catalog_entry(x.id).eigen_swaps) {
                std::vector<FieldElement> y = x.eigen_params;
                for (int i = 0; i < 3; ++i) y[perm[i]] = x.eigen_params[i];
                out.push_back(std::move(y));
            }
        return out;
    };
    auto va = variants(a), vb = variants(b);
    for (const auto& c : cross_cases()) {
        bool forward = a.id == c.i && b.id == c.j;
        bool backward = a.id == c.j && b.id == c.i;
        if (!forward && !backward) continue;
        auto perm = forward ? c.perm : invert(c.perm);
        for (const auto& ta : va)
            for (const auto& tb : vb)
                if (eigen_match(ta, tb, perm)) return true;
    }
    return false;
}

}  // namespace phinmod
