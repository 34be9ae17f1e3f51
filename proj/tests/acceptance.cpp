// Acceptance suite: one pass/fail line per criterion, exit code = #failures.
#include <chrono>
#include <iostream>
#include <sstream>

#include "phinmod/certify.hpp"

using namespace phinmod;

namespace {

const FieldSpec spec = make_field(2, 6);

FieldElement fe(Rat q) { return FieldElement::from_rational(spec, q); }
FieldElement uval(Rat unit, const Rat& v) {
    Rat scaled = v * spec.ramification;
    scaled.canonicalize();
    return FieldElement::unit_u_power(spec, unit, scaled.get_num().get_si());
}

Subspace axes3(std::initializer_list<int> is) {
    std::vector<Vec> vs;
    for (int i : is) {
        Vec v(3, FieldElement::zero(spec));
        v[i] = FieldElement::one(spec);
        vs.push_back(v);
    }
    return Subspace::span(3, spec, vs);
}

struct Outcome {
    bool pass = true;
    long checks = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (pass) detail << what;
            pass = false;
        }
    }
};

/// Criterion 6 helper: oracle agreement for one module verdict.
void oracle_check(Outcome& out, const PhiNModule& m, const Admissibility& adm,
                  Rng& rng, int samples = 200) {
    if (adm.admissible) {
        Matrix back = adm.norm.transition.inverse();
        const auto& fams = adm.families;
        for (int k = 0; k < samples; ++k) {
            const auto& f = fams[rng.below(fams.size())];
            Subspace u = f.random_member(rng).image(back);
            Rat th = hodge_invariant(u, m.fil, m.hodge);
            Valuation tn = newton_invariant(u, m.phi);
            out.expect(Valuation(th) <= tn, "sampled subspace violates t_H <= t_N");
        }
    } else {
        const auto& w = *adm.witness;
        if (w.det_mismatch) {
            out.expect(Valuation(Rat(m.hodge.r + m.hodge.s)) !=
                           m.phi.determinant().valuation(),
                       "determinant witness does not check out");
        } else {
            Rat th = hodge_invariant(w.member_input, m.fil, m.hodge);
            Valuation tn = newton_invariant(w.member_input, m.phi);
            out.expect(Valuation(th) > tn, "inadmissibility witness does not check out");
        }
    }
}

// ---------------------------------------------------------------------------

Outcome criterion1_commutants() {
    Outcome out;
    const int expected[12] = {9, 5, 3, 5, 3, 3, 3, 2, 3, 2, 2, 1};
    for (int i = 0; i < 12; ++i) {
        auto res = commutant_shape_check(kAllShapes[i]);
        out.expect(res.ok, std::string(shape_name(kAllShapes[i])) + ": " + res.mismatch);
        out.expect(res.dimension == expected[i],
                   std::string(shape_name(kAllShapes[i])) + ": wrong dimension");
    }
    return out;
}

Outcome criterion2_soundness(Rng& rng, Outcome& oracle) {
    Outcome out;
    for (FamilyId id : all_families()) {
        // a Hodge type on the desk grid where the family is satisfiable
        std::vector<std::vector<Rat>> tuples;
        HodgeType h{1, 2};
        // desk grid first; R2_1 (s <= 2r-3) only opens up from r = 4
        for (int r = 1; r <= 5 && tuples.empty(); ++r)
            for (int s = r + 1; s <= 8 && tuples.empty(); ++s) {
                tuples = valid_eigen_valuations(id, {r, s}, spec);
                if (!tuples.empty()) h = {r, s};
            }
        out.expect(!tuples.empty(),
                   family_name(id) + " unsatisfiable on the whole desk grid");
        if (tuples.empty()) continue;
        // interior and boundary of the valuation range: first, middle, last tuple
        std::vector<size_t> picks = {0, tuples.size() / 2, tuples.size() - 1};
        const CatalogEntry& entry = catalog_entry(id);
        int made = 0;
        for (size_t pi = 0; pi < picks.size(); ++pi) {
            const auto& vals = tuples[picks[pi]];
            FamilyInstance fi;
            fi.id = id;
            fi.field = spec;
            fi.hodge = h;
            bool ok = false;
            for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
                fi.eigen_params.clear();
                fi.fil_params.clear();
                for (const auto& v : vals)
                    fi.eigen_params.push_back(random_with_valuation(spec, v, rng));
                for (int i = 0; i < entry.n_fil; ++i)
                    fi.fil_params.push_back(fe(Rat(2 + (int)pi + i)));
                ok = !instance_constraint_violation(fi);
            }
            out.expect(ok, family_name(id) + ": could not realize a valid instance");
            if (!ok) continue;
            ++made;
            PhiNModule rep = instantiate(fi);
            Admissibility adm = is_admissible(rep);
            out.expect(adm.admissible, family_name(id) + ": representative inadmissible");
            oracle_check(oracle, rep, adm, rng);
        }
        out.expect(made == 3, family_name(id) + ": fewer than 3 parameter choices");
    }
    return out;
}

Outcome criterion3_tightness(Rng& rng, Outcome& oracle) {
    Outcome out;
    struct Closed {
        FamilyId id;
        std::function<bool(int, int)> iff;
    };
    auto always = [](int, int) { return true; };
    std::vector<Closed> closed = {
        {FamilyId::Cris1, [](int r, int s) { return s == 2 * r; }},
        {FamilyId::Cris2, [](int r, int s) { return s >= 2 * r; }},
        {FamilyId::Cris3, [](int r, int s) { return s <= 2 * r; }},
        {FamilyId::Cris4, always},
        {FamilyId::R1_1, [](int r, int s) { return s == 2 * r + 1; }},
        {FamilyId::R1_2, [](int r, int s) { return s >= 2 * r + 1; }},
        {FamilyId::R1_3, [](int r, int s) { return s <= 2 * r - 2; }},
        {FamilyId::R1_4, [](int r, int s) { return s <= 2 * r + 1; }},
        {FamilyId::R1_5, [](int r, int s) { return s >= 2 * r + 1; }},
        {FamilyId::R1_6, always},
        {FamilyId::R1_7, [](int r, int s) { return s == 2 * r - 1; }},
        {FamilyId::R1_8, [](int r, int s) { return s <= 2 * r - 1; }},
        {FamilyId::R1_9, [](int r, int s) { return s <= 2 * r - 1; }},
        {FamilyId::R1_10, [](int r, int s) { return s >= 2 * r - 1; }},
        {FamilyId::R1_11, [](int r, int s) { return s >= 2 * r + 2; }},
        {FamilyId::R1_12, always},
        {FamilyId::R2_1, [](int r, int s) { return s <= 2 * r - 3; }},
        {FamilyId::R2_2, [](int r, int s) { return s >= 2 * r + 3; }},
        {FamilyId::R2_3, always},
    };
    for (const auto& c : closed) {
        const CatalogEntry& entry = catalog_entry(c.id);
        int offset = 0;
        switch (entry.shape) {
            case StandardShape::R1S1:
            case StandardShape::R1S2: offset = 1; break;
            case StandardShape::R1S3:
            case StandardShape::R1S4: offset = 2; break;
            case StandardShape::R2: offset = 3; break;
            default: offset = 0;
        }
        for (int r = 1; r <= 3; ++r)
            for (int s = r + 1; s <= 8; ++s) {
                // the family pattern with the determinant-pinned eigenvalue; the
                // admissibility engine, not the catalog constraint, decides.
                Rat v = Rat(r + s - offset, 3);
                v.canonicalize();
                FieldElement lam = uval(1, v);
                std::vector<FieldElement> eigen = {lam};
                std::vector<FieldElement> fil;
                for (int i = 0; i < entry.n_fil; ++i) fil.push_back(fe(2 + i));
                PhiNModule m;
                m.field = spec;
                m.hodge = {r, s};
                m.phi = standard_phi(entry.shape, eigen, spec);
                m.N = standard_N(shape_monodromy_rank(entry.shape), spec);
                Vec w1 = entry.w1.realize(spec, fil);
                std::vector<Vec> l2v;
                if (entry.l2_fixed) {
                    for (const auto& a : *entry.l2_fixed) {
                        Vec x(3, FieldElement::zero(spec));
                        for (int i = 0; i < 3; ++i) x[i] = fe(a[i]);
                        l2v.push_back(x);
                    }
                } else {
                    l2v = {w1, entry.u2.realize(spec, fil)};
                }
                m.fil.L1 = Subspace::span(3, spec, {w1});
                m.fil.L2 = Subspace::span(3, spec, l2v);
                Admissibility adm = is_admissible(m);
                out.expect(adm.admissible == c.iff(r, s),
                           family_name(c.id) + " at (" + std::to_string(r) + "," +
                               std::to_string(s) + "): admissible=" +
                               (adm.admissible ? "yes" : "no"));
                oracle_check(oracle, m, adm, rng, 40);
            }
    }
    return out;
}

Outcome criterion4_roundtrip(Rng& rng, Outcome& oracle) {
    Outcome out;
    int trials = 0;
    auto one_trial = [&](const FamilyInstance& fi) {
        PhiNModule rep = instantiate(fi);
        PhiNModule moved = transport_module(rep, random_invertible(spec, rng));
        try {
            ClassifyResult res = classify(moved);
            out.expect(param_equivalent(fi, res.fi),
                       family_name(fi.id) + ": round trip not param-equivalent (got " +
                           family_name(res.fi.id) + ")");
        } catch (const std::exception& ex) {
            out.expect(false, family_name(fi.id) + ": " + ex.what());
        }
        if (trials % 10 == 0) {
            Admissibility adm = is_admissible(moved);
            oracle_check(oracle, moved, adm, rng);
        }
        ++trials;
    };
    // ten trials per family at a suitable Hodge type, so every catalog branch runs
    for (FamilyId id : all_families()) {
        std::optional<HodgeType> h;
        for (int r = 1; r <= 5 && !h; ++r)
            for (int s = r + 1; s <= 8 && !h; ++s)
                if (!valid_eigen_valuations(id, {r, s}, spec).empty()) h = HodgeType{r, s};
        out.expect(h.has_value(), family_name(id) + ": no suitable Hodge type");
        if (!h) continue;
        for (int i = 0; i < 10; ++i) one_trial(*random_instance(id, *h, spec, rng));
    }
    // and unstratified draws up to 500 total
    const std::vector<HodgeType> grid = {{1, 2}, {2, 3}, {1, 3}, {2, 5}, {3, 7}, {1, 4}};
    while (trials < 500) one_trial(random_any_instance(grid[rng.below(grid.size())], spec, rng));
    return out;
}

Outcome criterion5_exhaustiveness(Rng& rng, Outcome& oracle) {
    Outcome out;
    for (HodgeType h : {HodgeType{1, 2}, HodgeType{2, 3}, HodgeType{1, 3}}) {
        long admissible = 0, classified = 0;
        for (int i = 0; i < 2000; ++i) {
            PhiNModule m = random_module(h, spec, rng);
            Admissibility adm = is_admissible(m);
            oracle_check(oracle, m, adm, rng, adm.admissible ? 200 : 1);
            if (!adm.admissible) {
                // classify must refuse with a well-formed negative
                if (i % 50 == 0) {
                    try {
                        classify(m);
                        out.expect(false, "classify accepted an inadmissible module");
                    } catch (const NotAdmissibleError&) {
                        out.expect(true, "");
                    }
                }
                continue;
            }
            ++admissible;
            try {
                ClassifyResult res = classify(m, /*check_unique=*/true);
                (void)res;
                ++classified;
                out.expect(true, "");
            } catch (const std::exception& ex) {
                out.expect(false, std::string("NoFamilyMatch/failure: ") + ex.what());
            }
        }
        out.expect(admissible > 50, "generator produced too few admissible modules");
        out.expect(admissible == classified, "some admissible module failed to classify");
    }
    return out;
}

Outcome criterion7_iso(Rng& rng) {
    Outcome out;
    // (a) 200 random pairs: are_isomorphic agrees with param_equivalent
    for (int i = 0; i < 200; ++i) {
        HodgeType h = i % 2 ? HodgeType{1, 2} : HodgeType{2, 3};
        FamilyInstance a = random_any_instance(h, spec, rng);
        FamilyInstance b;
        switch (rng.below(3)) {
            case 0: b = a; break;
            case 1: {
                b = *random_instance(a.id, h, spec, rng);
                break;
            }
            default: b = random_any_instance(h, spec, rng);
        }
        bool expect = param_equivalent(a, b);
        bool got = are_isomorphic(instantiate(a), instantiate(b)).isomorphic;
        out.expect(expect == got, "iso/param_equivalent disagreement on " +
                                      family_name(a.id) + " vs " + family_name(b.id));
    }

    // (b) all six Cris26 Moebius relations at (1,2), eigenvalues of valuation 1
    {
        HodgeType h{1, 2};
        std::vector<FieldElement> ls = {fe(2), fe(6), fe(10)};
        Rat L(3);
        struct Rel {
            std::array<int, 3> perm;  // b.eigen[perm[i]] = a.eigen[i]
            Rat Lp;
        };
        std::vector<Rel> rels = {
            {{0, 1, 2}, L},
            {{1, 2, 0}, Rat(1) - Rat(1) / L},
            {{2, 0, 1}, Rat(1) / (Rat(1) - L)},
            {{0, 2, 1}, Rat(1) / L},
            {{2, 1, 0}, L / (L - Rat(1))},
            {{1, 0, 2}, Rat(1) - L},
        };
        FamilyInstance a{FamilyId::Cris26, spec, h, ls, {fe(L)}};
        PhiNModule ma = instantiate(a);
        for (const auto& rel : rels) {
            std::vector<FieldElement> perm_ls(3, fe(0));
            for (int i = 0; i < 3; ++i) perm_ls[rel.perm[i]] = ls[i];
            FamilyInstance b{FamilyId::Cris26, spec, h, perm_ls, {fe(rel.Lp)}};
            out.expect(param_equivalent(a, b), "Cris26 relation not in param_equivalent");
            out.expect(are_isomorphic(ma, instantiate(b)).isomorphic,
                       "Cris26 relation not isomorphic");
            // and perturbing the parameter must break it
            FamilyInstance bad = b;
            bad.fil_params[0] = fe(rel.Lp + 7);
            if (!instance_constraint_violation(bad))
                out.expect(!are_isomorphic(ma, instantiate(bad)).isomorphic,
                           "Cris26 perturbed relation still isomorphic");
        }
    }

    // (c) the 15 cross-family cases
    {
        struct Cross {
            FamilyId i, j;
            std::array<int, 3> perm;  // b.eigen[perm[k]] = a.eigen[k]
            HodgeType h;
            std::array<Rat, 3> vals;  // valuations for a's eigenvalues
        };
        using F = FamilyId;
        std::vector<Cross> cases = {
            {F::Cris17, F::Cris19, {2, 1, 0}, {1, 2}, {1, 1, 1}},
            {F::Cris17, F::Cris19, {1, 2, 0}, {1, 2}, {1, 1, 1}},
            {F::Cris17, F::Cris21, {0, 2, 1}, {1, 3}, {2, 1, 1}},
            {F::Cris17, F::Cris21, {2, 0, 1}, {1, 2}, {1, 1, 1}},
            {F::Cris19, F::Cris21, {1, 0, 2}, {2, 3}, {2, 2, 1}},
            {F::Cris19, F::Cris21, {1, 2, 0}, {1, 2}, {1, 1, 1}},
            {F::Cris18, F::Cris20, {1, 2, 0}, {2, 3}, {Rat(5, 3), Rat(5, 3), Rat(5, 3)}},
            {F::Cris18, F::Cris22, {0, 2, 1}, {1, 2}, {2, Rat(1, 2), Rat(1, 2)}},
            {F::Cris20, F::Cris22, {1, 0, 2}, {2, 3}, {2, 2, 1}},
            {F::Cris23, F::Cris24, {1, 0, 2}, {1, 2}, {Rat(3, 2), Rat(3, 2), 0}},
            {F::Cris23, F::Cris24, {1, 2, 0}, {1, 2}, {1, 1, 1}},
            {F::Cris23, F::Cris25, {2, 1, 0}, {1, 2}, {1, 1, 1}},
            {F::Cris23, F::Cris25, {2, 0, 1}, {1, 2}, {1, 1, 1}},
            {F::Cris24, F::Cris25, {0, 2, 1}, {1, 3}, {2, 1, 1}},
            {F::Cris24, F::Cris25, {1, 2, 0}, {1, 2}, {1, 1, 1}},
        };
        for (const auto& c : cases) {
            // distinct eigenvalues with the wanted valuations
            std::vector<FieldElement> ls;
            Rat units[3] = {Rat(1), Rat(3), Rat(5)};
            for (int k = 0; k < 3; ++k) ls.push_back(uval(units[k], c.vals[k]));
            std::vector<FieldElement> perm_ls(3, fe(0));
            for (int k = 0; k < 3; ++k) perm_ls[c.perm[k]] = ls[k];
            FamilyInstance a{c.i, spec, c.h, ls, {}};
            FamilyInstance b{c.j, spec, c.h, perm_ls, {}};
            bool a_ok = !instance_constraint_violation(a);
            bool b_ok = !instance_constraint_violation(b);
            out.expect(a_ok && b_ok,
                       "cross case " + family_name(c.i) + "/" + family_name(c.j) +
                           ": invalid instance data");
            if (!a_ok || !b_ok) continue;
            out.expect(param_equivalent(a, b), "cross case not in param_equivalent: " +
                                                   family_name(c.i) + "/" + family_name(c.j));
            out.expect(are_isomorphic(instantiate(a), instantiate(b)).isomorphic,
                       "cross case not isomorphic: " + family_name(c.i) + "/" +
                           family_name(c.j));
        }
    }

    // (d) pairwise non-isomorphism within the rank-1 and rank-2 catalogs
    {
        auto pairwise = [&](const std::vector<FamilyId>& ids) {
            for (size_t i = 0; i < ids.size(); ++i)
                for (size_t j = i + 1; j < ids.size(); ++j) {
                    // a common Hodge type where both families live
                    std::optional<HodgeType> common;
                    for (int r = 1; r <= 5 && !common; ++r)
                        for (int s = r + 1; s <= 8 && !common; ++s)
                            if (!valid_eigen_valuations(ids[i], {r, s}, spec).empty() &&
                                !valid_eigen_valuations(ids[j], {r, s}, spec).empty())
                                common = HodgeType{r, s};
                    if (!common) continue;  // disjoint (r,s) ranges: trivially non-isomorphic
                    auto a = random_instance(ids[i], *common, spec, rng);
                    auto b = random_instance(ids[j], *common, spec, rng);
                    bool iso = are_isomorphic(instantiate(*a), instantiate(*b)).isomorphic;
                    out.expect(!iso, family_name(ids[i]) + " ~ " + family_name(ids[j]) +
                                         " unexpectedly isomorphic");
                }
        };
        std::vector<FamilyId> r1, r2;
        for (FamilyId id : all_families()) {
            if (family_monodromy_rank(id) == 1) r1.push_back(id);
            if (family_monodromy_rank(id) == 2) r2.push_back(id);
        }
        pairwise(r1);
        pairwise(r2);
    }
    return out;
}

Outcome criterion8_rank2_remark(Rng& rng) {
    Outcome out;
    auto listing = enumerate_families({1, 2}, spec, 2);
    out.expect(listing.size() == 1 && listing[0].id == FamilyId::R2_3,
               "enumerate((1,2), rank 2) != {R2_3}");
    for (int i = 0; i < 25; ++i) {
        auto fi = random_instance(FamilyId::R2_3, {1, 2}, spec, rng);
        ReducibilityReport rep = reducibility(*fi);
        out.expect(rep.kind == ReducibilityReport::Kind::NonSplitReducible,
                   "an R2_3 instance at s=2 is not non-split reducible");
        out.expect(rep.submodules.size() == 2 && rep.submodules[0] == axes3({2}) &&
                       rep.submodules[1] == axes3({1, 2}),
                   "R2_3 submodules at s=2 are not {E e3, E(e2,e3)}");
    }
    return out;
}

Outcome criterion9_reducibility() {
    Outcome out;
    struct Spot {
        FamilyId id;
        HodgeType h;
        std::vector<Rat> vals;           // eigenvalue valuations
        std::vector<Rat> fil;            // filtration parameters
        ReducibilityReport::Kind kind;
        std::vector<Subspace> subs;
    };
    using K = ReducibilityReport::Kind;
    using F = FamilyId;
    std::vector<Spot> spots = {
        {F::Cris2, {1, 2}, {1}, {}, K::NonSplitReducible, {axes3({2})}},
        {F::Cris3, {1, 2}, {1}, {}, K::NonSplitReducible, {axes3({1, 2})}},
        {F::Cris9, {1, 2}, {1, 1}, {}, K::NonSplitReducible, {axes3({0, 1})}},          // v=s/2
        {F::Cris9, {1, 2}, {Rat(3, 2), 0}, {}, K::NonSplitReducible, {axes3({2})}},     // v=(r+s)/2
        {F::Cris10, {2, 3}, {1, 3}, {}, K::NonSplitReducible, {axes3({0, 1})}},         // v=r/2
        {F::Cris10, {2, 3}, {2, 1}, {}, K::NonSplitReducible, {axes3({1, 2})}},         // v=r
        {F::Cris11, {2, 3}, {2, 1}, {}, K::NonSplitReducible, {axes3({1})}},            // v=r
        {F::Cris12, {2, 3}, {Rat(3, 2), 2}, {}, K::NonSplitReducible, {axes3({2})}},    // v=s/2
        {F::Cris13, {2, 3}, {1, 3}, {2}, K::NonSplitReducible, {axes3({0, 1})}},        // v=r/2
        {F::Cris18, {1, 3}, {2, 2, 0}, {}, K::NonSplitReducible, {axes3({2})}},         // v3=0
        {F::Cris20, {1, 2}, {1, 1, 1}, {}, K::NonSplitReducible, {axes3({1, 2})}},      // v1=r
        {F::Cris22, {1, 2}, {2, Rat(5, 6), Rat(1, 6)}, {}, K::NonSplitReducible,
         {axes3({1, 2})}},                                                              // v1=s
        {F::Cris25, {1, 3}, {2, 1, 1}, {}, K::NonSplitReducible, {axes3({2})}},         // v3=r
        {F::Cris15, {1, 2}, {2, 1, 0}, {}, K::Decomposable,
         {axes3({0}), axes3({1, 2}), axes3({2}), axes3({0, 2})}},                        // v3=0
        {F::R1_2, {1, 3}, {1}, {1, 2}, K::NonSplitReducible, {}},  // submodule built below
        {F::R1_15, {1, 2}, {0, 2}, {3}, K::NonSplitReducible,
         {axes3({2}), axes3({1, 2}), axes3({0, 2})}},                                    // r=1
        {F::R1_19, {2, 3}, {2, 0}, {3}, K::NonSplitReducible,
         {axes3({1}), axes3({2}), axes3({1, 2})}},                                       // s=r+1
        {F::R1_17, {1, 2}, {Rat(1, 2), 1}, {3}, K::NonSplitReducible, {axes3({0, 2})}},  // v=(s-1)/2
        {F::R2_1, {4, 5}, {2}, {1, 2}, K::NonSplitReducible, {axes3({1, 2})}},           // s=2r-3
        {F::R2_2, {1, 5}, {1}, {1, 2}, K::NonSplitReducible, {axes3({2})}},              // s=2r+3
    };
    for (auto& spot : spots) {
        FamilyInstance fi;
        fi.id = spot.id;
        fi.field = spec;
        fi.hodge = spot.h;
        Rat units[3] = {Rat(1), Rat(3), Rat(5)};
        for (size_t k = 0; k < spot.vals.size(); ++k)
            fi.eigen_params.push_back(uval(units[k], spot.vals[k]));
        for (const auto& q : spot.fil) fi.fil_params.push_back(fe(q));
        auto bad = instance_constraint_violation(fi);
        out.expect(!bad, family_name(spot.id) + ": invalid spot instance: " +
                             (bad ? *bad : ""));
        if (bad) continue;
        if (spot.id == FamilyId::R1_2) {
            // submodule E(L1 e2 + L2 e3) from the instance's projective parameter
            Vec w(3, FieldElement::zero(spec));
            w[1] = fi.fil_params[0];
            w[2] = fi.fil_params[1];
            spot.subs = {Subspace::span(3, spec, {w})};
        }
        ReducibilityReport rep = reducibility(fi);
        out.expect(rep.kind == spot.kind, family_name(spot.id) + ": wrong kind");
        bool same = rep.submodules.size() == spot.subs.size();
        for (size_t k = 0; same && k < spot.subs.size(); ++k)
            same = rep.submodules[k] == spot.subs[k];
        out.expect(same, family_name(spot.id) + ": submodule list mismatch");
        // independent verification: invariant with t_H = t_N
        PhiNModule rep_mod = instantiate(fi);
        for (const auto& u : rep.submodules) {
            bool inv_ok = true;
            try {
                restrict_operator(rep_mod.N, u);
            } catch (const LinalgError&) {
                inv_ok = false;
            }
            out.expect(inv_ok, family_name(spot.id) + ": submodule not N-invariant");
            out.expect(Valuation(hodge_invariant(u, rep_mod.fil, rep_mod.hodge)) ==
                           newton_invariant(u, rep_mod.phi),
                       family_name(spot.id) + ": submodule t_H != t_N");
        }
    }
    return out;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    int failures = 0;
    Outcome oracle;  // criterion 6 accumulates across criteria 2-5

    auto announce = [&](int n, const std::string& name, const Outcome& out) {
        bool pass = out.pass;
        if (!pass) ++failures;
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
        std::cout << "criterion " << n << " (" << name << "): " << (pass ? "PASS" : "FAIL")
                  << " [" << out.checks << " checks, t=" << secs.count() / 1000.0 << "s]";
        if (!pass) std::cout << " — " << out.detail.str();
        std::cout << "\n" << std::flush;
    };

    Rng rng(20812);  // fixed campaign seed
    announce(1, "commutant lemma suite", criterion1_commutants());
    announce(2, "catalog soundness 49x3", criterion2_soundness(rng, oracle));
    announce(3, "tightness of closed conditions", criterion3_tightness(rng, oracle));
    announce(4, "classification round-trip x500", criterion4_roundtrip(rng, oracle));
    announce(5, "exhaustiveness 3x2000", criterion5_exhaustiveness(rng, oracle));
    announce(6, "oracle agreement (criteria 2-5 modules)", oracle);
    announce(7, "isomorphism suite", criterion7_iso(rng));
    announce(8, "rank-2 remark at (0,1,2)", criterion8_rank2_remark(rng));
    announce(9, "reducibility tables (20 spots)", criterion9_reducibility());

    std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << "\n";
    return failures;
}
