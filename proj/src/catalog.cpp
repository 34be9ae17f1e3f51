#include "phinmod/catalog.hpp"

#include <sstream>

namespace phinmod {

namespace {

const char* kNames[kFamilyCount] = {
    "Cris1",  "Cris2",  "Cris3",  "Cris4",  "Cris5",  "Cris6",  "Cris7",
    "Cris8",  "Cris9",  "Cris10", "Cris11", "Cris12", "Cris13", "Cris14",
    "Cris15", "Cris16", "Cris17", "Cris18", "Cris19", "Cris20", "Cris21",
    "Cris22", "Cris23", "Cris24", "Cris25", "Cris26", "R1_1",   "R1_2",
    "R1_3",   "R1_4",   "R1_5",   "R1_6",   "R1_7",   "R1_8",   "R1_9",
    "R1_10",  "R1_11",  "R1_12",  "R1_13",  "R1_14",  "R1_15",  "R1_16",
    "R1_17",  "R1_18",  "R1_19",  "R1_20",  "R2_1",   "R2_2",   "R2_3"};

}  // namespace

std::string family_name(FamilyId id) { return kNames[(int)id]; }

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (int i = 0; i < kFamilyCount; ++i)
        if (name == kNames[i]) return (FamilyId)i;
    return std::nullopt;
}

int family_monodromy_rank(FamilyId id) {
    int i = (int)id;
    if (i <= (int)FamilyId::Cris26) return 0;
    if (i <= (int)FamilyId::R1_20) return 1;
    return 2;
}

std::vector<FamilyId> all_families() {
    std::vector<FamilyId> out;
    for (int i = 0; i < kFamilyCount; ++i) out.push_back((FamilyId)i);
    return out;
}

std::string reducibility_kind_name(ReducibilityReport::Kind k) {
    switch (k) {
        case ReducibilityReport::Kind::Decomposable: return "decomposable";
        case ReducibilityReport::Kind::NonSplitReducible: return "non-split-reducible";
        case ReducibilityReport::Kind::Irreducible: return "irreducible";
    }
    return "?";
}

Vec PatternVec::realize(const FieldSpec& spec, const std::vector<FieldElement>& fil) const {
    Vec v(3, FieldElement::zero(spec));
    if (!projective)
        for (int i = 0; i < 3; ++i) v[i] = FieldElement::from_rational(spec, anchor[i]);
    for (const auto& [idx, dir] : slots) {
        if (idx >= (int)fil.size()) throw CatalogError("missing filtration parameter");
        for (int i = 0; i < 3; ++i)
            v[i] += fil[idx] * FieldElement::from_rational(spec, dir[i]);
    }
    return v;
}

Subspace PatternVec::cone(const FieldSpec& spec) const {
    std::vector<Vec> vs;
    if (!projective) vs.push_back(anchor_vec(spec));
    for (const auto& [idx, dir] : slots) {
        Vec v(3, FieldElement::zero(spec));
        for (int i = 0; i < 3; ++i) v[i] = FieldElement::from_rational(spec, dir[i]);
        vs.push_back(std::move(v));
    }
    return Subspace::span(3, spec, vs);
}

Vec PatternVec::anchor_vec(const FieldSpec& spec) const {
    Vec v(3, FieldElement::zero(spec));
    for (int i = 0; i < 3; ++i) v[i] = FieldElement::from_rational(spec, anchor[i]);
    return v;
}

std::vector<Rat> eigen_valuations(const FamilyInstance& fi) {
    std::vector<Rat> vals;
    for (const auto& l : fi.eigen_params) {
        Valuation v = l.valuation();
        if (v.is_infinite()) throw CatalogError("eigenvalue parameter is zero");
        vals.push_back(v.value());
    }
    return vals;
}

namespace {

using Vals = std::vector<Rat>;
using K = ReducibilityReport::Kind;

std::array<Rat, 3> e(int i) {
    std::array<Rat, 3> a{Rat(0), Rat(0), Rat(0)};
    a[i] = 1;
    return a;
}

std::array<Rat, 3> e2(int i, int j) {
    std::array<Rat, 3> a{Rat(0), Rat(0), Rat(0)};
    a[i] = 1;
    a[j] = 1;
    return a;
}

PatternVec fixed(std::array<Rat, 3> anchor) {
    PatternVec p;
    p.anchor = anchor;
    return p;
}

PatternVec slotted(std::array<Rat, 3> anchor,
                   std::vector<std::pair<int, std::array<Rat, 3>>> slots) {
    PatternVec p;
    p.anchor = anchor;
    p.slots = std::move(slots);
    return p;
}

PatternVec projective(std::vector<std::pair<int, std::array<Rat, 3>>> slots) {
    PatternVec p;
    p.slots = std::move(slots);
    p.projective = true;
    return p;
}

Subspace axes(const FieldSpec& spec, std::initializer_list<int> is) {
    std::vector<Vec> vs;
    for (int i : is) {
        Vec v(3, FieldElement::zero(spec));
        v[i] = FieldElement::one(spec);
        vs.push_back(std::move(v));
    }
    return Subspace::span(3, spec, vs);
}

Subspace span_of(const FieldSpec& spec, const std::vector<Vec>& vs) {
    return Subspace::span(3, spec, vs);
}

// Shared constraint fragments.
bool sorted_desc(const Vals& v) { return v[0] >= v[1] && v[1] >= v[2]; }
Rat sum3(const Vals& v) { return v[0] + v[1] + v[2]; }

std::function<bool(const std::vector<FieldElement>&)> fil_any() {
    return [](const std::vector<FieldElement>&) { return true; };
}
std::function<bool(const std::vector<FieldElement>&)> fil_nonzero(std::vector<int> idxs) {
    return [idxs](const std::vector<FieldElement>& f) {
        for (int i : idxs)
            if (f[i].is_zero()) return false;
        return true;
    };
}

ReducibilityReport irr() { return {K::Irreducible, {}}; }
ReducibilityReport report(K k, std::vector<Subspace> subs) { return {k, std::move(subs)}; }

std::string show(const Rat& q) { return Rat(q).get_str(); }

Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

    // ----- crystalline, phi with one eigenvalue --------------------------------

    add({FamilyId::Cris1, StandardShape::C2, 1, 0, false, fixed(e(0)), fixed(e(2)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r + h.s, 3) && h.s == 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s)/3=" + show(frac(h.r + h.s, 3)) + " and s=2r";
         },
         [](const FamilyInstance& fi) {
             const auto& spec = fi.field;
             return report(K::Decomposable, {axes(spec, {0, 1}), axes(spec, {2})});
         },
         {}});

    add({FamilyId::Cris2, StandardShape::C3, 1, 0, false, fixed(e(0)), fixed(e(2)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r + h.s, 3) && h.s >= 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s)/3=" + show(frac(h.r + h.s, 3)) + " and s>=2r";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r)
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::Cris3, StandardShape::C3, 1, 0, false, fixed(e(1)), fixed(e(0)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r + h.s, 3) && h.s <= 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s)/3=" + show(frac(h.r + h.s, 3)) + " and s<=2r";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r)
                 return report(K::NonSplitReducible, {axes(fi.field, {1, 2})});
             return irr();
         },
         {}});

    add({FamilyId::Cris4, StandardShape::C3, 1, 1, false, fixed(e(0)),
         slotted(e(1), {{0, e(2)}}), {},
         [](const Vals& v, HodgeType h) { return v[0] == frac(h.r + h.s, 3); },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s)/3=" + show(frac(h.r + h.s, 3)) + ", L in E";
         },
         [](const FamilyInstance&) { return irr(); },
         {}});

    // ----- crystalline, phi = diag(l,l,l3) -------------------------------------

    add({FamilyId::Cris5, StandardShape::C4, 2, 0, false, fixed(e2(0, 2)), fixed(e(1)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == Rat(h.r) && v[1] == Rat(h.s - h.r);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=r=" + show(h.r) + " and v(lambda3)=s-r=" + show(h.s - h.r);
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {1}), axes(fi.field, {0, 2})});
         },
         {}});

    // ----- crystalline, phi = (l + E21) ⊕ l3 -----------------------------------

    auto fifth_sum = [](const Vals& v, HodgeType h) {
        return 2 * v[0] + v[1] == Rat(h.r + h.s);
    };

    add({FamilyId::Cris6, StandardShape::C5, 2, 0, false, fixed(e(2)), fixed(e(0)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r, 2) && v[1] == Rat(h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=r/2=" + show(frac(h.r, 2)) + " and v(lambda3)=s=" + show(h.s);
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {2}), axes(fi.field, {0, 1})});
         },
         {}});

    add({FamilyId::Cris7, StandardShape::C5, 2, 0, false, fixed(e(0)), fixed(e(1)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r + h.s, 2) && v[1] == 0;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s)/2=" + show(frac(h.r + h.s, 2)) + " and v(lambda3)=0";
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {2}), axes(fi.field, {0, 1})});
         },
         {}});

    add({FamilyId::Cris8, StandardShape::C5, 2, 0, false, fixed(e(0)), fixed(e(2)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.s, 2) && v[1] == Rat(h.r);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=s/2=" + show(frac(h.s, 2)) + " and v(lambda3)=r=" + show(h.r);
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {2}), axes(fi.field, {0, 1})});
         },
         {}});

    add({FamilyId::Cris9, StandardShape::C5, 2, 0, false, fixed(e(0)), fixed(e2(1, 2)), {},
         [fifth_sum](const Vals& v, HodgeType h) {
             return frac(h.s, 2) <= v[0] && v[0] <= frac(h.r + h.s, 2) && fifth_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "s/2=" + show(frac(h.s, 2)) + " <= v(lambda) <= (r+s)/2=" +
                    show(frac(h.r + h.s, 2)) + ", 2v(lambda)+v(lambda3)=r+s";
         },
         [](const FamilyInstance& fi) {
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.s, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {0, 1})});
             if (v == frac(fi.hodge.r + fi.hodge.s, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::Cris10, StandardShape::C5, 2, 0, false, fixed(e2(1, 2)), fixed(e(0)), {},
         [fifth_sum](const Vals& v, HodgeType h) {
             return frac(h.r, 2) <= v[0] && v[0] <= Rat(h.r) && fifth_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "r/2=" + show(frac(h.r, 2)) + " <= v(lambda) <= r=" + show(h.r) +
                    ", 2v(lambda)+v(lambda3)=r+s";
         },
         [](const FamilyInstance& fi) {
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.r, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {0, 1})});
             if (v == Rat(fi.hodge.r))
                 return report(K::NonSplitReducible, {axes(fi.field, {1, 2})});
             return irr();
         },
         {}});

    add({FamilyId::Cris11, StandardShape::C5, 2, 0, false, fixed(e2(0, 2)), fixed(e(1)), {},
         [fifth_sum](const Vals& v, HodgeType h) {
             return Rat(h.r) <= v[0] && v[0] <= frac(h.r + h.s, 2) && fifth_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "r=" + show(h.r) + " <= v(lambda) <= (r+s)/2=" + show(frac(h.r + h.s, 2)) +
                    ", 2v(lambda)+v(lambda3)=r+s";
         },
         [](const FamilyInstance& fi) {
             Rat v = eigen_valuations(fi)[0];
             if (v == Rat(fi.hodge.r))
                 return report(K::NonSplitReducible, {axes(fi.field, {1})});
             if (v == frac(fi.hodge.r + fi.hodge.s, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::Cris12, StandardShape::C5, 2, 0, false, fixed(e2(0, 2)), fixed(e(2)), {},
         [fifth_sum](const Vals& v, HodgeType h) {
             return frac(h.r, 2) <= v[0] && v[0] <= frac(h.s, 2) && fifth_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "r/2=" + show(frac(h.r, 2)) + " <= v(lambda) <= s/2=" + show(frac(h.s, 2)) +
                    ", 2v(lambda)+v(lambda3)=r+s";
         },
         [](const FamilyInstance& fi) {
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.r, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {0, 1})});
             if (v == frac(fi.hodge.s, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::Cris13, StandardShape::C5, 2, 1, false, fixed(e2(0, 2)),
         slotted(e(1), {{0, e(2)}}), {},
         [fifth_sum](const Vals& v, HodgeType h) {
             return frac(h.r, 2) <= v[0] && v[0] <= frac(h.r + h.s, 2) && fifth_sum(v, h);
         },
         fil_nonzero({0}),
         [](HodgeType h) {
             return "r/2=" + show(frac(h.r, 2)) + " <= v(lambda) <= (r+s)/2=" +
                    show(frac(h.r + h.s, 2)) + ", 2v(lambda)+v(lambda3)=r+s, L != 0";
         },
         [](const FamilyInstance& fi) {
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.r, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {0, 1})});
             if (v == frac(fi.hodge.r + fi.hodge.s, 2))
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    // ----- crystalline, phi = diag(l1,l2,l3), distinct -------------------------

    add({FamilyId::Cris14, StandardShape::C6, 3, 0, false, fixed(e(0)), fixed(e(1)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == Rat(h.s) && v[1] == Rat(h.r) && v[2] == 0;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)=s=" + show(h.s) + ", v(lambda2)=r=" + show(h.r) +
                    ", v(lambda3)=0";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             return report(K::Decomposable,
                           {axes(sp, {0}), axes(sp, {1}), axes(sp, {2}), axes(sp, {0, 1}),
                            axes(sp, {1, 2}), axes(sp, {0, 2})});
         },
         {}});

    add({FamilyId::Cris15, StandardShape::C6, 3, 0, false, fixed(e(0)), fixed(e2(1, 2)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == Rat(h.s) && sorted_desc(v) && v[2] >= 0 &&
                    v[1] + v[2] == Rat(h.r);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)=s=" + show(h.s) +
                    ", v(lambda2)>=v(lambda3)>=0, v(lambda2)+v(lambda3)=r=" + show(h.r);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             std::vector<Subspace> subs = {axes(sp, {0}), axes(sp, {1, 2})};
             if (eigen_valuations(fi)[2] == 0) {
                 subs.push_back(axes(sp, {2}));
                 subs.push_back(axes(sp, {0, 2}));
             }
             return report(K::Decomposable, subs);
         },
         {{0, 2, 1}}});

    add({FamilyId::Cris16, StandardShape::C6, 3, 0, false, fixed(e2(0, 1)), fixed(e(0)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] >= v[1] && v[1] >= Rat(h.r) && v[2] == 0 &&
                    v[0] + v[1] == Rat(h.r + h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)>=v(lambda2)>=r=" + show(h.r) +
                    ", v(lambda3)=0, v(lambda1)+v(lambda2)=r+s=" + show(h.r + h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             std::vector<Subspace> subs = {axes(sp, {2}), axes(sp, {0, 1})};
             if (eigen_valuations(fi)[1] == Rat(fi.hodge.r)) {
                 subs.push_back(axes(sp, {1}));
                 subs.push_back(axes(sp, {1, 2}));
             }
             return report(K::Decomposable, subs);
         },
         {{1, 0, 2}}});

    add({FamilyId::Cris17, StandardShape::C6, 3, 0, false, fixed(e2(0, 1)), fixed(e(2)), {},
         [](const Vals& v, HodgeType h) {
             return sorted_desc(v) && v[2] == Rat(h.r) && v[0] + v[1] == Rat(h.s) &&
                    h.s >= 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)>=v(lambda2)>=v(lambda3)=r=" + show(h.r) +
                    ", v(lambda1)+v(lambda2)=s=" + show(h.s) + ", s>=2r";
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {2}), axes(fi.field, {0, 1})});
         },
         {{1, 0, 2}}});

    add({FamilyId::Cris18, StandardShape::C6, 3, 0, false, fixed(e2(0, 1)), fixed(e2(1, 2)),
         {},
         [](const Vals& v, HodgeType h) {
             return Rat(h.s) >= v[0] && sorted_desc(v) && v[2] >= 0 && v[2] <= Rat(h.r) &&
                    sum3(v) == Rat(h.r + h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "s>=v(lambda1)>=v(lambda2)>=v(lambda3)>=0, v(lambda3)<=r=" + show(h.r) +
                    ", sum v=r+s=" + show(h.r + h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             auto v = eigen_valuations(fi);
             std::vector<Subspace> subs;
             if (v[2] == 0) subs.push_back(axes(sp, {2}));
             if (v[2] == Rat(fi.hodge.r)) subs.push_back(axes(sp, {0, 1}));
             if (v[0] == Rat(fi.hodge.s)) subs.push_back(axes(sp, {1, 2}));
             if (subs.empty()) return irr();
             return report(K::NonSplitReducible, subs);
         },
         {{1, 0, 2}}});

    add({FamilyId::Cris19, StandardShape::C6, 3, 0, false, fixed(e2(1, 2)), fixed(e(0)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == Rat(h.r) && sorted_desc(v) && v[1] + v[2] == Rat(h.s) &&
                    h.s <= 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "r=" + show(h.r) +
                    "=v(lambda1)>=v(lambda2)>=v(lambda3), v(lambda2)+v(lambda3)=s=" +
                    show(h.s) + ", s<=2r";
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {0}), axes(fi.field, {1, 2})});
         },
         {{0, 2, 1}}});

    add({FamilyId::Cris20, StandardShape::C6, 3, 0, false, fixed(e2(1, 2)), fixed(e2(0, 2)),
         {},
         [](const Vals& v, HodgeType h) {
             return Rat(h.r) >= v[0] && sorted_desc(v) && sum3(v) == Rat(h.r + h.s) &&
                    h.s <= 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "r=" + show(h.r) +
                    ">=v(lambda1)>=v(lambda2)>=v(lambda3), sum v=r+s=" + show(h.r + h.s) +
                    ", s<=2r";
         },
         [](const FamilyInstance& fi) {
             if (eigen_valuations(fi)[0] == Rat(fi.hodge.r))
                 return report(K::NonSplitReducible, {axes(fi.field, {1, 2})});
             return irr();
         },
         {{0, 2, 1}}});

    add({FamilyId::Cris21, StandardShape::C6, 3, 0, false, fixed(e2(0, 2)), fixed(e(1)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] >= v[1] && v[1] == Rat(h.r) && v[1] >= v[2] && v[2] >= 0 &&
                    v[0] + v[2] == Rat(h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)>=v(lambda2)=r=" + show(h.r) +
                    ">=v(lambda3)>=0, v(lambda1)+v(lambda3)=s=" + show(h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             std::vector<Subspace> subs = {axes(sp, {1}), axes(sp, {0, 2})};
             if (eigen_valuations(fi)[0] == Rat(fi.hodge.s)) {
                 subs.push_back(axes(sp, {2}));
                 subs.push_back(axes(sp, {1, 2}));
             }
             return report(K::Decomposable, subs);
         },
         {{2, 1, 0}}});

    add({FamilyId::Cris22, StandardShape::C6, 3, 0, false, fixed(e2(0, 2)), fixed(e2(1, 2)),
         {},
         [](const Vals& v, HodgeType h) {
             return Rat(h.s) >= v[0] && sorted_desc(v) && v[1] <= Rat(h.r) &&
                    sum3(v) == Rat(h.r + h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "s>=v(lambda1)>=v(lambda2)>=v(lambda3), v(lambda2)<=r=" + show(h.r) +
                    ", sum v=r+s=" + show(h.r + h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             auto v = eigen_valuations(fi);
             std::vector<Subspace> subs;
             if (v[2] == 0) subs.push_back(axes(sp, {2}));
             if (v[1] == Rat(fi.hodge.r)) subs.push_back(axes(sp, {0, 2}));
             if (v[0] == Rat(fi.hodge.s)) subs.push_back(axes(sp, {1, 2}));
             if (subs.empty()) return irr();
             return report(K::NonSplitReducible, subs);
         },
         {{2, 1, 0}}});

    auto sixth_triple = [](const Vals& v, HodgeType h) {
        return sorted_desc(v) && v[2] >= 0 && sum3(v) == Rat(h.r + h.s);
    };

    add({FamilyId::Cris23, StandardShape::C6, 3, 0, false, fixed({Rat(1), Rat(1), Rat(1)}),
         fixed(e(0)), {},
         [sixth_triple](const Vals& v, HodgeType h) {
             return sixth_triple(v, h) && Rat(h.r) <= v[0] && v[0] <= Rat(h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)>=v(lambda2)>=v(lambda3)>=0, r=" + show(h.r) +
                    "<=v(lambda1)<=s=" + show(h.s) + ", sum v=r+s=" + show(h.r + h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             auto v = eigen_valuations(fi);
             std::vector<Subspace> subs;
             if (v[2] == 0) subs.push_back(axes(sp, {2}));
             if (v[0] == Rat(fi.hodge.r)) subs.push_back(axes(sp, {0}));
             if (v[0] == Rat(fi.hodge.s)) subs.push_back(axes(sp, {1, 2}));
             if (subs.empty()) return irr();
             return report(K::NonSplitReducible, subs);
         },
         {{0, 2, 1}}});

    add({FamilyId::Cris24, StandardShape::C6, 3, 0, false, fixed({Rat(1), Rat(1), Rat(1)}),
         fixed(e(1)), {},
         [sixth_triple](const Vals& v, HodgeType h) {
             return sixth_triple(v, h) && v[1] >= Rat(h.r);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)>=v(lambda2)>=v(lambda3)>=0, v(lambda2)>=r=" + show(h.r) +
                    ", sum v=r+s=" + show(h.r + h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             auto v = eigen_valuations(fi);
             std::vector<Subspace> subs;
             if (v[2] == 0) subs.push_back(axes(sp, {2}));
             if (v[1] == Rat(fi.hodge.r)) subs.push_back(axes(sp, {1}));
             if (v[0] == Rat(fi.hodge.s)) subs.push_back(axes(sp, {1, 2}));
             if (subs.empty()) return irr();
             return report(K::NonSplitReducible, subs);
         },
         {{2, 1, 0}}});

    add({FamilyId::Cris25, StandardShape::C6, 3, 0, false, fixed({Rat(1), Rat(1), Rat(1)}),
         fixed(e(2)), {},
         [](const Vals& v, HodgeType h) {
             return sorted_desc(v) && v[2] >= Rat(h.r) && sum3(v) == Rat(h.r + h.s) &&
                    h.s >= 2 * h.r;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda1)>=v(lambda2)>=v(lambda3)>=r=" + show(h.r) +
                    ", sum v=r+s=" + show(h.r + h.s) + ", s>=2r";
         },
         [](const FamilyInstance& fi) {
             if (eigen_valuations(fi)[2] == Rat(fi.hodge.r))
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {{1, 0, 2}}});

    add({FamilyId::Cris26, StandardShape::C6, 3, 1, false, fixed({Rat(1), Rat(1), Rat(1)}),
         slotted(e(1), {{0, e(2)}}), {},
         [sixth_triple](const Vals& v, HodgeType h) {
             return Rat(h.s) >= v[0] && sixth_triple(v, h);
         },
         [](const std::vector<FieldElement>& f) {
             return !f[0].is_zero() && f[0] != FieldElement::one(f[0].spec());
         },
         [](HodgeType h) {
             return "s>=v(lambda1)>=v(lambda2)>=v(lambda3)>=0, sum v=r+s=" +
                    show(h.r + h.s) + ", L not in {0,1}";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             auto v = eigen_valuations(fi);
             std::vector<Subspace> subs;
             if (v[2] == 0) subs.push_back(axes(sp, {2}));
             if (v[0] == Rat(fi.hodge.s)) subs.push_back(axes(sp, {1, 2}));
             if (subs.empty()) return irr();
             return report(K::NonSplitReducible, subs);
         },
         {}});

    // ----- rank N = 1 -----------------------------------------------------------

    auto v_r1_jordan = [](int offset) {
        return [offset](const Vals& v, HodgeType h) {
            return v[0] == frac(h.r + h.s - offset, 3);
        };
    };

    add({FamilyId::R1_1, StandardShape::R1S1, 1, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(1)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(1)(v, h) && h.s == 2 * h.r + 1;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/3=" + show(frac(h.r + h.s - 1, 3)) + " and s=2r+1";
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {1}), axes(fi.field, {0, 2})});
         },
         {}});

    add({FamilyId::R1_2, StandardShape::R1S1, 1, 2, true, fixed(e2(0, 1)),
         projective({{0, e(1)}, {1, e(2)}}), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(1)(v, h) && h.s >= 2 * h.r + 1;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/3=" + show(frac(h.r + h.s - 1, 3)) + " and s>=2r+1";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r + 1) {
                 Vec w(3, FieldElement::zero(fi.field));
                 w[1] = fi.fil_params[0];
                 w[2] = fi.fil_params[1];
                 return report(K::NonSplitReducible, {span_of(fi.field, {w})});
             }
             return irr();
         },
         {}});

    add({FamilyId::R1_3, StandardShape::R1S2, 1, 1, false, fixed(e(1)),
         slotted(e(0), {{0, e(2)}}), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(1)(v, h) && h.s <= 2 * h.r - 2;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/3=" + show(frac(h.r + h.s - 1, 3)) + " and s<=2r-2";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r - 2)
                 return report(K::NonSplitReducible, {axes(fi.field, {1, 2})});
             return irr();
         },
         {}});

    add({FamilyId::R1_4, StandardShape::R1S2, 1, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(1)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(1)(v, h) && h.s <= 2 * h.r + 1;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/3=" + show(frac(h.r + h.s - 1, 3)) + " and s<=2r+1";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r + 1)
                 return report(K::NonSplitReducible, {axes(fi.field, {0, 2})});
             return irr();
         },
         {}});

    add({FamilyId::R1_5, StandardShape::R1S2, 1, 1, false, slotted(e(0), {{0, e(1)}}),
         fixed(e(2)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(1)(v, h) && h.s >= 2 * h.r + 1;
         },
         fil_nonzero({0}),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/3=" + show(frac(h.r + h.s - 1, 3)) +
                    ", s>=2r+1, L != 0";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r + 1)
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::R1_6, StandardShape::R1S2, 1, 2, false, slotted(e(0), {{0, e(1)}}),
         slotted(e(1), {{1, e(2)}}), {}, v_r1_jordan(1), fil_nonzero({0}),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/3=" + show(frac(h.r + h.s - 1, 3)) + ", L1 != 0";
         },
         [](const FamilyInstance&) { return irr(); },
         {}});

    add({FamilyId::R1_7, StandardShape::R1S3, 1, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(1)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(2)(v, h) && h.s == 2 * h.r - 1;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-2)/3=" + show(frac(h.r + h.s - 2, 3)) + " and s=2r-1";
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {1}), axes(fi.field, {0, 2})});
         },
         {}});

    add({FamilyId::R1_8, StandardShape::R1S3, 1, 2, true,
         projective({{0, e(0)}, {1, e2(1, 2)}}), fixed(e2(1, 2)),
         std::array<std::array<Rat, 3>, 2>{e(0), e2(1, 2)},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(2)(v, h) && h.s <= 2 * h.r - 1;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-2)/3=" + show(frac(h.r + h.s - 2, 3)) + " and s<=2r-1";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r - 1) {
                 Vec w(3, FieldElement::zero(fi.field));
                 w[0] = fi.fil_params[0];
                 w[1] = fi.fil_params[1];
                 Vec z(3, FieldElement::zero(fi.field));
                 z[2] = FieldElement::one(fi.field);
                 return report(K::NonSplitReducible, {span_of(fi.field, {w, z})});
             }
             return irr();
         },
         {}});

    add({FamilyId::R1_9, StandardShape::R1S4, 1, 1, false, slotted(e(1), {{0, e(2)}}),
         fixed(e(0)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(2)(v, h) && h.s <= 2 * h.r - 1;
         },
         fil_nonzero({0}),
         [](HodgeType h) {
             return "v(lambda)=(r+s-2)/3=" + show(frac(h.r + h.s - 2, 3)) +
                    ", s<=2r-1, L != 0";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r - 1)
                 return report(K::NonSplitReducible, {axes(fi.field, {1, 2})});
             return irr();
         },
         {}});

    add({FamilyId::R1_10, StandardShape::R1S4, 1, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(1)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(2)(v, h) && h.s >= 2 * h.r - 1;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-2)/3=" + show(frac(h.r + h.s - 2, 3)) + " and s>=2r-1";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r - 1)
                 return report(K::NonSplitReducible, {axes(fi.field, {1})});
             return irr();
         },
         {}});

    add({FamilyId::R1_11, StandardShape::R1S4, 1, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(2)), {},
         [v_r1_jordan](const Vals& v, HodgeType h) {
             return v_r1_jordan(2)(v, h) && h.s >= 2 * h.r + 2;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-2)/3=" + show(frac(h.r + h.s - 2, 3)) + " and s>=2r+2";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r + 2)
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::R1_12, StandardShape::R1S4, 1, 2, false, slotted(e(0), {{0, e(2)}}),
         slotted(e(1), {{1, e(2)}}), {}, v_r1_jordan(2), fil_nonzero({1}),
         [](HodgeType h) {
             return "v(lambda)=(r+s-2)/3=" + show(frac(h.r + h.s - 2, 3)) + ", L2 != 0";
         },
         [](const FamilyInstance&) { return irr(); },
         {}});

    // rank 1, phi = diag(p l, l2, l)

    auto r1s5_sum = [](const Vals& v, HodgeType h) {
        return 2 * v[0] + v[1] == Rat(h.r + h.s - 1);
    };

    add({FamilyId::R1_13, StandardShape::R1S5, 2, 1, false, fixed(e(1)),
         slotted(e(0), {{0, e(2)}}), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r - 1, 2) && v[1] == Rat(h.s);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r-1)/2=" + show(frac(h.r - 1, 2)) +
                    " and v(lambda2)=s=" + show(h.s);
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             std::vector<Subspace> subs = {axes(sp, {1}), axes(sp, {0, 2})};
             if (fi.hodge.r == 1) {
                 subs.push_back(axes(sp, {2}));
                 subs.push_back(axes(sp, {1, 2}));
             }
             return report(K::Decomposable, subs);
         },
         {}});

    add({FamilyId::R1_14, StandardShape::R1S5, 2, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(2)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.r + h.s - 1, 2) && v[1] == 0;
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-1)/2=" + show(frac(h.r + h.s - 1, 2)) +
                    " and v(lambda2)=0";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             std::vector<Subspace> subs = {axes(sp, {1}), axes(sp, {0, 2})};
             if (fi.hodge.s == fi.hodge.r + 1) {
                 subs.push_back(axes(sp, {2}));
                 subs.push_back(axes(sp, {1, 2}));
             }
             return report(K::Decomposable, subs);
         },
         {}});

    add({FamilyId::R1_15, StandardShape::R1S5, 2, 1, false, fixed(e2(1, 2)),
         slotted(e(0), {{0, e(2)}}), {},
         [r1s5_sum](const Vals& v, HodgeType h) {
             return frac(h.r - 1, 2) <= v[0] && v[0] <= Rat(h.r - 1) && r1s5_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "(r-1)/2=" + show(frac(h.r - 1, 2)) + " <= v(lambda) <= r-1=" +
                    show(h.r - 1) + ", 2v(lambda)+v(lambda2)=r+s-1";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             Rat v = eigen_valuations(fi)[0];
             if (fi.hodge.r == 1)
                 return report(K::NonSplitReducible,
                               {axes(sp, {2}), axes(sp, {1, 2}), axes(sp, {0, 2})});
             if (v == frac(fi.hodge.r - 1, 2))
                 return report(K::NonSplitReducible, {axes(sp, {0, 2})});
             if (v == Rat(fi.hodge.r - 1))
                 return report(K::NonSplitReducible, {axes(sp, {1, 2})});
             return irr();
         },
         {}});

    add({FamilyId::R1_16, StandardShape::R1S5, 2, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e(1)), {},
         [](const Vals& v, HodgeType h) {
             return v[0] == frac(h.s - 1, 2) && v[1] == Rat(h.r);
         },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(s-1)/2=" + show(frac(h.s - 1, 2)) +
                    " and v(lambda2)=r=" + show(h.r);
         },
         [](const FamilyInstance& fi) {
             return report(K::Decomposable, {axes(fi.field, {1}), axes(fi.field, {0, 2})});
         },
         {}});

    add({FamilyId::R1_17, StandardShape::R1S5, 2, 1, false, slotted(e(0), {{0, e(2)}}),
         fixed(e2(1, 2)), {},
         [r1s5_sum](const Vals& v, HodgeType h) {
             return frac(h.s - 1, 2) <= v[0] && v[0] <= frac(h.r + h.s - 1, 2) &&
                    r1s5_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "(s-1)/2=" + show(frac(h.s - 1, 2)) + " <= v(lambda) <= (r+s-1)/2=" +
                    show(frac(h.r + h.s - 1, 2)) + ", 2v(lambda)+v(lambda2)=r+s-1";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.s - 1, 2))
                 return report(K::NonSplitReducible, {axes(sp, {0, 2})});
             if (v == frac(fi.hodge.r + fi.hodge.s - 1, 2)) {
                 if (fi.hodge.s == fi.hodge.r + 1)
                     return report(K::NonSplitReducible, {axes(sp, {1}), axes(sp, {1, 2})});
                 return report(K::NonSplitReducible, {axes(sp, {1})});
             }
             return irr();
         },
         {}});

    add({FamilyId::R1_18, StandardShape::R1S5, 2, 1, false,
         slotted(e2(0, 1), {{0, e(2)}}), fixed(e(1)), {},
         [r1s5_sum](const Vals& v, HodgeType h) {
             return frac(h.r - 1, 2) <= v[0] && v[0] <= frac(h.s - 1, 2) && r1s5_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "(r-1)/2=" + show(frac(h.r - 1, 2)) + " <= v(lambda) <= (s-1)/2=" +
                    show(frac(h.s - 1, 2)) + ", 2v(lambda)+v(lambda2)=r+s-1";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.r - 1, 2)) {
                 if (fi.hodge.r == 1)
                     return report(K::NonSplitReducible, {axes(sp, {2}), axes(sp, {0, 2})});
                 return report(K::NonSplitReducible, {axes(sp, {0, 2})});
             }
             if (v == frac(fi.hodge.s - 1, 2))
                 return report(K::NonSplitReducible, {axes(sp, {1})});
             return irr();
         },
         {}});

    add({FamilyId::R1_19, StandardShape::R1S5, 2, 1, false,
         slotted(e2(0, 1), {{0, e(2)}}), fixed(e(2)), {},
         [r1s5_sum](const Vals& v, HodgeType h) {
             return Rat(h.r) <= v[0] && v[0] <= frac(h.r + h.s - 1, 2) && r1s5_sum(v, h);
         },
         fil_any(),
         [](HodgeType h) {
             return "r=" + show(h.r) + " <= v(lambda) <= (r+s-1)/2=" +
                    show(frac(h.r + h.s - 1, 2)) + ", 2v(lambda)+v(lambda2)=r+s-1";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             Rat v = eigen_valuations(fi)[0];
             if (fi.hodge.s == fi.hodge.r + 1)
                 return report(K::NonSplitReducible,
                               {axes(sp, {1}), axes(sp, {2}), axes(sp, {1, 2})});
             if (v == Rat(fi.hodge.r))
                 return report(K::NonSplitReducible, {axes(sp, {2})});
             if (v == frac(fi.hodge.r + fi.hodge.s - 1, 2))
                 return report(K::NonSplitReducible, {axes(sp, {1})});
             return irr();
         },
         {}});

    add({FamilyId::R1_20, StandardShape::R1S5, 2, 2, false,
         slotted(e2(0, 1), {{0, e(2)}}), slotted(e(1), {{1, e(2)}}), {},
         [r1s5_sum](const Vals& v, HodgeType h) {
             return frac(h.r - 1, 2) <= v[0] && v[0] <= frac(h.r + h.s - 1, 2) &&
                    r1s5_sum(v, h);
         },
         fil_nonzero({1}),
         [](HodgeType h) {
             return "(r-1)/2=" + show(frac(h.r - 1, 2)) + " <= v(lambda) <= (r+s-1)/2=" +
                    show(frac(h.r + h.s - 1, 2)) + ", 2v(lambda)+v(lambda2)=r+s-1, L2 != 0";
         },
         [](const FamilyInstance& fi) {
             const auto& sp = fi.field;
             Rat v = eigen_valuations(fi)[0];
             if (v == frac(fi.hodge.r - 1, 2)) {
                 if (fi.hodge.r == 1)
                     return report(K::NonSplitReducible, {axes(sp, {2}), axes(sp, {0, 2})});
                 return report(K::NonSplitReducible, {axes(sp, {0, 2})});
             }
             if (v == frac(fi.hodge.r + fi.hodge.s - 1, 2)) {
                 if (fi.hodge.s == fi.hodge.r + 1)
                     return report(K::NonSplitReducible, {axes(sp, {1}), axes(sp, {1, 2})});
                 return report(K::NonSplitReducible, {axes(sp, {1})});
             }
             return irr();
         },
         {}});

    // ----- rank N = 2 -----------------------------------------------------------

    auto v_r2 = [](const Vals& v, HodgeType h) { return v[0] == frac(h.r + h.s - 3, 3); };

    add({FamilyId::R2_1, StandardShape::R2, 1, 2, false, slotted(e(1), {{0, e(2)}}),
         slotted(e(0), {{1, e(2)}}), {},
         [v_r2](const Vals& v, HodgeType h) { return v_r2(v, h) && h.s <= 2 * h.r - 3; },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-3)/3=" + show(frac(h.r + h.s - 3, 3)) + " and s<=2r-3";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r - 3)
                 return report(K::NonSplitReducible, {axes(fi.field, {1, 2})});
             return irr();
         },
         {}});

    add({FamilyId::R2_2, StandardShape::R2, 1, 2, false,
         slotted(e(0), {{0, e(1)}, {1, e(2)}}), fixed(e(2)), {},
         [v_r2](const Vals& v, HodgeType h) { return v_r2(v, h) && h.s >= 2 * h.r + 3; },
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-3)/3=" + show(frac(h.r + h.s - 3, 3)) + " and s>=2r+3";
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2 * fi.hodge.r + 3)
                 return report(K::NonSplitReducible, {axes(fi.field, {2})});
             return irr();
         },
         {}});

    add({FamilyId::R2_3, StandardShape::R2, 1, 3, false,
         slotted(e(0), {{0, e(1)}, {1, e(2)}}), slotted(e(1), {{2, e(2)}}), {}, v_r2,
         fil_any(),
         [](HodgeType h) {
             return "v(lambda)=(r+s-3)/3=" + show(frac(h.r + h.s - 3, 3));
         },
         [](const FamilyInstance& fi) {
             if (fi.hodge.s == 2)
                 return report(K::NonSplitReducible,
                               {axes(fi.field, {2}), axes(fi.field, {1, 2})});
             return irr();
         },
         {}});

    if ((int)cat.size() != kFamilyCount) throw InternalError("catalog size mismatch");
    for (int i = 0; i < kFamilyCount; ++i)
        if ((int)cat[i].id != i) throw InternalError("catalog order mismatch");
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(FamilyId id) { return catalog()[(int)id]; }

std::optional<std::string> instance_constraint_violation(const FamilyInstance& fi) {
    const CatalogEntry& e = catalog_entry(fi.id);
    if ((int)fi.eigen_params.size() != e.n_eigen)
        return "expected " + std::to_string(e.n_eigen) + " eigenvalue parameter(s)";
    if ((int)fi.fil_params.size() != e.n_fil)
        return "expected " + std::to_string(e.n_fil) + " filtration parameter(s)";
    if (fi.hodge.r <= 0 || fi.hodge.r >= fi.hodge.s) return "Hodge type requires 0<r<s";
    for (const auto& l : fi.eigen_params)
        if (l.is_zero()) return "eigenvalue parameter is zero";
    if (!shape_eigen_constraints_ok(e.shape, fi.eigen_params, fi.field))
        return "eigenvalue parameters violate the shape's genericity constraints";
    if (!e.vals_ok(eigen_valuations(fi), fi.hodge))
        return "eigenvalue valuations violate the family constraint: " +
               e.constraint_text(fi.hodge);
    if (!e.fil_ok(fi.fil_params)) return "filtration parameters outside the family domain";
    if (e.projective_fil) {
        bool all_zero = true;
        for (const auto& f : fi.fil_params)
            if (!f.is_zero()) all_zero = false;
        if (all_zero) return "projective filtration parameter must be nonzero";
    }
    return std::nullopt;
}

}  // namespace phinmod
