#include <doctest.h>

#include "phinmod/certify.hpp"
#include "phinmod/invariants.hpp"

using namespace phinmod;

namespace {

const FieldSpec spec = make_field(2, 6);

Vec rv(std::vector<Rat> entries) {
    Vec v;
    for (auto& q : entries) v.push_back(FieldElement::from_rational(spec, q));
    return v;
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

PhiNModule rank2_standard(HodgeType h, const FieldElement& lam, const Subspace& L1,
                          const Subspace& L2) {
    PhiNModule m;
    m.field = spec;
    m.hodge = h;
    m.phi = standard_phi(StandardShape::R2, {lam}, spec);
    m.N = standard_N(2, spec);
    m.fil = {L1, L2};
    return m;
}

}  // namespace

TEST_CASE("validate_module") {
    auto lam = FieldElement::from_rational(spec, 3);
    PhiNModule good = rank2_standard({1, 2}, lam, Subspace::span(3, spec, {rv({1, 0, 0})}),
                                     Subspace::span(3, spec, {rv({1, 0, 0}), rv({0, 1, 0})}));
    CHECK(validate_module(good).empty());

    PhiNModule bad_n = good;
    bad_n.N = Matrix::identity(3, spec);
    auto v1 = validate_module(bad_n);
    bool has_nilpotent = false;
    for (auto& s : v1) has_nilpotent |= s.find("nilpotent") != std::string::npos;
    CHECK(has_nilpotent);

    PhiNModule bad_rel = good;
    bad_rel.phi = Matrix::identity(3, spec).scaled(lam);
    bad_rel.N = standard_N(1, spec);
    auto v2 = validate_module(bad_rel);
    bool has_rel = false;
    for (auto& s : v2) has_rel |= s.find("N phi") != std::string::npos;
    CHECK(has_rel);

    PhiNModule bad_h = good;
    bad_h.hodge = {2, 2};
    auto v3 = validate_module(bad_h);
    bool has_hodge = false;
    for (auto& s : v3) has_hodge |= s.find("0<r<s") != std::string::npos;
    CHECK(has_hodge);
}

TEST_CASE("hodge invariant") {
    Filtration fil{Subspace::span(3, spec, {rv({1, 0, 0})}),
                   Subspace::span(3, spec, {rv({1, 0, 0}), rv({0, 1, 0})})};
    HodgeType h{1, 2};
    CHECK(hodge_invariant(Subspace::full(3, spec), fil, h) == Rat(3));
    CHECK(hodge_invariant(fil.L1, fil, h) == Rat(2));  // s
    // a line inside L2 but not L1
    Subspace line = Subspace::span(3, spec, {rv({1, 1, 0})});
    CHECK(hodge_invariant(line, fil, h) == Rat(1));  // r
    Subspace outside = Subspace::span(3, spec, {rv({0, 0, 1})});
    CHECK(hodge_invariant(outside, fil, h) == Rat(0));
}

TEST_CASE("newton invariant") {
    auto l1 = FieldElement::from_rational(spec, 4);
    auto l2 = FieldElement::from_rational(spec, 2);
    auto l3 = FieldElement::from_rational(spec, 1);
    Matrix phi = standard_phi(StandardShape::C6, {l1, l2, l3}, spec);
    CHECK(newton_invariant(Subspace::full(3, spec), phi) == Valuation(3));

    auto lam = FieldElement::unit_u_power(spec, 1, 3);  // v = 1/2
    Matrix r1 = standard_phi(StandardShape::R1S1, {lam}, spec);
    CHECK(newton_invariant(axes3({2}), r1) == Valuation(Rat(1, 2)));

    Matrix r2 = standard_phi(StandardShape::R2, {lam}, spec);
    CHECK(newton_invariant(axes3({1, 2}), r2) == Valuation(Rat(2)));  // 2v + 1
}

TEST_CASE("invariant families per shape") {
    auto lam = FieldElement::from_rational(spec, 3);
    auto mu = FieldElement::from_rational(spec, 5);

    auto fams3 = invariant_families(standard_phi(StandardShape::C3, {lam}, spec),
                                    standard_N(0, spec), StandardShape::C3);
    REQUIRE(fams3.size() == 2);
    CHECK(fams3[0].isolated());
    CHECK(fams3[0].fixed == axes3({2}));
    CHECK(fams3[1].fixed == axes3({1, 2}));

    auto famsR13 = invariant_families(standard_phi(StandardShape::R1S3, {lam}, spec),
                                      standard_N(1, spec), StandardShape::R1S3);
    REQUIRE(famsR13.size() == 3);
    CHECK(famsR13[0].fixed == axes3({1}));
    CHECK(famsR13[1].fixed == axes3({2}));
    CHECK(!famsR13[2].isolated());
    CHECK(famsR13[2].fixed == axes3({2}));
    CHECK(famsR13[2].ambient == Subspace::full(3, spec));
    CHECK(famsR13[2].dim == 2);

    auto famsR2 = invariant_families(standard_phi(StandardShape::R2, {lam}, spec),
                                     standard_N(2, spec), StandardShape::R2);
    REQUIRE(famsR2.size() == 2);
    CHECK(famsR2[0].fixed == axes3({2}));
    CHECK(famsR2[1].fixed == axes3({1, 2}));

    // Newton constancy on 10 random members per family
    Rng rng(21);
    auto famsC2 = invariant_families(standard_phi(StandardShape::C2, {lam}, spec),
                                     standard_N(0, spec), StandardShape::C2);
    for (const auto& f : famsC2)
        for (int i = 0; i < 10; ++i)
            CHECK(newton_invariant(f.random_member(rng),
                                   standard_phi(StandardShape::C2, {lam}, spec)) == f.newton);
    (void)mu;
}

TEST_CASE("family_max_hodge matches the empirical maximum") {
    auto lam = FieldElement::from_rational(spec, 3);
    HodgeType h{1, 2};
    Rng rng(17);
    for (StandardShape s :
         {StandardShape::C2, StandardShape::C4, StandardShape::R1S3, StandardShape::R1S1}) {
        std::vector<FieldElement> eig = {lam};
        if (shape_eigen_count(s) == 2) eig.push_back(FieldElement::from_rational(spec, 5));
        Matrix phi = standard_phi(s, eig, spec);
        Matrix N = standard_N(shape_monodromy_rank(s), spec);
        for (int trial = 0; trial < 6; ++trial) {
            Vec v1 = rv({rng.small_rational(), rng.small_rational(), rng.small_rational()});
            Vec v2 = rv({rng.small_rational(), rng.small_rational(), rng.small_rational()});
            Subspace L1 = Subspace::span(3, spec, {v1});
            Subspace L2 = Subspace::span(3, spec, {v1, v2});
            if (L1.dim() != 1 || L2.dim() != 2) continue;
            Filtration fil{L1, L2};
            for (const auto& f : invariant_families(phi, N, s)) {
                Rat expect = family_max_hodge(f, fil, h);
                Rat seen(-1);
                for (int i = 0; i < 200; ++i) {
                    Rat th = hodge_invariant(f.random_member(rng), fil, h);
                    if (th > seen) seen = th;
                }
                Rat greedy = hodge_invariant(family_max_member(f, fil, h), fil, h);
                CHECK(greedy == expect);
                CHECK(seen <= expect);
                if (f.isolated()) CHECK(seen == expect);
            }
        }
    }
}

TEST_CASE("spec examples for family_max_hodge") {
    auto lam = FieldElement::from_rational(spec, 3);
    HodgeType h{1, 2};
    Matrix phi = standard_phi(StandardShape::C2, {lam}, spec);
    Matrix N = standard_N(0, spec);
    auto fams = invariant_families(phi, N, StandardShape::C2);
    // f = all lines in E(e2,e3); L2 contains a line of it, L1 does not sit inside
    Filtration fil{Subspace::span(3, spec, {rv({1, 0, 0})}),
                   Subspace::span(3, spec, {rv({1, 0, 0}), rv({0, 1, 1})})};
    CHECK(family_max_hodge(fams[0], fil, h) == Rat(h.r));
    // isolated plane containing L1 has max hodge s
    SubobjectFamily iso_plane{Subspace::span(3, spec, {rv({1, 0, 0}), rv({0, 1, 0})}),
                              Subspace::span(3, spec, {rv({1, 0, 0}), rv({0, 1, 0})}), 2,
                              Valuation(3)};
    CHECK(family_max_hodge(iso_plane, fil, h) == Rat(h.s));
    // family {V=E e3, W=D, k=2}: the member span(e3, v1) contains L1, so the
    // maximum is s even though random members only reach r
    SubobjectFamily thick{axes3({2}), Subspace::full(3, spec), 2, Valuation(3)};
    CHECK(family_max_hodge(thick, fil, h) == Rat(h.s));
    CHECK(hodge_invariant(family_max_member(thick, fil, h), fil, h) == Rat(h.s));
}

TEST_CASE("admissibility decisions") {
    // D_cris^1 representative: r=1, s=2, lambda=2
    PhiNModule d1;
    d1.field = spec;
    d1.hodge = {1, 2};
    d1.phi = standard_phi(StandardShape::C2, {FieldElement::from_rational(spec, 2)}, spec);
    d1.N = standard_N(0, spec);
    d1.fil = {Subspace::span(3, spec, {rv({1, 0, 0})}),
              Subspace::span(3, spec, {rv({1, 0, 0}), rv({0, 0, 1})})};
    CHECK(is_admissible(d1).admissible);

    // phi = lambda * I, N = 0: never admissible; witness involves L1
    PhiNModule scal;
    scal.field = spec;
    scal.hodge = {1, 2};
    scal.phi = Matrix::identity(3, spec).scaled(FieldElement::from_rational(spec, 2));
    scal.N = Matrix::zero(3, 3, spec);
    scal.fil = d1.fil;
    Admissibility adm = is_admissible(scal);
    CHECK(!adm.admissible);
    REQUIRE(adm.witness);
    CHECK(!adm.witness->det_mismatch);
    CHECK(adm.witness->member_hodge == Rat(2));  // s > v(lambda) = 1
    CHECK(adm.witness->family.newton == Valuation(1));

    // rank-2 pattern of R2_1 at (1,2): s <= 2r-3 fails
    PhiNModule r2;
    r2.field = spec;
    r2.hodge = {1, 2};
    r2.phi = standard_phi(StandardShape::R2, {FieldElement::from_rational(spec, 1)}, spec);
    r2.N = standard_N(2, spec);
    r2.fil = {Subspace::span(3, spec, {rv({0, 1, 0})}),
              Subspace::span(3, spec, {rv({0, 1, 0}), rv({1, 0, 0})})};
    Admissibility adm2 = is_admissible(r2);
    CHECK(!adm2.admissible);
    REQUIRE(adm2.witness);
    CHECK(adm2.witness->family.fixed == axes3({1, 2}));
}

TEST_CASE("admissibility agrees with sampled members") {
    Rng rng(4242);
    int admissible_seen = 0, inadmissible_seen = 0;
    for (int i = 0; i < 60; ++i) {
        PhiNModule m = random_module({1, 2}, spec, rng);
        Admissibility adm = is_admissible(m);
        if (adm.admissible) {
            ++admissible_seen;
            Matrix back = adm.norm.transition.inverse();
            auto fams = invariant_families(adm.norm.phi_std, adm.norm.N_std, adm.norm.shape);
            for (int k = 0; k < 200; ++k) {
                const auto& f = fams[rng.below(fams.size())];
                Subspace u = f.random_member(rng).image(back);
                CHECK(Valuation(hodge_invariant(u, m.fil, m.hodge)) <=
                      newton_invariant(u, m.phi));
            }
        } else if (!adm.witness->det_mismatch) {
            ++inadmissible_seen;
            const auto& w = *adm.witness;
            CHECK(Valuation(hodge_invariant(w.member_input, m.fil, m.hodge)) >
                  newton_invariant(w.member_input, m.phi));
        }
    }
    CHECK(admissible_seen > 0);
    CHECK(inadmissible_seen > 0);
}
