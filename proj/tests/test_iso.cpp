#include <doctest.h>

#include "phinmod/certify.hpp"

using namespace phinmod;

namespace {

const FieldSpec spec = make_field(2, 6);
FieldElement fe(Rat q) { return FieldElement::from_rational(spec, q); }

FamilyInstance inst(FamilyId id, HodgeType h, std::vector<FieldElement> eigen,
                    std::vector<FieldElement> fil) {
    return {id, spec, h, std::move(eigen), std::move(fil)};
}

}  // namespace

TEST_CASE("commutant_shape_check passes for all twelve shapes") {
    const int expected_dims[12] = {9, 5, 3, 5, 3, 3, 3, 2, 3, 2, 2, 1};
    for (int i = 0; i < 12; ++i) {
        auto res = commutant_shape_check(kAllShapes[i]);
        INFO(shape_name(kAllShapes[i]), ": ", res.mismatch);
        CHECK(res.ok);
        CHECK(res.dimension == expected_dims[i]);
    }
}

TEST_CASE("distinct-eigenvalue permutation pairings") {
    // P diag(l1,l2,l3) = diag(l_sigma) P forces the permutation pattern.
    FieldSpec q = make_field(2, 1);
    auto f = [&](Rat x) { return FieldElement::from_rational(q, x); };
    std::vector<FieldElement> ls = {f(2), f(3), f(5)};
    Matrix A = standard_phi(StandardShape::C6, ls, q);
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (auto& p : perms) {
        Matrix B = standard_phi(StandardShape::C6, {ls[p[0]], ls[p[1]], ls[p[2]]}, q);
        auto basis = intertwiner_space({{A, B}});
        CHECK(basis.size() == 3);
        for (const auto& P : basis)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    // nonzero entries only where the permutation allows: P e_j ~ e_{pos},
                    // i.e. column j supported on the row with l_{p[row]} = l_j.
                    if (!P.at(i, j).is_zero()) CHECK(p[i] == j);
    }
}

TEST_CASE("a module is isomorphic to itself") {
    Rng rng(64);
    FamilyInstance fi = random_any_instance({1, 2}, spec, rng);
    PhiNModule m = instantiate(fi);
    IsoResult res = are_isomorphic(m, m);
    CHECK(res.isomorphic);
    REQUIRE(res.witness);
    CHECK(*res.witness == Matrix::identity(3, spec));
}

TEST_CASE("cross-family isomorphism Cris17 ~ Cris19") {
    HodgeType h{1, 2};
    std::vector<FieldElement> ls = {fe(2), fe(6), fe(10)};  // valuations all 1
    PhiNModule a = instantiate(inst(FamilyId::Cris17, h, ls, {}));
    PhiNModule b = instantiate(inst(FamilyId::Cris19, h, {fe(10), fe(6), fe(2)}, {}));
    IsoResult res = are_isomorphic(a, b);
    CHECK(res.isomorphic);
    // sanity: the wrong eigenvalue matching is not isomorphic
    PhiNModule c = instantiate(inst(FamilyId::Cris19, h, {fe(6), fe(10), fe(2)}, {}));
    CHECK(!are_isomorphic(a, c).isomorphic);
    CHECK(are_isomorphic(b, a).isomorphic);  // symmetry
}

TEST_CASE("R2_1 instances with different parameters are not isomorphic") {
    HodgeType h2{4, 5};  // s = 5 <= 2r - 3 = 5
    auto lam = FieldElement::unit_u_power(spec, 1, 12);  // v = 2 = (r+s-3)/3
    PhiNModule a = instantiate(inst(FamilyId::R2_1, h2, {lam}, {fe(1), fe(2)}));
    PhiNModule b = instantiate(inst(FamilyId::R2_1, h2, {lam}, {fe(1), fe(3)}));
    CHECK(!are_isomorphic(a, b).isomorphic);
    CHECK(are_isomorphic(a, a).isomorphic);
}

TEST_CASE("iso agrees with param_equivalent on random pairs") {
    Rng rng(4096);
    int agreements = 0;
    for (int i = 0; i < 25; ++i) {
        FamilyInstance x = random_any_instance({1, 2}, spec, rng);
        FamilyInstance y;
        if (rng.below(2) == 0) {
            y = x;  // same instance
        } else {
            y = random_any_instance({1, 2}, spec, rng);
        }
        bool expected = param_equivalent(x, y);
        bool got = are_isomorphic(instantiate(x), instantiate(y)).isomorphic;
        CHECK(expected == got);
        ++agreements;
    }
    CHECK(agreements == 25);
}

TEST_CASE("are_isomorphic is symmetric") {
    Rng rng(777);
    for (int i = 0; i < 8; ++i) {
        FamilyInstance x = random_any_instance({1, 2}, spec, rng);
        FamilyInstance y = rng.below(2) ? random_any_instance({1, 2}, spec, rng)
                                        : *random_instance(x.id, {1, 2}, spec, rng);
        PhiNModule a = instantiate(x), b = instantiate(y);
        CHECK(are_isomorphic(a, b).isomorphic == are_isomorphic(b, a).isomorphic);
    }
}

TEST_CASE("iso witness satisfies its four defining equations") {
    Rng rng(11);
    FamilyInstance fi = random_any_instance({1, 3}, spec, rng);
    PhiNModule a = instantiate(fi);
    PhiNModule b = transport_module(a, random_invertible(spec, rng));
    IsoResult res = are_isomorphic(a, b);
    REQUIRE(res.isomorphic);
    const Matrix& P = *res.witness;
    CHECK(P * a.phi == b.phi * P);
    CHECK(P * a.N == b.N * P);
    CHECK(a.fil.L1.image(P) == b.fil.L1);
    CHECK(a.fil.L2.image(P) == b.fil.L2);
}
