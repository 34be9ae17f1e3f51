#include <doctest.h>

#include "phinmod/rng.hpp"
#include "phinmod/shapes.hpp"

using namespace phinmod;

namespace {

const FieldSpec spec = make_field(2, 6);

Vec rv(std::vector<Rat> entries) {
    Vec v;
    for (auto& q : entries) v.push_back(FieldElement::from_rational(spec, q));
    return v;
}

Subspace sp(std::vector<Vec> vs) { return Subspace::span(3, spec, vs); }

Subspace axes3(std::initializer_list<int> is) {
    std::vector<Vec> vs;
    for (int i : is) {
        Vec v(3, FieldElement::zero(spec));
        v[i] = FieldElement::one(spec);
        vs.push_back(v);
    }
    return sp(vs);
}

Vec random_vec(Rng& rng) {
    return rv({rng.small_rational(), rng.small_rational(), rng.small_rational()});
}

}  // namespace

TEST_CASE("echelon bases are canonical") {
    Subspace a = sp({rv({1, 0, 0}), rv({2, 0, 0})});
    CHECK(a.dim() == 1);
    CHECK(a == axes3({0}));

    Subspace b = sp({rv({0, 1, 0}), rv({0, 1, 1})});
    CHECK(b == axes3({1, 2}));

    // Gaussian-elimination oracle: span{(1,1,0),(1,-1,0),(2,0,0)} = E(e1,e2)
    Subspace c = sp({rv({1, 1, 0}), rv({1, -1, 0}), rv({2, 0, 0})});
    CHECK(c == axes3({0, 1}));

    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        std::vector<Vec> vs = {random_vec(rng), random_vec(rng)};
        Subspace s = sp(vs);
        CHECK(Subspace::span(3, spec, s.basis()) == s);  // idempotent
        // equality of subspaces <=> identical canonical bases
        std::vector<Vec> shuffled = {vec_add(vs[0], vs[1]), vs[1]};
        CHECK(sp(shuffled) == s);
    }
}

TEST_CASE("lattice operations") {
    CHECK(axes3({0, 1}).intersect(axes3({1, 2})) == axes3({1}));
    CHECK(axes3({1, 2}).contains(axes3({1})));
    // solve-the-joint-system oracle: span{e1+e3, e2} ∩ span{e2, e3} = E e2
    Subspace a = sp({rv({1, 0, 1}), rv({0, 1, 0})});
    CHECK(a.intersect(axes3({1, 2})) == axes3({1}));

    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        Subspace x = sp({random_vec(rng), random_vec(rng)});
        Subspace y = sp({random_vec(rng)});
        CHECK(x.intersect(y).dim() + x.sum(y).dim() == x.dim() + y.dim());
        CHECK(x.sum(y).contains(x));
        CHECK(x.contains(x.intersect(y)));
    }
}

TEST_CASE("determinants") {
    auto lam = FieldElement::unit_u_power(spec, 3, 2);
    Matrix d(3, 3, spec);
    d.at(0, 0) = FieldElement::from_rational(spec, 2);
    d.at(1, 1) = lam;
    d.at(2, 2) = FieldElement::from_rational(spec, Rat(1, 3));
    CHECK(d.determinant() ==
          FieldElement::from_rational(spec, 2) * lam * FieldElement::from_rational(spec, Rat(1, 3)));

    // rank-2 standard phi = diag(p^2 l, p l, l) has det p^3 l^3
    Matrix phi = standard_phi(StandardShape::R2, {lam}, spec);
    CHECK(phi.determinant() ==
          FieldElement::from_rational(spec, 8) * lam * lam * lam);

    Matrix dup(spec, {{1, 2, 3}, {1, 2, 3}, {0, 1, 5}});
    CHECK(dup.determinant().is_zero());

    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Matrix a(3, 3, spec), b(3, 3, spec);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                a.at(r, c) = FieldElement::from_rational(spec, rng.small_rational());
                b.at(r, c) = FieldElement::from_rational(spec, rng.small_rational());
            }
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("operator restriction") {
    auto lam = FieldElement::from_rational(spec, 3);
    auto lam3 = FieldElement::from_rational(spec, 5);
    Matrix phi = standard_phi(StandardShape::C4, {lam, lam3}, spec);  // diag(l,l,l3)
    Matrix res = restrict_operator(phi, axes3({0, 1}));
    CHECK(res.rows() == 2);
    CHECK(res.determinant() == lam * lam);

    // restriction to the full space (canonical basis = standard basis) is phi itself
    CHECK(restrict_operator(phi, Subspace::full(3, spec)) == phi);

    Matrix N = standard_N(1, spec);
    CHECK(restrict_operator(N, axes3({1, 2})).is_zero());

    CHECK_THROWS_AS(restrict_operator(standard_N(2, spec), axes3({0, 1})), LinalgError);
}

TEST_CASE("restriction determinants multiply along invariant flags") {
    // block-triangularize phi over an invariant subspace and compare determinants
    auto lam = FieldElement::from_rational(spec, 3);
    auto lam3 = FieldElement::from_rational(spec, 10);
    for (StandardShape s : {StandardShape::C5, StandardShape::R1S2, StandardShape::R2}) {
        std::vector<FieldElement> eig;
        eig.push_back(lam);
        if (shape_eigen_count(s) == 2) eig.push_back(lam3);
        Matrix phi = standard_phi(s, eig, spec);
        Subspace u = s == StandardShape::C5 ? axes3({0, 1}) : axes3({1, 2});
        // extend u's basis to a full basis; in that basis phi is block triangular
        std::vector<Vec> basis = u.basis();
        for (int i = 0; i < 3 && (int)basis.size() < 3; ++i) {
            Vec cand(3, FieldElement::zero(spec));
            cand[i] = FieldElement::one(spec);
            if (!Subspace::span(3, spec, basis).contains(cand)) basis.push_back(cand);
        }
        Matrix T(3, 3, spec);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) T.at(i, j) = basis[j][i];
        Matrix tri = T.inverse() * phi * T;
        FieldElement quotient_det = tri.at(2, 2);  // 1x1 bottom block
        CHECK(restrict_operator(phi, u).determinant() * quotient_det == phi.determinant());
    }
}

TEST_CASE("intertwiner spaces reproduce the commutant lemmas") {
    auto lam = FieldElement::from_rational(spec, 3);

    // single Jordan block: 3-dimensional, lower triangular with equal diagonal
    Matrix j3 = standard_phi(StandardShape::C3, {lam}, spec);
    auto basis = intertwiner_space({{j3, j3}});
    CHECK(basis.size() == 3);
    for (const auto& P : basis) {
        CHECK(P.at(0, 1).is_zero());
        CHECK(P.at(0, 2).is_zero());
        CHECK(P.at(1, 2).is_zero());
        CHECK(P.at(0, 0) == P.at(1, 1));
        CHECK(P.at(1, 1) == P.at(2, 2));
        CHECK(P.at(1, 0) == P.at(2, 1));
    }

    // phi of the second crystalline case: 5-dimensional commutant
    Matrix j2 = standard_phi(StandardShape::C2, {lam}, spec);
    CHECK(intertwiner_space({{j2, j2}}).size() == 5);

    // the rank-2 standard (phi, N) pair: scalars only
    Matrix phi2 = standard_phi(StandardShape::R2, {lam}, spec);
    Matrix N2 = standard_N(2, spec);
    auto pair_basis = intertwiner_space({{phi2, phi2}, {N2, N2}});
    REQUIRE(pair_basis.size() == 1);
    CHECK(pair_basis[0].at(0, 0) == pair_basis[0].at(1, 1));
    CHECK(pair_basis[0].at(1, 1) == pair_basis[0].at(2, 2));
    CHECK(pair_basis[0].at(1, 0).is_zero());
}
