#include "phinmod/certify.hpp"

namespace phinmod {

Matrix random_invertible(const FieldSpec& spec, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Matrix q(3, 3, spec);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                q.at(i, j) = FieldElement::from_rational(spec, rng.small_rational());
        if (!q.determinant().is_zero()) return q;
    }
    throw InternalError("failed to draw an invertible matrix");
}

FieldElement random_with_valuation(const FieldSpec& spec, const Rat& v, Rng& rng) {
    Rat scaled = v * spec.ramification;
    scaled.canonicalize();
    if (scaled.get_den() != 1 || scaled < 0)
        throw CatalogError("valuation " + v.get_str() + " is not on the (1/e)Z grid");
    long k = scaled.get_num().get_si();
    // numerator and denominator prime to p
    auto unit_int = [&]() {
        for (;;) {
            long n = rng.range(1, 9);
            if (n % spec.prime != 0) return n;
        }
    };
    long num = unit_int(), den = unit_int();
    if (rng.below(2)) num = -num;
    Rat c(num, den);
    c.canonicalize();
    return FieldElement::unit_u_power(spec, c, k);
}

std::optional<FamilyInstance> random_instance(FamilyId id, HodgeType h,
                                              const FieldSpec& spec, Rng& rng) {
    auto tuples = valid_eigen_valuations(id, h, spec);
    if (tuples.empty()) return std::nullopt;
    const CatalogEntry& e = catalog_entry(id);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const auto& vals = tuples[rng.below(tuples.size())];
        FamilyInstance fi;
        fi.id = id;
        fi.field = spec;
        fi.hodge = h;
        for (const auto& v : vals)
            fi.eigen_params.push_back(random_with_valuation(spec, v, rng));
        for (int i = 0; i < e.n_fil; ++i)
            fi.fil_params.push_back(
                FieldElement::from_rational(spec, rng.small_rational()));
        if (!instance_constraint_violation(fi)) return fi;
        fi.eigen_params.clear();
        fi.fil_params.clear();
    }
    throw InternalError("failed to draw a valid instance of " + family_name(id));
}

FamilyInstance random_any_instance(HodgeType h, const FieldSpec& spec, Rng& rng,
                                   std::optional<int> n_rank) {
    std::vector<FamilyId> ok;
    for (FamilyId id : all_families()) {
        if (n_rank && family_monodromy_rank(id) != *n_rank) continue;
        if (!valid_eigen_valuations(id, h, spec).empty()) ok.push_back(id);
    }
    if (ok.empty()) throw CatalogError("no family is satisfiable at this Hodge type");
    auto fi = random_instance(ok[rng.below(ok.size())], h, spec, rng);
    return *fi;
}

PhiNModule transport_module(const PhiNModule& m, const Matrix& Q) {
    PhiNModule out = m;
    Matrix qinv = Q.inverse();
    out.phi = Q * m.phi * qinv;
    out.N = Q * m.N * qinv;
    out.fil.L1 = m.fil.L1.image(Q);
    out.fil.L2 = m.fil.L2.image(Q);
    if (m.jordan) {
        JordanHint hint = *m.jordan;
        if (hint.change_of_basis) hint.change_of_basis = *hint.change_of_basis * qinv;
        out.jordan = hint;
    }
    return out;
}

namespace {

StandardShape random_shape(int rank, Rng& rng) {
    switch (rank) {
        case 0: return kAllShapes[rng.below(6)];
        case 1: return kAllShapes[6 + rng.below(5)];
        default: return StandardShape::R2;
    }
}

int det_p_offset(StandardShape s) {
    switch (s) {
        case StandardShape::R1S1:
        case StandardShape::R1S2:
        case StandardShape::R1S5: return 1;
        case StandardShape::R1S3:
        case StandardShape::R1S4: return 2;
        case StandardShape::R2: return 3;
        default: return 0;
    }
}

Vec random_small_vec(const FieldSpec& spec, Rng& rng) {
    Vec v(3, FieldElement::zero(spec));
    do {
        for (int i = 0; i < 3; ++i)
            v[i] = FieldElement::from_rational(spec, rng.small_rational());
    } while (vec_is_zero(v));
    return v;
}

}  // namespace

PhiNModule random_module(HodgeType h, const FieldSpec& spec, Rng& rng) {
    int rank = (int)rng.below(3);
    StandardShape shape = random_shape(rank, rng);
    int n_eigen = shape_eigen_count(shape);
    long e = spec.ramification;
    long hi = e * (h.r + h.s);
    bool pin = rng.below(2) == 0;  // half the draws satisfy v(det phi) = r+s

    std::vector<FieldElement> eigen;
    for (int attempt = 0; attempt < 128 && eigen.empty(); ++attempt) {
        std::vector<Rat> vals;
        if (pin) {
            Rat target(h.r + h.s - det_p_offset(shape));
            if (n_eigen == 1) {
                Rat v = target / 3;
                v.canonicalize();
                Rat scaled = v * e;
                scaled.canonicalize();
                if (scaled.get_den() != 1 || v < 0) {
                    pin = false;
                    continue;
                }
                vals = {v};
            } else if (n_eigen == 2) {
                Rat v(rng.range(0, hi), e);
                v.canonicalize();
                Rat w = target - 2 * v;
                if (w < 0 || w > Rat(h.r + h.s)) continue;
                vals = {v, w};
            } else {
                Rat v1(rng.range(0, hi), e), v2(rng.range(0, hi), e);
                v1.canonicalize();
                v2.canonicalize();
                Rat v3 = target - v1 - v2;
                if (v3 < 0 || v3 > Rat(h.r + h.s)) continue;
                vals = {v1, v2, v3};
            }
        } else {
            for (int i = 0; i < n_eigen; ++i) {
                Rat v(rng.range(0, hi), e);
                v.canonicalize();
                vals.push_back(v);
            }
        }
        std::vector<FieldElement> cand;
        for (const auto& v : vals) cand.push_back(random_with_valuation(spec, v, rng));
        if (shape_eigen_constraints_ok(shape, cand, spec)) eigen = std::move(cand);
    }
    if (eigen.empty()) throw InternalError("eigenvalue sampling failed");

    PhiNModule std_mod;
    std_mod.field = spec;
    std_mod.hodge = h;
    std_mod.phi = standard_phi(shape, eigen, spec);
    std_mod.N = standard_N(rank, spec);
    for (int attempt = 0;; ++attempt) {
        Vec v1 = random_small_vec(spec, rng);
        Vec v2 = random_small_vec(spec, rng);
        Subspace L1 = Subspace::span(3, spec, {v1});
        Subspace L2 = Subspace::span(3, spec, {v1, v2});
        if (L2.dim() == 2) {
            std_mod.fil = {L1, L2};
            break;
        }
        if (attempt > 64) throw InternalError("filtration sampling failed");
    }
    if (rank == 0) {
        JordanHint hint;
        for (int i = 0; i < 3; ++i) hint.eigenvalues.push_back(std_mod.phi.at(i, i));
        hint.change_of_basis = Matrix::identity(3, spec);
        std_mod.jordan = hint;
    }
    return transport_module(std_mod, random_invertible(spec, rng));
}

// --- the campaign -----------------------------------------------------------

namespace {

struct Campaign {
    const CertifyConfig& cfg;
    CertifyReport report;

    void fail(CheckOutcome& chk, const Json& counterexample) {
        chk.pass = false;
        ++chk.failed;
        if (report.counterexample.is_null()) report.counterexample = counterexample;
        report.pass = false;
    }

    void check_admissibility_oracle() {
        CheckOutcome chk{"admissibility-oracle"};
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng(Rng::derive(cfg.seed, (std::uint64_t)i));
            PhiNModule m = random_module(cfg.hodge, cfg.field, rng);
            ++chk.ran;
            Admissibility adm;
            try {
                adm = is_admissible(m);
            } catch (const std::exception& ex) {
                fail(chk, Json{{"check", chk.name},
                               {"error", ex.what()},
                               {"module", to_json(m)}});
                continue;
            }
            if (adm.admissible) {
                Matrix back = adm.norm.transition.inverse();
                const auto& families = adm.families;
                bool bad = false;
                for (int k = 0; k < cfg.oracle_samples && !bad; ++k) {
                    const auto& fam = families[rng.below(families.size())];
                    Subspace u_std = fam.random_member(rng);
                    Subspace u = u_std.image(back);
                    Rat th = hodge_invariant(u, m.fil, m.hodge);
                    Valuation tn = newton_invariant(u, m.phi);
                    if (Valuation(th) > tn) bad = true;
                }
                if (bad)
                    fail(chk, Json{{"check", chk.name},
                                   {"reason", "sampled subspace violates t_H <= t_N"},
                                   {"module", to_json(m)}});
            } else {
                const auto& w = *adm.witness;
                bool ok;
                if (w.det_mismatch) {
                    ok = Valuation(w.t_H_D) != m.phi.determinant().valuation();
                } else {
                    Rat th = hodge_invariant(w.member_input, m.fil, m.hodge);
                    Valuation tn = newton_invariant(w.member_input, m.phi);
                    ok = Valuation(th) > tn;
                }
                if (!ok)
                    fail(chk, Json{{"check", chk.name},
                                   {"reason", "inadmissibility witness does not check out"},
                                   {"module", to_json(m)}});
            }
        }
        report.checks.push_back(chk);
    }

    void check_roundtrips() {
        CheckOutcome chk{"classify-roundtrip"};
        int n = std::max(1, cfg.samples / 4);
        for (int i = 0; i < n; ++i) {
            Rng rng(Rng::derive(cfg.seed, (1ULL << 32) + (std::uint64_t)i));
            FamilyInstance fi = random_any_instance(cfg.hodge, cfg.field, rng);
            ++chk.ran;
            try {
                PhiNModule rep = instantiate(fi);
                PhiNModule moved = transport_module(rep, random_invertible(cfg.field, rng));
                ClassifyResult res = classify(moved);
                if (!param_equivalent(fi, res.fi))
                    fail(chk, Json{{"check", chk.name},
                                   {"reason", "round trip produced a non-equivalent instance"},
                                   {"expected", to_json(fi)},
                                   {"got", to_json(res.fi)}});
            } catch (const std::exception& ex) {
                fail(chk, Json{{"check", chk.name},
                               {"error", ex.what()},
                               {"instance", to_json(fi)}});
            }
        }
        report.checks.push_back(chk);
    }

    void check_commutants() {
        CheckOutcome chk{"commutant-shapes"};
        for (StandardShape s : kAllShapes) {
            ++chk.ran;
            auto res = commutant_shape_check(s);
            if (!res.ok)
                fail(chk, Json{{"check", chk.name},
                               {"shape", shape_name(s)},
                               {"mismatch", res.mismatch}});
        }
        report.checks.push_back(chk);
    }

    void check_catalog() {
        CheckOutcome chk{"catalog-soundness"};
        for (FamilyId id : all_families()) {
            Rng rng(Rng::derive(cfg.seed, (2ULL << 32) + (std::uint64_t)id));
            auto fi = random_instance(id, cfg.hodge, cfg.field, rng);
            if (!fi) continue;  // family unsatisfiable at this Hodge type
            ++chk.ran;
            try {
                PhiNModule rep = instantiate(*fi);
                bool admissible = is_admissible(rep).admissible;
                bool expect_admissible = !(cfg.sabotage && *cfg.sabotage == id);
                if (admissible != expect_admissible) {
                    fail(chk, Json{{"check", chk.name},
                                   {"family", family_name(id)},
                                   {"reason", admissible
                                                  ? "representative unexpectedly admissible"
                                                  : "representative not admissible"},
                                   {"module", to_json(rep)}});
                    continue;
                }
                ClassifyResult res = classify(rep, /*check_unique=*/true);
                // valuation ties can land in a cross-family overlap; equivalence decides
                if (!param_equivalent(*fi, res.fi))
                    fail(chk, Json{{"check", chk.name},
                                   {"family", family_name(id)},
                                   {"reason", "representative classified to " +
                                                  family_name(res.fi.id)},
                                   {"module", to_json(rep)}});
            } catch (const std::exception& ex) {
                fail(chk, Json{{"check", chk.name},
                               {"family", family_name(id)},
                               {"error", ex.what()}});
            }
        }
        report.checks.push_back(chk);
    }
};

}  // namespace

Json CertifyReport::to_json_doc(const CertifyConfig& cfg) const {
    Json j;
    j["command"] = "certify";
    j["config"] = Json{{"r", cfg.hodge.r},
                       {"s", cfg.hodge.s},
                       {"samples", cfg.samples},
                       {"seed", cfg.seed},
                       {"field", Json{{"prime", cfg.field.prime},
                                      {"ramification", cfg.field.ramification}}}};
    j["verdict"] = pass ? "pass" : "fail";
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back(Json{{"name", c.name},
                           {"pass", c.pass},
                           {"ran", c.ran},
                           {"failed", c.failed}});
    j["checks"] = arr;
    j["counterexample"] = counterexample;
    return j;
}

CertifyReport certify(const CertifyConfig& cfg) {
    Campaign campaign{cfg, {}};
    campaign.report.counterexample = Json();
    campaign.check_admissibility_oracle();
    campaign.check_roundtrips();
    campaign.check_commutants();
    campaign.check_catalog();
    return campaign.report;
}

}  // namespace phinmod
