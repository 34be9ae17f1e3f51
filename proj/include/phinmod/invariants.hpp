// Hodge and Newton invariants, invariant-subspace families, admissibility.
#pragma once

#include "phinmod/normalize.hpp"
#include "phinmod/rng.hpp"

namespace phinmod {

/// t_H of a subspace: s*dim(u ∩ L1) + r*(dim(u ∩ L2) − dim(u ∩ L1)).
Rat hodge_invariant(const Subspace& u, const Filtration& fil, HodgeType h);

/// t_N of a phi-invariant subspace: valuation of det(phi restricted to u).
Valuation newton_invariant(const Subspace& u, const Matrix& phi);

/**
 * A family { U : V ⊆ U ⊆ W, dim U = k } of (phi,N)-invariant subspaces with one
 * Newton invariant shared by every member.  Isolated subspaces have V = W = U.
 */
struct SubobjectFamily {
    Subspace fixed;    // V
    Subspace ambient;  // W
    int dim = 0;       // k
    Valuation newton = Valuation(0);

    bool isolated() const { return fixed.dim() == dim && ambient.dim() == dim; }
    /// A deterministic pseudo-random member (V plus k - dim V vectors from W).
    Subspace random_member(Rng& rng) const;
};

/**
 * The complete catalog of nontrivial proper invariant-subspace families for a
 * standard shape, per the invariant-subspace lemmas.  Construction spot-verifies
 * invariance and Newton constancy on random members.
 */
std::vector<SubobjectFamily> invariant_families(const Matrix& phi, const Matrix& N,
                                                StandardShape shape);

/// Greedy closed-form maximum of hodge_invariant over the family's members.
Rat family_max_hodge(const SubobjectFamily& f, const Filtration& fil, HodgeType h);

/// A member attaining family_max_hodge (the greedy witness).
Subspace family_max_member(const SubobjectFamily& f, const Filtration& fil, HodgeType h);

struct AdmissibilityWitness {
    bool det_mismatch = false;  // t_H(D) != t_N(D)
    Rat t_H_D;
    Valuation t_N_D = Valuation(0);
    // Violating family (standard coordinates) and a member attaining t_H > t_N.
    SubobjectFamily family;
    Subspace member_std;
    Subspace member_input;  // the member carried back to the input basis
    Rat member_hodge;
};

struct Admissibility {
    bool admissible = false;
    std::optional<AdmissibilityWitness> witness;
    Normalization norm;                    // reused by the classifier
    std::vector<SubobjectFamily> families; // invariant families, standard coordinates
};

/// Weak admissibility: t_H(D) = t_N(D) and t_H ≤ t_N on every invariant family.
Admissibility is_admissible(const PhiNModule& m);

}  // namespace phinmod
