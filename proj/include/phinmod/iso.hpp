// Direct isomorphism testing, independent of the catalog.
#pragma once

#include "phinmod/module.hpp"
#include "phinmod/shapes.hpp"

namespace phinmod {

struct IsoResult {
    bool isomorphic = false;
    /// Invertible P with P phi_a = phi_b P, P N_a = N_b P, P(L1_a) = L1_b,
    /// P(L2_a) = L2_b; verified exactly before emission.
    std::optional<Matrix> witness;
};

/**
 * Decide isomorphism by computing the space of filtration-compatible
 * intertwiners, then evaluating its determinant polynomial on a deterministic
 * {0,1,2,3} grid (degree <= 3 per coordinate, so vanishing on the grid is
 * vanishing identically).  The first grid point with nonzero determinant is
 * returned as the witness.
 */
IsoResult are_isomorphic(const PhiNModule& a, const PhiNModule& b);

struct ShapeCheckResult {
    bool ok = false;
    int dimension = 0;
    std::string mismatch;  // offending entry constraint, empty when ok
};

/// Brute-force commutant of the standard (phi,N) against the lemma pattern.
ShapeCheckResult commutant_shape_check(StandardShape shape);

}  // namespace phinmod
