// The twelve standard (phi,N) shapes and their commutant patterns.
#pragma once

#include <array>

#include "phinmod/module.hpp"

namespace phinmod {

/**
 * Crystalline shapes C1..C6 are keyed by the minimal/characteristic polynomial of
 * phi; R1S1..R1S5 are the five phi shapes compatible with the standard rank-1 N;
 * R2 is the single rank-2 shape.
 */
enum class StandardShape { C1, C2, C3, C4, C5, C6, R1S1, R1S2, R1S3, R1S4, R1S5, R2 };

constexpr std::array<StandardShape, 12> kAllShapes = {
    StandardShape::C1,   StandardShape::C2,   StandardShape::C3,   StandardShape::C4,
    StandardShape::C5,   StandardShape::C6,   StandardShape::R1S1, StandardShape::R1S2,
    StandardShape::R1S3, StandardShape::R1S4, StandardShape::R1S5, StandardShape::R2};

const char* shape_name(StandardShape s);
int shape_monodromy_rank(StandardShape s);
/// Number of eigenvalue parameters the shape carries (1, 2, or 3).
int shape_eigen_count(StandardShape s);

/// Standard N for monodromy rank 0, 1 (e1 -> e3) or 2 (e1 -> e2 -> e3).
Matrix standard_N(int rank, const FieldSpec& spec);

/**
 * Standard phi for the shape, given its eigenvalue parameters:
 *   C1 diag(l,l,l);  C2 l + E21;  C3 l + E21 + E32;  C4 diag(l,l,l3);
 *   C5 (l + E21) ⊕ l3;  C6 diag(l1,l2,l3);
 *   R1S1 diag(pl,l,l);  R1S2 diag(pl,l,l) + E32;  R1S3 diag(pl,pl,l);
 *   R1S4 diag(pl,pl,l) + E21;  R1S5 diag(pl,l2,l);  R2 diag(p^2 l, p l, l).
 */
Matrix standard_phi(StandardShape s, const std::vector<FieldElement>& eigen,
                    const FieldSpec& spec);

/// Genericity constraints the shape's eigenvalues must satisfy (distinctness etc).
bool shape_eigen_constraints_ok(StandardShape s, const std::vector<FieldElement>& eigen,
                                const FieldSpec& spec);

/**
 * Expected commutant pattern: entry (i,j) of a commuting P is either forced zero
 * (class -1) or free, with equal class ids marking forced-equal entries.  The
 * commutant dimension is the number of distinct nonnegative classes.
 */
struct CommutantPattern {
    std::array<int, 9> cls;
    int dimension() const;
    bool matches(const Matrix& P) const;  // P satisfies zero pattern and equalities
};

CommutantPattern commutant_pattern(StandardShape s);

}  // namespace phinmod
