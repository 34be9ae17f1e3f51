// Classification of admissible modules into the 49-family catalog.
#pragma once

#include "phinmod/catalog.hpp"

namespace phinmod {

struct NotAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Must never fire on admissible input; indicates an internal inconsistency.
struct NoFamilyMatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClassifyResult {
    FamilyInstance fi;
    /// T with T phi_rep T^{-1} = m.phi, T N_rep T^{-1} = m.N, T(L_rep) = L_m,
    /// where rep = instantiate(fi).
    Matrix transition;
};

/// Identify an admissible module.  check_unique scans the whole catalog and
/// aborts with NoFamilyMatchError on zero or multiple matches.
ClassifyResult classify(const PhiNModule& m, bool check_unique = true);

/// The representative module of a valid instance (throws CatalogError otherwise).
PhiNModule instantiate(const FamilyInstance& fi);

/// Reducibility structure per the instance's family rule.
ReducibilityReport reducibility(const FamilyInstance& fi);

struct FamilyListing {
    FamilyId id;
    int n_rank;
    std::string constraint;
};

/// Families whose valuation constraints are satisfiable on the (1/e)Z grid
/// for this Hodge type, optionally restricted to a monodromy rank.
std::vector<FamilyListing> enumerate_families(HodgeType h, const FieldSpec& spec,
                                              std::optional<int> n_rank = std::nullopt);

/// Catalog equivalence: do the two instances denote isomorphic modules?
bool param_equivalent(const FamilyInstance& a, const FamilyInstance& b);

/// Eigenvalue-valuation tuples on the (1/e)Z grid satisfying the family's
/// constraint (the determinant equality pins one coordinate).
std::vector<std::vector<Rat>> valid_eigen_valuations(FamilyId id, HodgeType h,
                                                     const FieldSpec& spec);

}  // namespace phinmod
