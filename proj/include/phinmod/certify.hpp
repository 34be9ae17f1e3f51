// Randomized certification campaign with brute-force oracles.
#pragma once

#include "phinmod/classify.hpp"
#include "phinmod/io.hpp"
#include "phinmod/iso.hpp"

namespace phinmod {

struct CertifyConfig {
    HodgeType hodge{1, 2};
    int samples = 2000;
    std::uint64_t seed = 1;
    FieldSpec field{2, 6};
    int oracle_samples = 24;  // invariant-subspace samples per admissible module
    /// Test-only fault injection: pretend this family's representatives must be
    /// inadmissible, forcing a counterexample through the reporting path.
    std::optional<FamilyId> sabotage;
};

struct CheckOutcome {
    std::string name;
    bool pass = true;
    long ran = 0;
    long failed = 0;
};

struct CertifyReport {
    bool pass = true;
    std::vector<CheckOutcome> checks;
    Json counterexample;  // first failure, serialized; null when passing
    Json to_json_doc(const CertifyConfig& cfg) const;
};

CertifyReport certify(const CertifyConfig& cfg);

// --- deterministic generators (shared with the test suites) ----------------

/// Invertible matrix with small rational entries.
Matrix random_invertible(const FieldSpec& spec, Rng& rng);

/// Unit (valuation-zero rational) times u^(e*v); realizes valuation v.
FieldElement random_with_valuation(const FieldSpec& spec, const Rat& v, Rng& rng);

/// A valid instance of the family at this Hodge type, when one exists on the grid.
std::optional<FamilyInstance> random_instance(FamilyId id, HodgeType h,
                                              const FieldSpec& spec, Rng& rng);

/// A valid instance of a uniformly chosen satisfiable family (optionally fixed rank).
FamilyInstance random_any_instance(HodgeType h, const FieldSpec& spec, Rng& rng,
                                   std::optional<int> n_rank = std::nullopt);

/// Conjugate a module by Q and transport the filtration (and jordan hint).
PhiNModule transport_module(const PhiNModule& m, const Matrix& Q);

/**
 * The campaign generator: uniform monodromy rank, a standard shape, eigenvalue
 * valuations from the grid (half the time pinned to the determinant equality),
 * small-rational filtration coordinates, then a random invertible basis change.
 */
PhiNModule random_module(HodgeType h, const FieldSpec& spec, Rng& rng);

}  // namespace phinmod
