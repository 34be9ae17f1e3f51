// The 49-family catalog: normal-form patterns, parameter constraints,
// reducibility rules, and within-family equivalence data.
#pragma once

#include <array>
#include <functional>

#include "phinmod/invariants.hpp"

namespace phinmod {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FamilyId : int {
    Cris1, Cris2, Cris3, Cris4, Cris5, Cris6, Cris7, Cris8, Cris9, Cris10,
    Cris11, Cris12, Cris13, Cris14, Cris15, Cris16, Cris17, Cris18, Cris19,
    Cris20, Cris21, Cris22, Cris23, Cris24, Cris25, Cris26,
    R1_1, R1_2, R1_3, R1_4, R1_5, R1_6, R1_7, R1_8, R1_9, R1_10,
    R1_11, R1_12, R1_13, R1_14, R1_15, R1_16, R1_17, R1_18, R1_19, R1_20,
    R2_1, R2_2, R2_3,
};

constexpr int kFamilyCount = 49;

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);
int family_monodromy_rank(FamilyId id);
std::vector<FamilyId> all_families();

/// One point of a family: eigenvalue parameters plus filtration parameters.
struct FamilyInstance {
    FamilyId id = FamilyId::Cris1;
    FieldSpec field;
    HodgeType hodge;
    std::vector<FieldElement> eigen_params;
    std::vector<FieldElement> fil_params;
};

struct ReducibilityReport {
    enum class Kind { Decomposable, NonSplitReducible, Irreducible };
    Kind kind = Kind::Irreducible;
    std::vector<Subspace> submodules;  // in the representative's coordinates
};

std::string reducibility_kind_name(ReducibilityReport::Kind k);

/**
 * A filtration-pattern vector: anchor + sum of fil-param slots.  Projective
 * patterns have no anchor; their slot coefficients are homogeneous coordinates.
 */
struct PatternVec {
    std::array<Rat, 3> anchor{Rat(0), Rat(0), Rat(0)};
    std::vector<std::pair<int, std::array<Rat, 3>>> slots;
    bool projective = false;

    bool has_slots() const { return !slots.empty(); }
    Vec realize(const FieldSpec& spec, const std::vector<FieldElement>& fil) const;
    /// Span of the anchor and all slot directions (the pattern's ambient cone).
    Subspace cone(const FieldSpec& spec) const;
    Vec anchor_vec(const FieldSpec& spec) const;
};

struct CatalogEntry {
    FamilyId id;
    StandardShape shape;
    int n_eigen = 1;
    int n_fil = 0;
    bool projective_fil = false;  // the fil params are a single P^1 point
    PatternVec w1;                // spans L1
    PatternVec u2;                // completes L2 = span(w1, u2)
    /// R1_8 only: L2 is this fixed plane and w1 is projective inside it.
    std::optional<std::array<std::array<Rat, 3>, 2>> l2_fixed;

    std::function<bool(const std::vector<Rat>&, HodgeType)> vals_ok;
    std::function<bool(const std::vector<FieldElement>&)> fil_ok;
    std::function<std::string(HodgeType)> constraint_text;
    std::function<ReducibilityReport(const FamilyInstance&)> reducibility;
    /// Non-identity eigen permutations giving isomorphic instances (Cris15..25).
    std::vector<std::array<int, 3>> eigen_swaps;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(FamilyId id);

/// Valuations of the instance's eigenvalue parameters (all finite).
std::vector<Rat> eigen_valuations(const FamilyInstance& fi);

/// Domain + valuation constraint check; returns a diagnostic on failure.
std::optional<std::string> instance_constraint_violation(const FamilyInstance& fi);

}  // namespace phinmod
