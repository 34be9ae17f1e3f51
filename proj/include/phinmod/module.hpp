// Filtered (phi,N)-module data model: Hodge type, filtration, validation.
#pragma once

#include <optional>

#include "phinmod/subspace.hpp"

namespace phinmod {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hodge type (0, r, s) with 0 < r < s.
struct HodgeType {
    int r = 1;
    int s = 2;
    bool operator==(const HodgeType&) const = default;
};

/// Fil^i D = D (i<=0), L2 (0<i<=r), L1 (r<i<=s), 0 (i>s); L1 in L2, dims 1 and 2.
struct Filtration {
    Subspace L1;
    Subspace L2;
};

struct JordanHint {
    std::vector<FieldElement> eigenvalues;        // three entries, with multiplicity
    std::optional<Matrix> change_of_basis;        // P with P phi P^{-1} in Jordan shape
};

struct PhiNModule {
    FieldSpec field;
    HodgeType hodge;
    Matrix phi;  // 3x3, invertible
    Matrix N;    // 3x3, nilpotent, N phi = p phi N
    Filtration fil;
    std::optional<JordanHint> jordan;
};

/// All invariant checks; empty result means the module is well formed.
std::vector<std::string> validate_module(const PhiNModule& m);

/// validate_module, throwing ValidationError on the first violation.
void require_valid(const PhiNModule& m);

int monodromy_rank_of(const Matrix& N);

}  // namespace phinmod
