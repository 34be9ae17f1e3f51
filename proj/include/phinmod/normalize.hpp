// Basis changes carrying (phi, N) to one of the twelve standard shapes.
#pragma once

#include "phinmod/shapes.hpp"

namespace phinmod {

struct NormalizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Returns (N_std, P) with P N P^{-1} = N_std, where N_std is the standard
 * nilpotent of N's rank.  Throws NormalizeError when N is not nilpotent.
 */
std::pair<Matrix, Matrix> align_monodromy(const Matrix& N);

struct PhiNormalization {
    StandardShape shape;
    std::vector<FieldElement> eigen;  // the shape's canonical eigenvalue parameters
    Matrix phi_std;
    Matrix transition;  // carries the N-aligned phi to phi_std, preserving N_std
};

/**
 * Given phi already compatible with the standard N of the given rank, produce the
 * standard shape.  Rank 0 requires phi triangular or a jordan hint (eigenvalues);
 * ranks 1 and 2 use the explicit transition matrices of the basis-change lemmas.
 */
PhiNormalization normalize_phi(const Matrix& phi, int n_rank,
                               const std::optional<JordanHint>& hint);

struct Normalization {
    StandardShape shape;
    std::vector<FieldElement> eigen;
    Matrix phi_std;
    Matrix N_std;
    Matrix transition;  // P with P phi P^{-1} = phi_std, P N P^{-1} = N_std
    Filtration fil_std; // transported filtration (P L1, P L2)
};

Normalization normalize(const PhiNModule& m);

}  // namespace phinmod
