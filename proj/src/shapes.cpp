#include "phinmod/shapes.hpp"

#include <set>

namespace phinmod {

const char* shape_name(StandardShape s) {
    switch (s) {
        case StandardShape::C1: return "crys-1";
        case StandardShape::C2: return "crys-2";
        case StandardShape::C3: return "crys-3";
        case StandardShape::C4: return "crys-4";
        case StandardShape::C5: return "crys-5";
        case StandardShape::C6: return "crys-6";
        case StandardShape::R1S1: return "rank1-1";
        case StandardShape::R1S2: return "rank1-2";
        case StandardShape::R1S3: return "rank1-3";
        case StandardShape::R1S4: return "rank1-4";
        case StandardShape::R1S5: return "rank1-5";
        case StandardShape::R2: return "rank2";
    }
    return "?";
}

int shape_monodromy_rank(StandardShape s) {
    switch (s) {
        case StandardShape::C1:
        case StandardShape::C2:
        case StandardShape::C3:
        case StandardShape::C4:
        case StandardShape::C5:
        case StandardShape::C6: return 0;
        case StandardShape::R2: return 2;
        default: return 1;
    }
}

int shape_eigen_count(StandardShape s) {
    switch (s) {
        case StandardShape::C4:
        case StandardShape::C5:
        case StandardShape::R1S5: return 2;
        case StandardShape::C6: return 3;
        default: return 1;
    }
}

Matrix standard_N(int rank, const FieldSpec& spec) {
    Matrix N(3, 3, spec);
    FieldElement one = FieldElement::one(spec);
    if (rank == 1) {
        N.at(2, 0) = one;  // N e1 = e3
    } else if (rank == 2) {
        N.at(1, 0) = one;  // N e1 = e2
        N.at(2, 1) = one;  // N e2 = e3
    } else if (rank != 0) {
        throw LinalgError("monodromy rank must be 0, 1, or 2");
    }
    return N;
}

Matrix standard_phi(StandardShape s, const std::vector<FieldElement>& eigen,
                    const FieldSpec& spec) {
    if ((int)eigen.size() != shape_eigen_count(s))
        throw LinalgError("wrong number of eigenvalue parameters for shape");
    FieldElement p = FieldElement::from_rational(spec, spec.prime);
    FieldElement one = FieldElement::one(spec);
    Matrix m(3, 3, spec);
    const FieldElement& l = eigen[0];
    switch (s) {
        case StandardShape::C1:
            m.at(0, 0) = l; m.at(1, 1) = l; m.at(2, 2) = l;
            break;
        case StandardShape::C2:
            m.at(0, 0) = l; m.at(1, 1) = l; m.at(2, 2) = l;
            m.at(1, 0) = one;
            break;
        case StandardShape::C3:
            m.at(0, 0) = l; m.at(1, 1) = l; m.at(2, 2) = l;
            m.at(1, 0) = one; m.at(2, 1) = one;
            break;
        case StandardShape::C4:
            m.at(0, 0) = l; m.at(1, 1) = l; m.at(2, 2) = eigen[1];
            break;
        case StandardShape::C5:
            m.at(0, 0) = l; m.at(1, 1) = l; m.at(2, 2) = eigen[1];
            m.at(1, 0) = one;
            break;
        case StandardShape::C6:
            m.at(0, 0) = eigen[0]; m.at(1, 1) = eigen[1]; m.at(2, 2) = eigen[2];
            break;
        case StandardShape::R1S1:
            m.at(0, 0) = p * l; m.at(1, 1) = l; m.at(2, 2) = l;
            break;
        case StandardShape::R1S2:
            m.at(0, 0) = p * l; m.at(1, 1) = l; m.at(2, 2) = l;
            m.at(2, 1) = one;  // phi e2 = l e2 + e3
            break;
        case StandardShape::R1S3:
            m.at(0, 0) = p * l; m.at(1, 1) = p * l; m.at(2, 2) = l;
            break;
        case StandardShape::R1S4:
            m.at(0, 0) = p * l; m.at(1, 1) = p * l; m.at(2, 2) = l;
            m.at(1, 0) = one;  // phi e1 = pl e1 + e2
            break;
        case StandardShape::R1S5:
            m.at(0, 0) = p * l; m.at(1, 1) = eigen[1]; m.at(2, 2) = l;
            break;
        case StandardShape::R2:
            m.at(0, 0) = p * p * l; m.at(1, 1) = p * l; m.at(2, 2) = l;
            break;
    }
    return m;
}

bool shape_eigen_constraints_ok(StandardShape s, const std::vector<FieldElement>& eigen,
                                const FieldSpec& spec) {
    if ((int)eigen.size() != shape_eigen_count(s)) return false;
    for (const auto& l : eigen)
        if (l.is_zero()) return false;
    FieldElement p = FieldElement::from_rational(spec, spec.prime);
    switch (s) {
        case StandardShape::C4:
        case StandardShape::C5:
            return eigen[0] != eigen[1];
        case StandardShape::C6:
            return eigen[0] != eigen[1] && eigen[1] != eigen[2] && eigen[0] != eigen[2];
        case StandardShape::R1S5:
            return eigen[1] != eigen[0] && eigen[1] != p * eigen[0];
        default:
            return true;
    }
}

int CommutantPattern::dimension() const {
    std::set<int> classes;
    for (int c : cls)
        if (c >= 0) classes.insert(c);
    return (int)classes.size();
}

bool CommutantPattern::matches(const Matrix& P) const {
    if (P.rows() != 3 || P.cols() != 3) return false;
    // zero pattern
    for (int i = 0; i < 9; ++i)
        if (cls[i] < 0 && !P.at(i / 3, i % 3).is_zero()) return false;
    // equality classes
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            if (cls[i] >= 0 && cls[i] == cls[j] &&
                P.at(i / 3, i % 3) != P.at(j / 3, j % 3))
                return false;
    return true;
}

CommutantPattern commutant_pattern(StandardShape s) {
    // Entries listed row-major; -1 = forced zero, equal ids = forced equal.
    constexpr int Z = -1;
    switch (s) {
        case StandardShape::C1:
            return {{0, 1, 2, 3, 4, 5, 6, 7, 8}};  // everything commutes
        case StandardShape::C2:
            // P11=P22, P12=P13=P32=0
            return {{0, Z, Z, 1, 0, 2, 3, Z, 4}};
        case StandardShape::C3:
            // lower triangular, P11=P22=P33, P21=P32
            return {{0, Z, Z, 1, 0, Z, 2, 1, 0}};
        case StandardShape::C4:
            // P13=P23=P31=P32=0
            return {{0, 1, Z, 2, 3, Z, Z, Z, 4}};
        case StandardShape::C5:
            // lower triangular, P11=P22, P31=P32=0
            return {{0, Z, Z, 1, 0, Z, Z, Z, 2}};
        case StandardShape::C6:
            return {{0, Z, Z, Z, 1, Z, Z, Z, 2}};  // diagonal
        case StandardShape::R1S1:
            // lower triangular, P11=P33, P21=P31=0
            return {{0, Z, Z, Z, 1, Z, Z, 2, 0}};
        case StandardShape::R1S2:
            // lower triangular, P11=P22=P33, P21=P31=0
            return {{0, Z, Z, Z, 0, Z, Z, 1, 0}};
        case StandardShape::R1S3:
            // lower triangular, P11=P33, P31=P32=0
            return {{0, Z, Z, 1, 2, Z, Z, Z, 0}};
        case StandardShape::R1S4:
            // lower triangular, P11=P22=P33, P31=P32=0
            return {{0, Z, Z, 1, 0, Z, Z, Z, 0}};
        case StandardShape::R1S5:
            return {{0, Z, Z, Z, 1, Z, Z, Z, 0}};  // diagonal with P11=P33
        case StandardShape::R2:
            return {{0, Z, Z, Z, 0, Z, Z, Z, 0}};  // scalars
    }
    throw InternalError("unknown shape");
}

}  // namespace phinmod
