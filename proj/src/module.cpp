#include "phinmod/module.hpp"

namespace phinmod {

int monodromy_rank_of(const Matrix& N) { return N.rank(); }

std::vector<std::string> validate_module(const PhiNModule& m) {
    std::vector<std::string> bad;
    if (m.hodge.r <= 0 || m.hodge.r >= m.hodge.s)
        bad.push_back("Hodge type requires 0<r<s");
    if (m.phi.rows() != 3 || m.phi.cols() != 3 || m.N.rows() != 3 || m.N.cols() != 3) {
        bad.push_back("phi and N must be 3x3");
        return bad;
    }
    if (m.phi.determinant().is_zero()) bad.push_back("phi not invertible");
    if (!(m.N * m.N * m.N).is_zero()) bad.push_back("N not nilpotent");
    Matrix p_phi_N = (m.phi * m.N).scaled(FieldElement::from_rational(m.field, m.field.prime));
    if (m.N * m.phi != p_phi_N) bad.push_back("N phi != p phi N");
    if (m.fil.L1.dim() != 1) bad.push_back("L1 must have dimension 1");
    if (m.fil.L2.dim() != 2) bad.push_back("L2 must have dimension 2");
    if (m.fil.L1.ambient_dim() != 3 || m.fil.L2.ambient_dim() != 3)
        bad.push_back("filtration subspaces must live in E^3");
    else if (m.fil.L1.dim() == 1 && m.fil.L2.dim() == 2 && !m.fil.L2.contains(m.fil.L1))
        bad.push_back("L1 not contained in L2");
    if (m.jordan) {
        if (m.jordan->eigenvalues.size() != 3)
            bad.push_back("jordan hint must list three eigenvalues (with multiplicity)");
        else {
            Matrix prod = Matrix::identity(3, m.field);
            FieldElement tr = FieldElement::zero(m.field);
            FieldElement det_claim = FieldElement::one(m.field);
            for (const auto& lam : m.jordan->eigenvalues) {
                Matrix shift = m.phi - Matrix::identity(3, m.field).scaled(lam);
                prod = prod * shift;
                tr += lam;
                det_claim = det_claim * lam;
            }
            FieldElement trace = m.phi.at(0, 0) + m.phi.at(1, 1) + m.phi.at(2, 2);
            if (!prod.is_zero() || trace != tr || m.phi.determinant() != det_claim)
                bad.push_back("jordan hint eigenvalues are not the eigenvalues of phi");
            if (m.jordan->change_of_basis && m.jordan->change_of_basis->determinant().is_zero())
                bad.push_back("jordan hint change of basis is singular");
        }
    }
    return bad;
}

void require_valid(const PhiNModule& m) {
    auto bad = validate_module(m);
    if (!bad.empty()) throw ValidationError(bad.front());
}

}  // namespace phinmod
