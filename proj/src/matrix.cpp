#include "phinmod/matrix.hpp"

#include <sstream>

namespace phinmod {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw LinalgError("vector size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw LinalgError("vector size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const FieldElement& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(int rows, int cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), a_(rows * cols, FieldElement::zero(spec)) {
    if (rows < 0 || cols < 0) throw LinalgError("negative matrix dimensions");
}

Matrix::Matrix(const FieldSpec& spec, std::vector<std::vector<Rat>> entries)
    : Matrix((int)entries.size(), entries.empty() ? 0 : (int)entries[0].size(), spec) {
    for (int i = 0; i < rows_; ++i) {
        if ((int)entries[i].size() != cols_) throw LinalgError("ragged matrix literal");
        for (int j = 0; j < cols_; ++j) at(i, j) = FieldElement::from_rational(spec, entries[i][j]);
    }
}

Matrix Matrix::identity(int n, const FieldSpec& spec) {
    Matrix m(n, n, spec);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(spec);
    return m;
}

Matrix Matrix::zero(int rows, int cols, const FieldSpec& spec) { return Matrix(rows, cols, spec); }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, spec_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::column(int j) const {
    Vec v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Vec Matrix::row(int i) const {
    Vec v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LinalgError("matrix shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LinalgError("matrix shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw LinalgError("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_, a.spec_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = c * x;
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if ((int)v.size() != cols_) throw LinalgError("vector length mismatch in apply");
    Vec r(rows_, FieldElement::zero(spec_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.a_ == b.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

FieldElement Matrix::determinant() const {
    if (rows_ != cols_) throw LinalgError("determinant of a non-square matrix");
    int n = rows_;
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n == 3) {
        const Matrix& m = *this;
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    }
    Matrix m = *this;
    FieldElement det = FieldElement::one(spec_);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return FieldElement::zero(spec_);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        FieldElement inv = m.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

bool Matrix::invertible() const { return !determinant().is_zero(); }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw LinalgError("inverse of a non-square matrix");
    int n = rows_;
    if (n == 3) {
        FieldElement det = determinant();
        if (det.is_zero()) throw LinalgError("matrix is singular");
        FieldElement inv_det = det.inverse();
        const Matrix& m = *this;
        Matrix adj(3, 3, spec_);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                // adj(j,i): transpose of the cofactor matrix
                adj.at(j, i) = (m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0)) *
                               inv_det;
            }
        return adj;
    }
    Matrix aug(n, 2 * n, spec_);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = FieldElement::one(spec_);
    }
    auto pivots = rref(aug);
    if ((int)pivots.size() != n || pivots.back() >= n)
        throw LinalgError("matrix is singular");
    Matrix inv(n, n, spec_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

int Matrix::rank() const {
    Matrix m = *this;
    return (int)rref(m).size();
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        FieldElement inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElement f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Vec> nullspace(const Matrix& m) {
    Matrix red = m;
    auto pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), FieldElement::zero(m.spec()));
        v[free] = FieldElement::one(m.spec());
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red.at((int)k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if ((int)b.size() != m.rows()) throw LinalgError("rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.spec());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    Vec x(m.cols(), FieldElement::zero(m.spec()));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at((int)k, m.cols());
    return x;
}

std::vector<Matrix> intertwiner_space(const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    if (pairs.empty()) throw LinalgError("intertwiner_space needs at least one pair");
    int n = pairs[0].first.rows();
    const FieldSpec& spec = pairs[0].first.spec();
    for (const auto& [a, b] : pairs)
        if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
            throw LinalgError("intertwiner_space wants square matrices of equal size");

    // Unknown x(r,c) = P[r][c]; equation (P A - B P)[i][j] = 0.
    Matrix sys((int)pairs.size() * n * n, n * n, spec);
    int row = 0;
    for (const auto& [A, B] : pairs) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    sys.at(row, i * n + k) += A.at(k, j);
                    sys.at(row, k * n + j) -= B.at(i, k);
                }
                ++row;
            }
    }
    std::vector<Matrix> basis;
    for (const auto& v : nullspace(sys)) {
        Matrix P(n, n, spec);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P.at(i, j) = v[i * n + j];
        basis.push_back(std::move(P));
    }
    return basis;
}

}  // namespace phinmod
