// Exact dense matrices over the model field E.
#pragma once

#include <optional>
#include <vector>

#include "phinmod/field.hpp"

namespace phinmod {

struct LinalgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<FieldElement>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const FieldElement& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Column convention: column j holds the image of the j-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const FieldSpec& spec);
    Matrix(const FieldSpec& spec, std::vector<std::vector<Rat>> rational_entries);

    static Matrix identity(int n, const FieldSpec& spec);
    static Matrix zero(int rows, int cols, const FieldSpec& spec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }

    FieldElement& at(int i, int j) { return a_[i * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const;
    Vec column(int j) const;
    Vec row(int i) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;
    Matrix scaled(const FieldElement& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const;

    FieldElement determinant() const;
    Matrix inverse() const;  // throws LinalgError when singular
    bool invertible() const;
    int rank() const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    FieldSpec spec_;
    std::vector<FieldElement> a_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Matrix& m);

/// Basis of { x : m x = 0 }, canonical (one vector per free column, in column order).
std::vector<Vec> nullspace(const Matrix& m);

/// One solution x of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/**
 * Basis of { P : P * A_i = B_i * P for all pairs }, solved as one linear system in
 * the n^2 entries of P.  With A = B this is the commutant.
 */
std::vector<Matrix> intertwiner_space(const std::vector<std::pair<Matrix, Matrix>>& pairs);

}  // namespace phinmod
