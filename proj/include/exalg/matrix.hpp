#pragma once

#include <utility>
#include <vector>

#include "exalg/errors.hpp"
#include "exalg/scalar.hpp"

namespace exalg {

// Dense matrix over an exact scalar field.  Row-major.  Also serves as the
// LinearMap of the library: a square matrix acting on coordinate columns.
template <ScalarField S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& at(int i, int j) { return a_[i * cols_ + j]; }
    const S& at(int i, int j) const { return a_[i * cols_ + j]; }

    std::vector<S> row(int i) const;
    void set_row(int i, const std::vector<S>& r);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }

    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const S& c) const;
    std::vector<S> apply(const std::vector<S>& x) const;

    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // In-place reduced row echelon form; returns the rank.  Canonical: pivots
    // are 1, pivot columns strictly increase, pivot columns cleared above and
    // below.  Zero rows sink to the bottom (and are kept).
    int rref_in_place();
    int rank() const;

    // Basis of { x : Mx = 0 } as the rows of a matrix in canonical RREF.
    Matrix kernel() const;

    // Exact inverse; throws NotInvertible on singular or non-square input.
    Matrix inverse() const;

    // Solves M x = f for square invertible M (one-shot Gaussian elimination).
    std::vector<S> solve(const std::vector<S>& f) const;

private:
    int rows_, cols_;
    std::vector<S> a_;
};

template <ScalarField S>
Matrix<S> rows_to_matrix(const std::vector<std::vector<S>>& rows, int cols);

using RatMatrix = Matrix<Rat>;

// Vector helpers shared by the algebra modules.
template <ScalarField S>
void vec_accumulate(std::vector<S>& acc, const S& c, const std::vector<S>& x) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!x[i].is_zero()) scalar_addmul(acc[i], c, x[i]);
}

template <ScalarField S>
bool vec_is_zero(const std::vector<S>& x) {
    for (const S& v : x)
        if (!v.is_zero()) return false;
    return true;
}

} // namespace exalg
