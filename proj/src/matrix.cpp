#include "exalg/matrix.hpp"

namespace exalg {

template <ScalarField S>
Matrix<S> Matrix<S>::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
}

template <ScalarField S>
std::vector<S> Matrix<S>::row(int i) const {
    return std::vector<S>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

template <ScalarField S>
void Matrix<S>::set_row(int i, const std::vector<S>& r) {
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
}

template <ScalarField S>
bool Matrix<S>::is_zero() const {
    for (const S& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

template <ScalarField S>
Matrix<S> Matrix<S>::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

template <ScalarField S>
Matrix<S>& Matrix<S>::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add shapes");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

template <ScalarField S>
Matrix<S>& Matrix<S>::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub shapes");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

template <ScalarField S>
Matrix<S> Matrix<S>::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const S& aik = at(i, k);
            if (aik.is_zero()) continue;
            const S* orow = &o.a_[k * o.cols_];
            S* dst = &out.a_[i * o.cols_];
            for (int j = 0; j < o.cols_; ++j)
                if (!orow[j].is_zero()) scalar_addmul(dst[j], aik, orow[j]);
        }
    }
    return out;
}

template <ScalarField S>
Matrix<S> Matrix<S>::scaled(const S& c) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

template <ScalarField S>
std::vector<S> Matrix<S>::apply(const std::vector<S>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix apply shape");
    std::vector<S> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        const S* arow = &a_[i * cols_];
        for (int j = 0; j < cols_; ++j)
            if (!arow[j].is_zero() && !x[j].is_zero()) scalar_addmul(y[i], arow[j], x[j]);
    }
    return y;
}

template <ScalarField S>
Matrix<S> Matrix<S>::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

template <ScalarField S>
bool Matrix<S>::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

template <ScalarField S>
int Matrix<S>::rref_in_place() {
    int pivot_row = 0;
    for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
        int p = -1;
        for (int r = pivot_row; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != pivot_row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(pivot_row, j));
        S inv = at(pivot_row, col).inverse();
        for (int j = col; j < cols_; ++j)
            if (!at(pivot_row, j).is_zero()) at(pivot_row, j) = at(pivot_row, j) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const S factor = at(r, col);
            if (factor.is_zero()) continue;
            for (int j = col; j < cols_; ++j)
                if (!at(pivot_row, j).is_zero()) scalar_submul(at(r, j), factor, at(pivot_row, j));
        }
        ++pivot_row;
    }
    return pivot_row;
}

template <ScalarField S>
int Matrix<S>::rank() const {
    Matrix copy = *this;
    return copy.rref_in_place();
}

template <ScalarField S>
Matrix<S> Matrix<S>::kernel() const {
    Matrix r = *this;
    int rk = r.rref_in_place();
    // Locate pivot columns.
    std::vector<int> pivot_col(rk);
    std::vector<bool> is_pivot(cols_, false);
    for (int i = 0; i < rk; ++i) {
        int j = 0;
        while (r.at(i, j).is_zero()) ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    Matrix basis(cols_ - rk, cols_);
    int out = 0;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        basis.at(out, j) = S(1);
        for (int i = 0; i < rk; ++i) basis.at(out, pivot_col[i]) = -r.at(i, j);
        ++out;
    }
    basis.rref_in_place();
    return basis;
}

template <ScalarField S>
Matrix<S> Matrix<S>::inverse() const {
    if (!is_square()) throw NotInvertible("inverse of non-square matrix");
    int n = rows_;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = S(1);
    }
    aug.rref_in_place();
    // The left block must have reduced to the identity; a pivot escaping
    // into the augmented half means the matrix was singular.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(aug.at(i, j) == (i == j ? S(1) : S(0))))
                throw NotInvertible("singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

template <ScalarField S>
std::vector<S> Matrix<S>::solve(const std::vector<S>& f) const {
    if (!is_square() || static_cast<int>(f.size()) != rows_)
        throw DimensionMismatch("solve shape");
    int n = rows_;
    Matrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n) = f[i];
    }
    aug.rref_in_place();
    std::vector<S> x(n);
    for (int i = 0; i < n; ++i) {
        int j = 0;
        while (j < n && aug.at(i, j).is_zero()) ++j;
        if (j == n) {
            if (!aug.at(i, n).is_zero()) throw NotInvertible("inconsistent linear system");
            continue;
        }
        x[j] = aug.at(i, n);
    }
    // Verify: rejects underdetermined systems from a singular matrix.
    std::vector<S> check = apply(x);
    for (int i = 0; i < n; ++i)
        if (!(check[i] == f[i])) throw NotInvertible("singular system in solve");
    return x;
}

template <ScalarField S>
Matrix<S> rows_to_matrix(const std::vector<std::vector<S>>& rows, int cols) {
    Matrix<S> m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw DimensionMismatch("row width");
        m.set_row(static_cast<int>(i), rows[i]);
    }
    return m;
}

template class Matrix<Rat>;
template class Matrix<QuadExt>;
template Matrix<Rat> rows_to_matrix<Rat>(const std::vector<std::vector<Rat>>&, int);
template Matrix<QuadExt> rows_to_matrix<QuadExt>(const std::vector<std::vector<QuadExt>>&, int);

} // namespace exalg
