#include "exalg/subspace.hpp"

namespace exalg {

namespace {

template <ScalarField S>
Matrix<S> drop_zero_rows(const Matrix<S>& m, int rank) {
    Matrix<S> out(rank, m.cols());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

template <ScalarField S>
Subspace<S> Subspace<S>::span(Matrix<S> generators) {
    int rank = generators.rref_in_place();
    Subspace sub(generators.cols());
    sub.basis_ = drop_zero_rows(generators, rank);
    return sub;
}

template <ScalarField S>
Subspace<S> Subspace<S>::span(int ambient, const std::vector<std::vector<S>>& generators) {
    if (generators.empty()) return Subspace(ambient);
    return span(rows_to_matrix(generators, ambient));
}

template <ScalarField S>
Subspace<S> Subspace<S>::full(int ambient) {
    Subspace sub(ambient);
    sub.basis_ = Matrix<S>::identity(ambient);
    return sub;
}

template <ScalarField S>
void Subspace<S>::check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

template <ScalarField S>
bool Subspace<S>::contains(const std::vector<S>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatch("vector size");
    // Reduce v against the RREF basis; membership iff the residue vanishes.
    std::vector<S> r = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        int lead = 0;
        while (basis_.at(i, lead).is_zero()) ++lead;
        if (r[lead].is_zero()) continue;
        const S c = r[lead];
        for (int j = lead; j < ambient_; ++j)
            if (!basis_.at(i, j).is_zero()) scalar_submul(r[j], c, basis_.at(i, j));
    }
    return vec_is_zero(r);
}

template <ScalarField S>
bool Subspace<S>::contains(const Subspace& other) const {
    check_ambient(other);
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

template <ScalarField S>
std::pair<Subspace<S>, Subspace<S>> Subspace<S>::intersect_sum(const Subspace& other) const {
    check_ambient(other);
    const int n = ambient_;
    const int du = dim(), dv = other.dim();
    // Zassenhaus: reduce [U U; V 0].  Rows with zero left half carry the
    // intersection in their right half, the left halves span the sum.
    Matrix<S> block(du + dv, 2 * n);
    for (int i = 0; i < du; ++i)
        for (int j = 0; j < n; ++j) {
            block.at(i, j) = basis_.at(i, j);
            block.at(i, n + j) = basis_.at(i, j);
        }
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < n; ++j) block.at(du + i, j) = other.basis_.at(i, j);
    int rank = block.rref_in_place();
    std::vector<std::vector<S>> sum_rows, meet_rows;
    for (int i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (!block.at(i, j).is_zero()) left_zero = false;
        std::vector<S> half(n);
        if (left_zero) {
            for (int j = 0; j < n; ++j) half[j] = block.at(i, n + j);
            meet_rows.push_back(std::move(half));
        } else {
            for (int j = 0; j < n; ++j) half[j] = block.at(i, j);
            sum_rows.push_back(std::move(half));
        }
    }
    return {span(n, meet_rows), span(n, sum_rows)};
}

template <ScalarField S>
Subspace<S> Subspace<S>::sum(const Subspace& other) const {
    check_ambient(other);
    Matrix<S> stacked(dim() + other.dim(), ambient_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (int i = 0; i < other.dim(); ++i)
        for (int j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = other.basis_.at(i, j);
    return span(std::move(stacked));
}

template <ScalarField S>
Subspace<S> Subspace<S>::intersect(const Subspace& other) const {
    return intersect_sum(other).first;
}

template <ScalarField S>
bool Subspace<S>::grow(const std::vector<std::vector<S>>& vectors) {
    std::vector<std::vector<S>> fresh;
    for (const auto& v : vectors)
        if (!contains(v)) fresh.push_back(v);
    if (fresh.empty()) return false;
    int before = dim();
    for (int i = 0; i < dim(); ++i) fresh.push_back(basis_vector(i));
    *this = span(ambient_, fresh);
    return dim() != before;
}

template class Subspace<Rat>;
template class Subspace<QuadExt>;

} // namespace exalg
