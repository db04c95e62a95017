#pragma once

#include <utility>
#include <vector>

#include "exalg/matrix.hpp"

namespace exalg {

// Linear subspace of F^n, stored as a canonical RREF basis matrix so that
// equality and containment are purely syntactic.
template <ScalarField S>
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    // Canonicalizes the generating rows (dependent generators welcome).
    static Subspace span(int ambient, const std::vector<std::vector<S>>& generators);
    static Subspace span(Matrix<S> generators);
    static Subspace full(int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix<S>& basis() const { return basis_; }
    std::vector<S> basis_vector(int i) const { return basis_.row(i); }

    bool contains(const std::vector<S>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // (U intersect V, U + V) in one reduction (Zassenhaus block trick).
    std::pair<Subspace, Subspace> intersect_sum(const Subspace& other) const;

    // Sum with extra vectors; returns true if the dimension grew.
    bool grow(const std::vector<std::vector<S>>& vectors);

private:
    void check_ambient(const Subspace& other) const;

    int ambient_;
    Matrix<S> basis_; // dim x ambient, canonical RREF, no zero rows
};

using RatSubspace = Subspace<Rat>;

} // namespace exalg
