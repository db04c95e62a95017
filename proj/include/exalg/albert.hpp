#pragma once

#include <array>
#include <optional>
#include <vector>

#include "exalg/cayley.hpp"
#include "exalg/matrix.hpp"
#include "exalg/rng.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

inline constexpr int kAlbertDim = 27;

// Element of the reduced Albert algebra H3(C, gamma): three diagonal scalars
// and three octonion slots.  Coordinate order: eps0, eps1, eps2, a1..a8,
// b1..b8, c1..c8.
template <ScalarField S>
struct AlbertElem {
    std::array<S, 3> eps{};
    Oct<S> a, b, c;

    AlbertElem() = default;

    static AlbertElem diag(const S& e0, const S& e1, const S& e2) {
        AlbertElem x;
        x.eps = {e0, e1, e2};
        return x;
    }
    static AlbertElem one() { return diag(S(1), S(1), S(1)); }
    // Primitive idempotent e_i with a single 1 on the diagonal.
    static AlbertElem idempotent(int i) {
        AlbertElem x;
        x.eps[i] = S(1);
        return x;
    }
    static AlbertElem basis(int k);

    std::vector<S> coords() const;
    static AlbertElem from_coords(const std::vector<S>& v);

    bool is_zero() const;
    AlbertElem operator-() const;
    AlbertElem& operator+=(const AlbertElem& o);
    AlbertElem& operator-=(const AlbertElem& o);
    friend AlbertElem operator+(AlbertElem x, const AlbertElem& y) { x += y; return x; }
    friend AlbertElem operator-(AlbertElem x, const AlbertElem& y) { x -= y; return x; }
    friend AlbertElem operator*(const S& s, AlbertElem x) {
        for (auto& e : x.eps) e = s * e;
        x.a = s * x.a;
        x.b = s * x.b;
        x.c = s * x.c;
        return x;
    }
    friend bool operator==(const AlbertElem& x, const AlbertElem& y) {
        return x.eps[0] == y.eps[0] && x.eps[1] == y.eps[1] && x.eps[2] == y.eps[2] &&
               x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator!=(const AlbertElem& x, const AlbertElem& y) { return !(x == y); }
};

// Sparse element of the 27-dimensional coordinate space; the cross product
// structure table stores its values this way.
template <ScalarField S>
using SparseVec = std::vector<std::pair<int, S>>;

// Reduced Albert algebra context H3(C, gamma) for a diagonal gamma with
// nonzero entries.  Precomputes the trace Gram matrix, its inverse, and the
// structure table of the Freudenthal cross product; immutable afterwards.
template <ScalarField S>
class AlbertCtx;

// Scalar extension to Q(sqrt d).  The structure data (Gram matrix and cross
// table) of a rationally-twisted context is rational, so it is copied into
// the extension instead of recomputed; the tests pin this against direct
// construction.
AlbertCtx<QuadExt> extend_to_quad(const AlbertCtx<Rat>& base, long d);

template <ScalarField S>
class AlbertCtx {
public:
    AlbertCtx() : AlbertCtx(std::array<S, 3>{S(1), S(1), S(1)}) {}
    explicit AlbertCtx(std::array<S, 3> gamma);

    const std::array<S, 3>& gamma() const { return gamma_; }
    const Matrix<S>& gram() const { return gram_; }
    const Matrix<S>& gram_inverse() const { return gram_inv_; }

    // Jordan product x . y = (xy + yx)/2, computed through the 3x3 octonion
    // matrix representation.  Throws ReadbackMismatch if the symmetrized
    // product leaves the hermitian shape (it never should).
    AlbertElem<S> jordan_mul(const AlbertElem<S>& x, const AlbertElem<S>& y) const;

    S trace(const AlbertElem<S>& x) const { return x.eps[0] + x.eps[1] + x.eps[2]; }
    S trace_form(const AlbertElem<S>& x, const AlbertElem<S>& y) const;

    // Cubic norm via the characteristic identity
    //   x^3 - T(x) x^2 + S(x) x = N(x) 1,   S(x) = (T(x)^2 - T(x,x)) / 2.
    // The left side must come out scalar; anything else throws.
    S norm(const AlbertElem<S>& x) const;

    // Coefficient of t in N(x + t y), extracted by exact evaluation at
    // t = 0, 1, -1, 2 and a linear solve.  Equals T(x#, y).
    S norm_derivative(const AlbertElem<S>& x, const AlbertElem<S>& y) const;

    // The adjoint x# defined by T(x#, y) = d/dt N(x + t y): assembled from
    // norm_derivative over the basis and one Gram solve.  This is the
    // reference route; sharp() evaluates the cached quadratic table.
    AlbertElem<S> sharp_via_derivative(const AlbertElem<S>& x) const;

    AlbertElem<S> sharp(const AlbertElem<S>& x) const;
    AlbertElem<S> cross(const AlbertElem<S>& x, const AlbertElem<S>& y) const;

    // <x, y> j = ( y x (x x j) - T(j, y) x - T(x, y)/3 j ) / 2, as an
    // endomorphism in the standard basis.
    Matrix<S> bracket(const AlbertElem<S>& x, const AlbertElem<S>& y) const;
    AlbertElem<S> bracket_apply(const AlbertElem<S>& x, const AlbertElem<S>& y,
                                const AlbertElem<S>& j) const;

    // Solves T(x, .) = f for x; SingularGram can only fire on a broken
    // context because the Gram inverse is built in the constructor.
    AlbertElem<S> dual_solve(const std::vector<S>& covector) const;

    // Adjoint f* with T(f x, y) = T(x, f* y), and dagger = (f^-1)*.
    Matrix<S> adjoint(const Matrix<S>& f) const;
    Matrix<S> dagger(const Matrix<S>& f) const;

    // Norm similarity with multiplier lambda: scales the diagonal as
    // (l e0, l e1, 1/l e2) and the c slot by l.
    Matrix<S> norm_similarity(const S& lambda) const;
    // Norm isometry from a diagonal triple with l0 l1 l2 = 1.
    Matrix<S> diag_isometry(const S& l0, const S& l1, const S& l2) const;

    bool is_rank_one(const AlbertElem<S>& x) const;
    AlbertElem<S> random_rank_one(RandomSource& rng) const;
    AlbertElem<S> random_element(RandomSource& rng, bool integer_only = false) const;

    // Hyperline d x J for d of rank one; always 10-dimensional.
    Subspace<S> hyperline(const AlbertElem<S>& d) const;

    bool is_totally_singular(const Subspace<S>& w) const;

    // W |-> { j : <w, j> = 0 for all w in W }; inclusion-reversing.
    Subspace<S> duality_map(const Subspace<S>& w) const;

    // Structure table access: cross of two basis vectors, sparse.
    const SparseVec<S>& cross_basis(int i, int j) const {
        return cross_tab_[i <= j ? tab_index(i, j) : tab_index(j, i)];
    }

private:
    friend AlbertCtx<QuadExt> extend_to_quad(const AlbertCtx<Rat>&, long);

    struct Uninitialized {};
    explicit AlbertCtx(Uninitialized) {}

    static int tab_index(int i, int j) { return i * kAlbertDim + j; }

    void build_gram();
    void build_cross_table();

    std::array<S, 3> gamma_;
    S g02_, g10_, g21_; // embedding twists gamma_0^-1 gamma_2 etc.
    Matrix<S> gram_, gram_inv_;
    std::vector<SparseVec<S>> cross_tab_; // upper triangle, i <= j
};

using RatAlbert = AlbertCtx<Rat>;

} // namespace exalg
