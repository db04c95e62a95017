#pragma once

#include <functional>
#include <vector>

#include "exalg/albert.hpp"

namespace exalg {

inline constexpr int kBrownDim = 56;

// Element of the Brown algebra B(J, F x F, zeta): two scalar corners and two
// Albert-algebra slots.  Coordinate order: alpha, j[27], jp[27], beta.
template <ScalarField S>
struct BrownElem {
    S alpha{};
    AlbertElem<S> j, jp;
    S beta{};

    BrownElem() = default;
    BrownElem(S a, AlbertElem<S> jj, AlbertElem<S> jjp, S b)
        : alpha(std::move(a)), j(std::move(jj)), jp(std::move(jjp)), beta(std::move(b)) {}

    static BrownElem diag(const S& a, const S& b) {
        return BrownElem(a, {}, {}, b);
    }
    static BrownElem one() { return diag(S(1), S(1)); }
    static BrownElem basis(int k);

    std::vector<S> coords() const;
    static BrownElem from_coords(const std::vector<S>& v);

    bool is_zero() const {
        return alpha.is_zero() && beta.is_zero() && j.is_zero() && jp.is_zero();
    }

    BrownElem operator-() const { return BrownElem(-alpha, -j, -jp, -beta); }
    BrownElem& operator+=(const BrownElem& o) {
        alpha += o.alpha;
        j += o.j;
        jp += o.jp;
        beta += o.beta;
        return *this;
    }
    BrownElem& operator-=(const BrownElem& o) {
        alpha -= o.alpha;
        j -= o.j;
        jp -= o.jp;
        beta -= o.beta;
        return *this;
    }
    friend BrownElem operator+(BrownElem x, const BrownElem& y) { x += y; return x; }
    friend BrownElem operator-(BrownElem x, const BrownElem& y) { x -= y; return x; }
    friend BrownElem operator*(const S& s, BrownElem x) {
        x.alpha = s * x.alpha;
        x.j = s * x.j;
        x.jp = s * x.jp;
        x.beta = s * x.beta;
        return x;
    }
    friend bool operator==(const BrownElem& x, const BrownElem& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.j == y.j && x.jp == y.jp;
    }
    friend bool operator!=(const BrownElem& x, const BrownElem& y) { return !(x == y); }
};

// Split Brown algebra context B(J, F x F, zeta) with a chosen skew generator
// s0 = skew_scale * diag(1, -1).  Structured operations live here; the
// tensor-backed coordinate engine for ideals and flags is FtsAlgebra.
template <ScalarField S>
class BrownCtx {
public:
    explicit BrownCtx(AlbertCtx<S> albert, S zeta = S(1), S skew_scale = S(1));

    const AlbertCtx<S>& albert() const { return albert_; }
    const S& zeta() const { return zeta_; }
    const BrownElem<S>& s0() const { return s0_; }
    const S& mu() const { return mu_; }
    const S& skew_scale() const { return skew_scale_; }

    BrownElem<S> mul(const BrownElem<S>& x, const BrownElem<S>& y) const;
    BrownElem<S> bar(const BrownElem<S>& x) const {
        return BrownElem<S>(x.beta, x.j, x.jp, x.alpha);
    }

    // {x, y, z} = (x ybar) z + (z ybar) x - (z xbar) y
    BrownElem<S> brace(const BrownElem<S>& x, const BrownElem<S>& y,
                       const BrownElem<S>& z) const;
    BrownElem<S> u_apply(const BrownElem<S>& e, const BrownElem<S>& x) const {
        return brace(e, x, e);
    }

    // psi(x, y) = x ybar - y xbar; always a multiple of s0.
    BrownElem<S> skew_psi(const BrownElem<S>& x, const BrownElem<S>& y) const;
    // The coefficient lambda with psi(x, y) = lambda s0; throws NotSkewSpan.
    S skew_psi_coeff(const BrownElem<S>& x, const BrownElem<S>& y) const;

    // b(x, y) resolved as a scalar through psi(x, y) s0 = b(x, y) 1.
    S b_form(const BrownElem<S>& x, const BrownElem<S>& y) const {
        return skew_psi_coeff(x, y) * mu_;
    }
    BrownElem<S> t_triple(const BrownElem<S>& y, const BrownElem<S>& z,
                          const BrownElem<S>& w) const;
    S q_form(const BrownElem<S>& x, const BrownElem<S>& y, const BrownElem<S>& z,
             const BrownElem<S>& w) const {
        return b_form(x, t_triple(y, z, w));
    }
    S nu(const BrownElem<S>& x) const {
        return q_form(x, x, x, x) / (S(12) * mu_);
    }

    // Outer flip (alpha, j, j', beta) -> (beta, j', j, alpha); an algebra
    // automorphism of B(J, F x F).  Requires zeta = 1.
    BrownElem<S> outer_flip(const BrownElem<S>& x) const;

    enum class Side { Lower, Upper };

    // Translation automorphisms of the zeta = 1 triple system, parametrized
    // by an Albert element k.  Lower adds into the j slot from beta, upper
    // into the j' slot from alpha; inverses are the maps at -k.
    BrownElem<S> translate(Side side, const AlbertElem<S>& k, const BrownElem<S>& x) const;
    Matrix<S> translation_matrix(Side side, const AlbertElem<S>& k) const;

    // Embeds a norm similarity phi of J into the invariance group of the
    // triple system: (alpha, j, j', beta) -> (alpha/l, phi j, phi-dagger j',
    // l beta) with l the multiplier of phi.  Throws NotSimilarity.
    Matrix<S> similarity_embed(const Matrix<S>& phi) const;

    // Detects the multiplier of a norm similarity on a probe set.
    S similarity_multiplier(const Matrix<S>& phi) const;

    // The similarity B(J, F x F) -> B(J, F x F, zeta2): scales alpha by zeta2.
    // Requires this context to be the zeta = 1 source; the target shares J.
    Matrix<S> zeta_similarity(const BrownCtx<S>& target) const;

    // Isomorphism B(J, F x F, zeta) -> B(J, F x F, zeta^2):
    // (alpha, j, j', beta) -> (beta, j', j/zeta, alpha).
    BrownElem<S> zeta_square_iso(const BrownElem<S>& x) const;

    // m = phi_{-1/(2 delta)} psi_delta h with h = (alpha/delta, delta j, j',
    // delta^2 beta); moves the canonical descent singular pair into standard
    // position.  Requires zeta = 1 and an invertible delta with delta^2 in
    // the base field.
    BrownElem<S> descent_reduction(const S& delta, const BrownElem<S>& x) const;
    Matrix<S> descent_reduction_matrix(const S& delta) const;

    BrownElem<S> random_element(RandomSource& rng, bool integer_only = false) const;

    Matrix<S> matrix_of(const std::function<BrownElem<S>(const BrownElem<S>&)>& f) const;

private:
    void require_zeta_one(const char* what) const;

    AlbertCtx<S> albert_;
    S zeta_;
    S skew_scale_;
    BrownElem<S> s0_;
    S mu_;
};

// Quadratic descent data: the Brown algebra B(J, Delta) for Delta =
// Q(sqrt d), realized as the fixed points of flip tensor conjugation inside
// the split algebra over Delta.  Provides the F-basis and the coordinate
// maps; FtsAlgebra::from_descent builds the rational engine on top.
class QuadDescent {
public:
    explicit QuadDescent(long d, std::array<Rat, 3> gamma = {Rat(1), Rat(1), Rat(1)});

    long d() const { return d_; }
    QuadExt delta() const { return QuadExt::sqrt_d(d_); }
    const BrownCtx<QuadExt>& upstairs() const { return upstairs_; }

    // delta * diag(1, -1); squares to d.
    const BrownElem<QuadExt>& s0() const { return s0_; }

    bool is_descent(const BrownElem<QuadExt>& x) const;
    const BrownElem<QuadExt>& basis(int i) const { return basis_[i]; }

    std::vector<Rat> to_coords(const BrownElem<QuadExt>& x) const;
    BrownElem<QuadExt> from_coords(const std::vector<Rat>& v) const;

    BrownElem<QuadExt> random_element(RandomSource& rng, bool integer_only = false) const;

private:
    long d_;
    BrownCtx<QuadExt> upstairs_;
    BrownElem<QuadExt> s0_;
    std::vector<BrownElem<QuadExt>> basis_;
};

} // namespace exalg
