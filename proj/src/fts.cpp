#include "exalg/fts.hpp"

#include "exalg/parallel.hpp"

namespace exalg {

FtsAlgebra FtsAlgebra::from_split(const BrownCtx<Rat>& ctx) {
    FtsAlgebra f;
    f.label_ = "split zeta=" + ctx.zeta().str();
    f.tensor_.resize(kBrownDim * kBrownDim);
    std::vector<BrownElem<Rat>> basis;
    for (int k = 0; k < kBrownDim; ++k) basis.push_back(BrownElem<Rat>::basis(k));
    par::parallel_for(kBrownDim, [&](int i) {
        for (int j = 0; j < kBrownDim; ++j) {
            auto prod = ctx.mul(basis[i], basis[j]).coords();
            SparseVec<Rat>& c = f.tensor_[i * kBrownDim + j];
            for (int k = 0; k < kBrownDim; ++k)
                if (!prod[k].is_zero()) c.emplace_back(k, prod[k]);
        }
    });
    for (int k = 0; k < kBrownDim; ++k) {
        auto b = ctx.bar(basis[k]).coords();
        int where = -1;
        for (int r = 0; r < kBrownDim; ++r)
            if (!b[r].is_zero()) {
                if (where >= 0) throw SelfCheckFailed("involution is not a signed permutation");
                where = r;
            }
        f.bar_perm_[k] = where;
        f.bar_sign_[k] = b[where] == Rat(1) ? 1 : -1;
    }
    f.s0_ = ctx.s0().coords();
    f.mu_ = ctx.mu();
    f.unit_ = BrownElem<Rat>::one().coords();
    f.finish_build();
    return f;
}

FtsAlgebra FtsAlgebra::from_descent(const QuadDescent& qd, const Rat& skew_scale) {
    if (skew_scale.is_zero()) throw InvalidMultiplier("skew generator scale must be nonzero");
    FtsAlgebra f;
    f.label_ = "descent d=" + std::to_string(qd.d());
    f.tensor_.resize(kBrownDim * kBrownDim);
    const BrownCtx<QuadExt>& up = qd.upstairs();
    // Products of descent basis elements stay in the descent algebra; the
    // coordinate extraction throws NotFixed if that ever failed.
    par::parallel_for(kBrownDim, [&](int i) {
        for (int j = 0; j < kBrownDim; ++j) {
            auto prod = qd.to_coords(up.mul(qd.basis(i), qd.basis(j)));
            SparseVec<Rat>& c = f.tensor_[i * kBrownDim + j];
            for (int k = 0; k < kBrownDim; ++k)
                if (!prod[k].is_zero()) c.emplace_back(k, prod[k]);
        }
    });
    for (int k = 0; k < kBrownDim; ++k) {
        auto b = qd.to_coords(up.bar(qd.basis(k)));
        int where = -1;
        for (int r = 0; r < kBrownDim; ++r)
            if (!b[r].is_zero()) {
                if (where >= 0) throw SelfCheckFailed("involution is not a signed permutation");
                where = r;
            }
        f.bar_perm_[k] = where;
        f.bar_sign_[k] = b[where] == Rat(1) ? 1 : -1;
    }
    f.s0_ = qd.to_coords(qd.s0());
    for (Rat& v : f.s0_) v = skew_scale * v;
    f.mu_ = skew_scale * skew_scale * Rat(qd.d());
    f.unit_ = qd.to_coords(BrownElem<QuadExt>::one());
    f.finish_build();
    return f;
}

void FtsAlgebra::finish_build() {
    // The skew generator must be skew and square to mu * 1.
    Vec neg = bar(s0_);
    for (int k = 0; k < kBrownDim; ++k) neg[k] += s0_[k];
    if (!vec_is_zero(neg)) throw SelfCheckFailed("s0 is not skew");
    Vec sq = mul(s0_, s0_);
    for (int k = 0; k < kBrownDim; ++k)
        if (!(sq[k] == mu_ * unit_[k])) throw SelfCheckFailed("s0^2 is not mu * 1");
    // Gram matrix of b via the definitional route.
    bgram_ = RatMatrix(kBrownDim, kBrownDim);
    for (int i = 0; i < kBrownDim; ++i)
        for (int j = i + 1; j < kBrownDim; ++j) {
            Rat v = b_via_psi(basis_vec(i), basis_vec(j));
            bgram_.at(i, j) = v;
            bgram_.at(j, i) = -v;
        }
}

Vec FtsAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec acc(kBrownDim);
    static thread_local Rat prod;
    for (int i = 0; i < kBrownDim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < kBrownDim; ++j) {
            if (y[j].is_zero()) continue;
            const SparseVec<Rat>& c = cell(i, j);
            if (c.empty()) continue;
            prod = x[i] * y[j];
            for (const auto& [k, coef] : c) Rat::addmul(acc[k], prod, coef);
        }
    }
    return acc;
}

Vec FtsAlgebra::bar(const Vec& x) const {
    Vec y(kBrownDim);
    for (int k = 0; k < kBrownDim; ++k) {
        if (x[k].is_zero()) continue;
        y[bar_perm_[k]] = bar_sign_[k] > 0 ? x[k] : -x[k];
    }
    return y;
}

Vec FtsAlgebra::brace(const Vec& x, const Vec& y, const Vec& z) const {
    Vec ybar = bar(y);
    Vec out = mul(mul(x, ybar), z);
    Vec t2 = mul(mul(z, ybar), x);
    Vec t3 = mul(mul(z, bar(x)), y);
    for (int k = 0; k < kBrownDim; ++k) out[k] = out[k] + t2[k] - t3[k];
    return out;
}

Vec FtsAlgebra::u_apply(const Vec& e, const Vec& x) const {
    Vec m = mul(e, bar(x));
    Vec out = mul(m, e);
    Vec corr = mul(mul(e, bar(e)), x);
    for (int k = 0; k < kBrownDim; ++k) out[k] = Rat(2) * out[k] - corr[k];
    return out;
}

RatMatrix FtsAlgebra::left_mul_matrix(const Vec& e) const {
    RatMatrix m(kBrownDim, kBrownDim);
    for (int i = 0; i < kBrownDim; ++i) {
        if (e[i].is_zero()) continue;
        for (int k = 0; k < kBrownDim; ++k)
            for (const auto& [r, coef] : cell(i, k)) Rat::addmul(m.at(r, k), e[i], coef);
    }
    return m;
}

RatMatrix FtsAlgebra::right_mul_matrix(const Vec& e) const {
    RatMatrix m(kBrownDim, kBrownDim);
    for (int j = 0; j < kBrownDim; ++j) {
        if (e[j].is_zero()) continue;
        for (int k = 0; k < kBrownDim; ++k)
            for (const auto& [r, coef] : cell(k, j)) Rat::addmul(m.at(r, k), e[j], coef);
    }
    return m;
}

namespace {

// L composed with the involution: permute and sign the columns.
RatMatrix compose_bar(const RatMatrix& l, const std::array<int, kBrownDim>& perm,
                      const std::array<int, kBrownDim>& sign) {
    RatMatrix out(kBrownDim, kBrownDim);
    for (int k = 0; k < kBrownDim; ++k) {
        int src = perm[k];
        for (int r = 0; r < kBrownDim; ++r)
            out.at(r, k) = sign[k] > 0 ? l.at(r, src) : -l.at(r, src);
    }
    return out;
}

RatMatrix outer(const Vec& u, const Vec& cov) {
    RatMatrix m(kBrownDim, kBrownDim);
    for (int r = 0; r < kBrownDim; ++r) {
        if (u[r].is_zero()) continue;
        for (int c = 0; c < kBrownDim; ++c)
            if (!cov[c].is_zero()) m.at(r, c) = u[r] * cov[c];
    }
    return m;
}

} // namespace

RatMatrix FtsAlgebra::u_matrix(const Vec& e) const {
    RatMatrix le_bar = compose_bar(left_mul_matrix(e), bar_perm_, bar_sign_);
    RatMatrix prod = right_mul_matrix(e) * le_bar;
    RatMatrix corr = left_mul_matrix(mul(e, bar(e)));
    for (int r = 0; r < kBrownDim; ++r)
        for (int c = 0; c < kBrownDim; ++c)
            prod.at(r, c) = Rat(2) * prod.at(r, c) - corr.at(r, c);
    return prod;
}

RatMatrix FtsAlgebra::polarized_u_matrix(const Vec& e, const Vec& f) const {
    // (U_{e+f} - U_e - U_f) x = 2 (e xbar) f + 2 (f xbar) e - (e fbar + f ebar) x
    RatMatrix a = right_mul_matrix(f) * compose_bar(left_mul_matrix(e), bar_perm_, bar_sign_);
    RatMatrix b = right_mul_matrix(e) * compose_bar(left_mul_matrix(f), bar_perm_, bar_sign_);
    Vec mixed = mul(e, bar(f));
    Vec mixed2 = mul(f, bar(e));
    for (int k = 0; k < kBrownDim; ++k) mixed[k] += mixed2[k];
    RatMatrix corr = left_mul_matrix(mixed);
    RatMatrix out(kBrownDim, kBrownDim);
    for (int r = 0; r < kBrownDim; ++r)
        for (int c = 0; c < kBrownDim; ++c)
            out.at(r, c) = Rat(2) * (a.at(r, c) + b.at(r, c)) - corr.at(r, c);
    return out;
}

RatMatrix FtsAlgebra::v_matrix(const Vec& x, const Vec& y) const {
    RatMatrix lxy = left_mul_matrix(mul(x, bar(y)));
    RatMatrix a = right_mul_matrix(x) * right_mul_matrix(bar(y));
    RatMatrix b = right_mul_matrix(y) * right_mul_matrix(bar(x));
    return lxy + a - b;
}

RatMatrix FtsAlgebra::t_matrix(const Vec& u, const Vec& v) const {
    // z -> 2 {u, s0 v, z} - b(v, z) u - b(v, u) z - b(u, z) v
    Vec w = mul(s0_, v);
    Vec wbar = bar(w);
    RatMatrix m = left_mul_matrix(mul(u, wbar));
    m += right_mul_matrix(u) * right_mul_matrix(wbar);
    m -= right_mul_matrix(w) * right_mul_matrix(bar(u));
    Vec bv = bgram_.apply(v), bu = bgram_.apply(u);
    // b(v, z) = -(B v) . z and likewise for u, since b is skew.
    for (Rat& r : bv) r = -r;
    for (Rat& r : bu) r = -r;
    RatMatrix out = m.scaled(Rat(2));
    out -= outer(u, bv);
    out -= outer(v, bu);
    Rat bvu = b(v, u);
    for (int k = 0; k < kBrownDim; ++k) out.at(k, k) -= bvu;
    return out;
}

Rat FtsAlgebra::b_via_psi(const Vec& x, const Vec& y) const {
    Vec psi = mul(x, bar(y));
    Vec t2 = mul(y, bar(x));
    for (int k = 0; k < kBrownDim; ++k) psi[k] -= t2[k];
    // psi must be lambda * s0; find lambda at a support coordinate of s0.
    int pivot = 0;
    while (s0_[pivot].is_zero()) ++pivot;
    Rat lambda = psi[pivot] / s0_[pivot];
    for (int k = 0; k < kBrownDim; ++k)
        if (!(psi[k] == lambda * s0_[k])) throw NotSkewSpan("psi(x, y) escaped the skew line");
    return lambda * mu_;
}

Rat FtsAlgebra::b(const Vec& x, const Vec& y) const {
    Rat acc(0);
    for (int i = 0; i < kBrownDim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < kBrownDim; ++j)
            if (!bgram_.at(i, j).is_zero() && !y[j].is_zero())
                Rat::addmul(acc, x[i] * bgram_.at(i, j), y[j]);
    }
    return acc;
}

Vec FtsAlgebra::t(const Vec& y, const Vec& z, const Vec& w) const {
    Vec out = brace(y, mul(s0_, z), w);
    Rat bzw = b(z, w), bzy = b(z, y), byw = b(y, w);
    for (int k = 0; k < kBrownDim; ++k) {
        out[k] = Rat(2) * out[k];
        Rat::submul(out[k], bzw, y[k]);
        Rat::submul(out[k], bzy, w[k]);
        Rat::submul(out[k], byw, z[k]);
    }
    return out;
}

Rat FtsAlgebra::q(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
    return b(x, t(y, z, w));
}

Rat FtsAlgebra::nu(const Vec& x) const { return q(x, x, x, x) / (Rat(12) * mu_); }

std::vector<RatMatrix> FtsAlgebra::u_matrices(const std::vector<Vec>& es) const {
    std::vector<RatMatrix> out(es.size());
    par::parallel_for(static_cast<int>(es.size()), [&](int i) { out[i] = u_matrix(es[i]); });
    return out;
}

Vec FtsAlgebra::random_element(RandomSource& rng, bool integer_only) const {
    return rng.coords<Rat>(kBrownDim, integer_only);
}

} // namespace exalg
