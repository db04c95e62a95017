#include "exalg/albert.hpp"

#include <algorithm>

#include "exalg/parallel.hpp"

namespace exalg {

// ---------------------------------------------------------------- elements

template <ScalarField S>
AlbertElem<S> AlbertElem<S>::basis(int k) {
    AlbertElem x;
    if (k < 3)
        x.eps[k] = S(1);
    else if (k < 11)
        x.a.c[k - 3] = S(1);
    else if (k < 19)
        x.b.c[k - 11] = S(1);
    else
        x.c.c[k - 19] = S(1);
    return x;
}

template <ScalarField S>
std::vector<S> AlbertElem<S>::coords() const {
    std::vector<S> v;
    v.reserve(kAlbertDim);
    v.push_back(eps[0]);
    v.push_back(eps[1]);
    v.push_back(eps[2]);
    for (int i = 0; i < kOctDim; ++i) v.push_back(a.c[i]);
    for (int i = 0; i < kOctDim; ++i) v.push_back(b.c[i]);
    for (int i = 0; i < kOctDim; ++i) v.push_back(c.c[i]);
    return v;
}

template <ScalarField S>
AlbertElem<S> AlbertElem<S>::from_coords(const std::vector<S>& v) {
    if (v.size() != kAlbertDim) throw DimensionMismatch("Albert element needs 27 coordinates");
    AlbertElem x;
    x.eps = {v[0], v[1], v[2]};
    for (int i = 0; i < kOctDim; ++i) x.a.c[i] = v[3 + i];
    for (int i = 0; i < kOctDim; ++i) x.b.c[i] = v[11 + i];
    for (int i = 0; i < kOctDim; ++i) x.c.c[i] = v[19 + i];
    return x;
}

template <ScalarField S>
bool AlbertElem<S>::is_zero() const {
    return eps[0].is_zero() && eps[1].is_zero() && eps[2].is_zero() && a.is_zero() &&
           b.is_zero() && c.is_zero();
}

template <ScalarField S>
AlbertElem<S> AlbertElem<S>::operator-() const {
    AlbertElem x;
    x.eps = {-eps[0], -eps[1], -eps[2]};
    x.a = -a;
    x.b = -b;
    x.c = -c;
    return x;
}

template <ScalarField S>
AlbertElem<S>& AlbertElem<S>::operator+=(const AlbertElem& o) {
    for (int i = 0; i < 3; ++i) eps[i] += o.eps[i];
    a += o.a;
    b += o.b;
    c += o.c;
    return *this;
}

template <ScalarField S>
AlbertElem<S>& AlbertElem<S>::operator-=(const AlbertElem& o) {
    for (int i = 0; i < 3; ++i) eps[i] -= o.eps[i];
    a -= o.a;
    b -= o.b;
    c -= o.c;
    return *this;
}

// ---------------------------------------------------------------- context

template <ScalarField S>
AlbertCtx<S>::AlbertCtx(std::array<S, 3> gamma) : gamma_(std::move(gamma)) {
    for (const S& g : gamma_)
        if (g.is_zero()) throw InvalidMultiplier("gamma entries must be nonzero");
    cayley_self_check();
    g02_ = gamma_[0].inverse() * gamma_[2];
    g10_ = gamma_[1].inverse() * gamma_[0];
    g21_ = gamma_[2].inverse() * gamma_[1];
    build_gram();
    build_cross_table();
}

namespace {

// 3x3 matrix over the Cayley algebra, used only as the representation space
// for the Jordan product.
template <ScalarField S>
using OctMat = std::array<std::array<Oct<S>, 3>, 3>;

template <ScalarField S>
OctMat<S> mat_mul(const OctMat<S>& x, const OctMat<S>& y) {
    OctMat<S> z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) z[i][j] += oct_mul(x[i][k], y[k][j]);
    return z;
}

template <ScalarField S>
Oct<S> scalar_oct(const S& s) {
    Oct<S> u;
    u.c[3] = s;
    u.c[4] = s;
    return u;
}

// Reads a scalar multiple of the octonion unit; nullopt when the entry is
// not scalar.
template <ScalarField S>
std::optional<S> read_scalar(const Oct<S>& u) {
    if (!(u.c[3] == u.c[4])) return std::nullopt;
    for (int i : {0, 1, 2, 5, 6, 7})
        if (!u.c[i].is_zero()) return std::nullopt;
    return u.c[3];
}

} // namespace

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::jordan_mul(const AlbertElem<S>& x, const AlbertElem<S>& y) const {
    auto embed = [this](const AlbertElem<S>& e) {
        OctMat<S> m;
        m[0][0] = scalar_oct(e.eps[0]);
        m[1][1] = scalar_oct(e.eps[1]);
        m[2][2] = scalar_oct(e.eps[2]);
        m[0][1] = e.c;
        m[0][2] = g02_ * oct_conj(e.b);
        m[1][0] = g10_ * oct_conj(e.c);
        m[1][2] = e.a;
        m[2][0] = e.b;
        m[2][1] = g21_ * oct_conj(e.a);
        return m;
    };
    OctMat<S> xm = embed(x), ym = embed(y);
    OctMat<S> p = mat_mul(xm, ym), q = mat_mul(ym, xm);
    const S half = S(1) / S(2);
    OctMat<S> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = half * (p[i][j] + q[i][j]);

    AlbertElem<S> out;
    for (int i = 0; i < 3; ++i) {
        auto s = read_scalar(r[i][i]);
        if (!s) throw ReadbackMismatch("diagonal of symmetrized product is not scalar");
        out.eps[i] = *s;
    }
    out.a = r[1][2];
    out.b = r[2][0];
    out.c = r[0][1];
    if (r[0][2] != g02_ * oct_conj(out.b) || r[1][0] != g10_ * oct_conj(out.c) ||
        r[2][1] != g21_ * oct_conj(out.a))
        throw ReadbackMismatch("symmetrized product left the hermitian shape");
    return out;
}

template <ScalarField S>
void AlbertCtx<S>::build_gram() {
    gram_ = Matrix<S>(kAlbertDim, kAlbertDim);
    for (int i = 0; i < kAlbertDim; ++i) {
        AlbertElem<S> bi = AlbertElem<S>::basis(i);
        for (int j = i; j < kAlbertDim; ++j) {
            S t = trace(jordan_mul(bi, AlbertElem<S>::basis(j)));
            gram_.at(i, j) = t;
            gram_.at(j, i) = t;
        }
    }
    try {
        gram_inv_ = gram_.inverse();
    } catch (const NotInvertible&) {
        throw SingularGram("trace form is degenerate; context is broken");
    }
}

template <ScalarField S>
S AlbertCtx<S>::trace_form(const AlbertElem<S>& x, const AlbertElem<S>& y) const {
    auto xv = x.coords();
    auto yv = y.coords();
    S acc(0);
    for (int i = 0; i < kAlbertDim; ++i) {
        if (xv[i].is_zero()) continue;
        for (int j = 0; j < kAlbertDim; ++j)
            if (!gram_.at(i, j).is_zero() && !yv[j].is_zero())
                scalar_addmul(acc, xv[i] * gram_.at(i, j), yv[j]);
    }
    return acc;
}

template <ScalarField S>
S AlbertCtx<S>::norm(const AlbertElem<S>& x) const {
    AlbertElem<S> x2 = jordan_mul(x, x);
    AlbertElem<S> x3 = jordan_mul(x2, x);
    S t = trace(x);
    S s = (t * t - trace(x2)) / S(2);
    AlbertElem<S> r = x3 - t * x2 + s * x;
    if (!(r.eps[0] == r.eps[1]) || !(r.eps[0] == r.eps[2]) || !r.a.is_zero() ||
        !r.b.is_zero() || !r.c.is_zero())
        throw NotScalarMultiple("characteristic identity residual is not scalar");
    return r.eps[0];
}

template <ScalarField S>
S AlbertCtx<S>::norm_derivative(const AlbertElem<S>& x, const AlbertElem<S>& y) const {
    // N(x + t y) = c0 + c1 t + c2 t^2 + c3 t^3; recover c1 from values at
    // t = 0, 1, -1, 2.
    S c0 = norm(x);
    S v1 = norm(x + y);
    S vm = norm(x - y);
    S v2 = norm(x + S(2) * y);
    S a = v1 - c0;          // c1 + c2 + c3
    S b = vm - c0;          // -c1 + c2 - c3
    S c = v2 - c0;          // 2c1 + 4c2 + 8c3
    S c2 = (a + b) / S(2);
    S s = (a - b) / S(2);   // c1 + c3
    S c3 = (c - S(2) * (a + b) - S(2) * s) / S(6);
    return s - c3;
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::sharp_via_derivative(const AlbertElem<S>& x) const {
    std::vector<S> f(kAlbertDim);
    for (int k = 0; k < kAlbertDim; ++k)
        f[k] = norm_derivative(x, AlbertElem<S>::basis(k));
    return dual_solve(f);
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::dual_solve(const std::vector<S>& covector) const {
    return AlbertElem<S>::from_coords(gram_inv_.apply(covector));
}

template <ScalarField S>
void AlbertCtx<S>::build_cross_table() {
    const int n = kAlbertDim;
    // Single, pair, and triple norm evaluations; everything else is linear
    // algebra on top of them.  All inputs here are 1-, 2-, 3-sparse, so the
    // norms are cheap.
    std::vector<S> ns(n);
    for (int i = 0; i < n; ++i) ns[i] = norm(AlbertElem<S>::basis(i));

    auto pidx = [n](int i, int j) { return i * n + j; }; // i < j
    std::vector<S> vplus(n * n), vminus(n * n);
    par::parallel_for(n, [&](int i) {
        AlbertElem<S> bi = AlbertElem<S>::basis(i);
        for (int j = i + 1; j < n; ++j) {
            AlbertElem<S> bj = AlbertElem<S>::basis(j);
            vplus[pidx(i, j)] = norm(bi + bj);
            vminus[pidx(i, j)] = norm(bi - bj);
        }
    });

    // c1(i, j) = T(bi#, bj), for all ordered pairs.
    std::vector<S> c1(n * n);
    for (int i = 0; i < n; ++i) {
        c1[pidx(i, i)] = S(3) * ns[i];
        for (int j = i + 1; j < n; ++j) {
            const S& vp = vplus[pidx(i, j)];
            const S& vm = vminus[pidx(i, j)];
            c1[pidx(i, j)] = (vp - vm) / S(2) - ns[j];
            c1[pidx(j, i)] = (vp + vm) / S(2) - ns[i];
        }
    }

    std::vector<S> triple(n * n * n); // i < j < k only
    auto tidx = [n](int i, int j, int k) { return (i * n + j) * n + k; };
    par::parallel_for(n, [&](int i) {
        AlbertElem<S> bi = AlbertElem<S>::basis(i);
        for (int j = i + 1; j < n; ++j) {
            AlbertElem<S> bij = bi + AlbertElem<S>::basis(j);
            for (int k = j + 1; k < n; ++k)
                triple[tidx(i, j, k)] = norm(bij + AlbertElem<S>::basis(k));
        }
    });

    // T(bi x bj, bk) for i <= j, assembled by polarizing the cubic form,
    // then one Gram solve per pair.
    cross_tab_.assign(n * n, {});
    par::parallel_for(n, [&](int i) {
        for (int j = i; j < n; ++j) {
            std::vector<S> f(n);
            for (int k = 0; k < n; ++k) {
                if (i == j) {
                    f[k] = S(2) * c1[pidx(i, k)];
                } else if (k == i) {
                    f[k] = S(2) * c1[pidx(i, j)];
                } else if (k == j) {
                    f[k] = S(2) * c1[pidx(j, i)];
                } else {
                    int a = i, b = j, c = k;
                    if (c < a) std::swap(a, c);
                    if (b < a) std::swap(a, b);
                    if (c < b) std::swap(b, c);
                    f[k] = triple[tidx(a, b, c)] - vplus[pidx(std::min(i, j), std::max(i, j))] -
                           vplus[pidx(std::min(i, k), std::max(i, k))] -
                           vplus[pidx(std::min(j, k), std::max(j, k))] + ns[i] + ns[j] + ns[k];
                }
            }
            std::vector<S> x = gram_inv_.apply(f);
            SparseVec<S>& cell = cross_tab_[tab_index(i, j)];
            for (int k = 0; k < n; ++k)
                if (!x[k].is_zero()) cell.emplace_back(k, x[k]);
        }
    });
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::cross(const AlbertElem<S>& x, const AlbertElem<S>& y) const {
    auto u = x.coords();
    auto v = y.coords();
    std::vector<S> acc(kAlbertDim);
    static thread_local S prod;
    for (int i = 0; i < kAlbertDim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < kAlbertDim; ++j) {
            if (v[j].is_zero()) continue;
            const SparseVec<S>& cell = cross_basis(i, j);
            if (cell.empty()) continue;
            prod = u[i] * v[j];
            for (const auto& [k, coef] : cell) scalar_addmul(acc[k], prod, coef);
        }
    }
    return AlbertElem<S>::from_coords(acc);
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::sharp(const AlbertElem<S>& x) const {
    auto u = x.coords();
    std::vector<S> acc(kAlbertDim);
    static thread_local S prod;
    for (int i = 0; i < kAlbertDim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = i; j < kAlbertDim; ++j) {
            if (u[j].is_zero()) continue;
            const SparseVec<S>& cell = cross_tab_[tab_index(i, j)];
            if (cell.empty()) continue;
            prod = u[i] * u[j];
            if (i == j) {
                // diagonal cell is bi x bi = 2 bi#; halve at the end
                for (const auto& [k, coef] : cell) scalar_addmul(acc[k], prod, coef);
            } else {
                prod = S(2) * prod;
                for (const auto& [k, coef] : cell) scalar_addmul(acc[k], prod, coef);
            }
        }
    }
    const S half = S(1) / S(2);
    for (S& v : acc) v = half * v;
    return AlbertElem<S>::from_coords(acc);
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::bracket_apply(const AlbertElem<S>& x, const AlbertElem<S>& y,
                                          const AlbertElem<S>& j) const {
    AlbertElem<S> inner = cross(x, j);
    AlbertElem<S> out = cross(y, inner);
    out -= trace_form(j, y) * x;
    S third = trace_form(x, y) / S(3);
    out -= third * j;
    const S half = S(1) / S(2);
    return half * out;
}

template <ScalarField S>
Matrix<S> AlbertCtx<S>::bracket(const AlbertElem<S>& x, const AlbertElem<S>& y) const {
    Matrix<S> m(kAlbertDim, kAlbertDim);
    for (int col = 0; col < kAlbertDim; ++col) {
        AlbertElem<S> img = bracket_apply(x, y, AlbertElem<S>::basis(col));
        auto v = img.coords();
        for (int r = 0; r < kAlbertDim; ++r) m.at(r, col) = v[r];
    }
    return m;
}

template <ScalarField S>
Matrix<S> AlbertCtx<S>::adjoint(const Matrix<S>& f) const {
    return gram_inv_ * f.transpose() * gram_;
}

template <ScalarField S>
Matrix<S> AlbertCtx<S>::dagger(const Matrix<S>& f) const {
    return adjoint(f.inverse());
}

template <ScalarField S>
Matrix<S> AlbertCtx<S>::norm_similarity(const S& lambda) const {
    if (lambda.is_zero()) throw InvalidMultiplier("similarity multiplier must be nonzero");
    Matrix<S> m(kAlbertDim, kAlbertDim);
    S linv = lambda.inverse();
    m.at(0, 0) = lambda;
    m.at(1, 1) = lambda;
    m.at(2, 2) = linv;
    for (int i = 3; i < 19; ++i) m.at(i, i) = S(1);
    for (int i = 19; i < 27; ++i) m.at(i, i) = lambda;
    return m;
}

template <ScalarField S>
Matrix<S> AlbertCtx<S>::diag_isometry(const S& l0, const S& l1, const S& l2) const {
    if (l0.is_zero() || l1.is_zero() || l2.is_zero())
        throw InvalidMultiplier("isometry parameters must be nonzero");
    if (!(l0 * l1 * l2 == S(1)))
        throw InvalidMultiplier("isometry parameters must have product 1");
    Matrix<S> m(kAlbertDim, kAlbertDim);
    m.at(0, 0) = (l0 * l0).inverse();
    m.at(1, 1) = (l1 * l1).inverse();
    m.at(2, 2) = (l2 * l2).inverse();
    for (int i = 0; i < kOctDim; ++i) {
        m.at(3 + i, 3 + i) = l0;
        m.at(11 + i, 11 + i) = l1;
        m.at(19 + i, 19 + i) = l2;
    }
    return m;
}

template <ScalarField S>
bool AlbertCtx<S>::is_rank_one(const AlbertElem<S>& x) const {
    return !x.is_zero() && sharp(x).is_zero();
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::random_element(RandomSource& rng, bool integer_only) const {
    // keep generated quadratic scalars in this context's extension
    if (long d = scalar_quad_d(gamma_[0])) rng.set_quad_d(d);
    return AlbertElem<S>::from_coords(rng.coords<S>(kAlbertDim, integer_only));
}

template <ScalarField S>
AlbertElem<S> AlbertCtx<S>::random_rank_one(RandomSource& rng) const {
    // Draw x, solve N(x) = 0 for the first diagonal coordinate (the norm is
    // affine in it), and return x#: since x## = N(x) x = 0, the adjoint is
    // rank one whenever it is nonzero.
    for (int attempt = 0; attempt < 64; ++attempt) {
        AlbertElem<S> x = random_element(rng, true);
        x.eps[0] = S(0);
        S b = norm(x);
        x.eps[0] = S(1);
        S a = norm(x) - b;
        if (a.is_zero()) continue;
        x.eps[0] = -b / a;
        AlbertElem<S> d = sharp(x);
        if (d.is_zero()) continue;
        return d;
    }
    throw SamplerDegenerate("rank-one sampler failed repeatedly");
}

template <ScalarField S>
Subspace<S> AlbertCtx<S>::hyperline(const AlbertElem<S>& d) const {
    if (!is_rank_one(d)) throw NotRankOne("hyperline requires a rank-one element");
    std::vector<std::vector<S>> rows;
    rows.reserve(kAlbertDim);
    for (int k = 0; k < kAlbertDim; ++k)
        rows.push_back(cross(d, AlbertElem<S>::basis(k)).coords());
    return Subspace<S>::span(kAlbertDim, rows);
}

template <ScalarField S>
bool AlbertCtx<S>::is_totally_singular(const Subspace<S>& w) const {
    if (w.ambient_dim() != kAlbertDim) throw AmbientMismatch("expected ambient dimension 27");
    std::vector<AlbertElem<S>> basis;
    for (int i = 0; i < w.dim(); ++i)
        basis.push_back(AlbertElem<S>::from_coords(w.basis_vector(i)));
    // Basis sharps plus pairwise crosses vanish iff every element has sharp
    // zero (polarization, characteristic 0).
    for (const auto& u : basis)
        if (!sharp(u).is_zero()) return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!cross(basis[i], basis[j]).is_zero()) return false;
    return true;
}

template <ScalarField S>
Subspace<S> AlbertCtx<S>::duality_map(const Subspace<S>& w) const {
    if (w.ambient_dim() != kAlbertDim) throw AmbientMismatch("expected ambient dimension 27");
    Subspace<S> k = Subspace<S>::full(kAlbertDim);
    for (int r = 0; r < w.dim() && k.dim() > 0; ++r) {
        AlbertElem<S> wr = AlbertElem<S>::from_coords(w.basis_vector(r));
        // Linear conditions on j: every entry of <wr, j> vanishes.  Column
        // jdx of the condition matrix is the flattened endomorphism
        // <wr, b_jdx>.
        std::vector<Matrix<S>> per_basis(kAlbertDim);
        par::parallel_for(kAlbertDim, [&](int jdx) {
            per_basis[jdx] = bracket(wr, AlbertElem<S>::basis(jdx));
        });
        std::vector<std::vector<S>> cond_rows;
        for (int l = 0; l < kAlbertDim; ++l) {
            for (int m = 0; m < kAlbertDim; ++m) {
                std::vector<S> row(kAlbertDim);
                bool nonzero = false;
                for (int jdx = 0; jdx < kAlbertDim; ++jdx) {
                    row[jdx] = per_basis[jdx].at(l, m);
                    nonzero = nonzero || !row[jdx].is_zero();
                }
                if (nonzero) cond_rows.push_back(std::move(row));
            }
        }
        if (cond_rows.empty()) continue;
        // Restrict the conditions to the current candidate space and shrink.
        Matrix<S> e = rows_to_matrix(cond_rows, kAlbertDim);
        Matrix<S> restricted = e * k.basis().transpose();
        Matrix<S> tbasis = restricted.kernel();
        Matrix<S> newk = tbasis * k.basis();
        k = Subspace<S>::span(std::move(newk));
    }
    return k;
}

AlbertCtx<QuadExt> extend_to_quad(const AlbertCtx<Rat>& base, long d) {
    if (!quad_param_ok(d))
        throw FieldMismatch("d = " + std::to_string(d) + " does not define a quadratic field");
    auto lift = [d](const Rat& r) { return QuadExt(r, Rat(0), d); };
    AlbertCtx<QuadExt> out{AlbertCtx<QuadExt>::Uninitialized{}};
    for (int i = 0; i < 3; ++i) out.gamma_[i] = lift(base.gamma_[i]);
    out.g02_ = lift(base.g02_);
    out.g10_ = lift(base.g10_);
    out.g21_ = lift(base.g21_);
    out.gram_ = Matrix<QuadExt>(kAlbertDim, kAlbertDim);
    out.gram_inv_ = Matrix<QuadExt>(kAlbertDim, kAlbertDim);
    for (int i = 0; i < kAlbertDim; ++i)
        for (int j = 0; j < kAlbertDim; ++j) {
            out.gram_.at(i, j) = lift(base.gram_.at(i, j));
            out.gram_inv_.at(i, j) = lift(base.gram_inv_.at(i, j));
        }
    out.cross_tab_.resize(base.cross_tab_.size());
    for (std::size_t c = 0; c < base.cross_tab_.size(); ++c)
        for (const auto& [k, coef] : base.cross_tab_[c])
            out.cross_tab_[c].emplace_back(k, lift(coef));
    return out;
}

template struct AlbertElem<Rat>;
template struct AlbertElem<QuadExt>;
template class AlbertCtx<Rat>;
template class AlbertCtx<QuadExt>;

} // namespace exalg
