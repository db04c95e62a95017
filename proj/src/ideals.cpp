#include "exalg/ideals.hpp"

#include "exalg/parallel.hpp"

namespace exalg {

bool is_singular_element(const FtsAlgebra& alg, const Vec& e) {
    if (vec_is_zero(e)) return false;
    RatMatrix u = alg.u_matrix(e);
    // Stack the images with e itself; singular iff everything lies on F e.
    RatMatrix stack(kBrownDim + 1, kBrownDim);
    for (int c = 0; c < kBrownDim; ++c)
        for (int r = 0; r < kBrownDim; ++r) stack.at(c, r) = u.at(r, c);
    for (int r = 0; r < kBrownDim; ++r) stack.at(kBrownDim, r) = e[r];
    return stack.rank() == 1;
}

std::array<bool, 4> singularity_conditions(const BrownCtx<Rat>& ctx, const BrownElem<Rat>& e) {
    if (!ctx.zeta().is_one())
        throw VariantMismatch("the four-condition test is stated for zeta = 1");
    const AlbertCtx<Rat>& J = ctx.albert();
    std::array<bool, 4> ok{};
    ok[0] = J.trace_form(e.j, e.jp) == Rat(3) * e.alpha * e.beta;
    ok[1] = J.sharp(e.jp) == e.alpha * e.j;
    ok[2] = J.sharp(e.j) == e.beta * e.jp;
    ok[3] = J.bracket(e.j, e.jp).is_zero();
    return ok;
}

namespace {

// Unit of polarized-U work: a basis index pair (i <= j) of the ideal.
struct PairTask {
    int i, j;
};

std::vector<Vec> ideal_basis(const RatSubspace& ideal) {
    std::vector<Vec> rows;
    for (int i = 0; i < ideal.dim(); ++i) rows.push_back(ideal.basis_vector(i));
    return rows;
}

// First column of m outside the subspace, if any.
std::optional<Vec> escaping_column(const RatMatrix& m, const RatSubspace& sub) {
    for (int c = 0; c < m.cols(); ++c) {
        Vec col(kBrownDim);
        for (int r = 0; r < kBrownDim; ++r) col[r] = m.at(r, c);
        if (!sub.contains(col)) return col;
    }
    return std::nullopt;
}

} // namespace

IdealReport inspect_ideal(const FtsAlgebra& alg, const RatSubspace& ideal) {
    if (ideal.ambient_dim() != kBrownDim)
        throw AmbientMismatch("ideals live in the 56-dimensional algebra");
    IdealReport report;
    report.subspace = ideal;
    report.dim = ideal.dim();
    std::vector<Vec> basis = ideal_basis(ideal);
    const int d = ideal.dim();

    std::vector<PairTask> tasks;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) tasks.push_back({i, j});

    // U-criterion: U_e(B) in I for basis e, plus polarized pairs (the
    // quantifier over all of I reduces to these since U is quadratic and the
    // field is infinite).
    bool u_ok = true;
    std::optional<Vec> u_witness;
    {
        std::vector<std::optional<Vec>> escapes(tasks.size());
        par::parallel_for(static_cast<int>(tasks.size()), [&](int t) {
            const auto [i, j] = tasks[t];
            RatMatrix m = i == j ? alg.u_matrix(basis[i])
                                 : alg.polarized_u_matrix(basis[i], basis[j]);
            escapes[t] = escaping_column(m, ideal);
        });
        for (const auto& esc : escapes)
            if (esc) {
                u_ok = false;
                if (!u_witness) u_witness = esc;
            }
    }

    // t-criterion: t(I, I, B) in I; and the singular refinement
    // t(u, v, z) = b(z, v) u + b(z, u) v.
    bool t_ok = true, singular_ok = true;
    std::optional<Vec> t_witness;
    {
        std::vector<std::optional<Vec>> escapes(tasks.size());
        std::vector<char> sing(tasks.size(), 1);
        par::parallel_for(static_cast<int>(tasks.size()), [&](int t) {
            const auto [i, j] = tasks[t];
            RatMatrix m = alg.t_matrix(basis[i], basis[j]);
            escapes[t] = escaping_column(m, ideal);
            // Singular profile: t(u, v, z) = b(z, v) u + b(z, u) v, where
            // b(z, v) over basis z is the vector B v.
            Vec bv = alg.b_gram().apply(basis[j]), bu = alg.b_gram().apply(basis[i]);
            for (int c = 0; c < kBrownDim && sing[t]; ++c)
                for (int r = 0; r < kBrownDim; ++r) {
                    Rat expect = basis[i][r] * bv[c] + basis[j][r] * bu[c];
                    if (!(m.at(r, c) == expect)) {
                        sing[t] = 0;
                        break;
                    }
                }
        });
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (escapes[t]) {
                t_ok = false;
                if (!t_witness) t_witness = escapes[t];
            }
            if (!sing[t]) singular_ok = false;
        }
    }

    if (u_ok != t_ok)
        throw CriteriaDisagree("U-criterion and t-criterion disagree on " +
                               std::to_string(d) + "-dimensional subspace");
    report.is_inner = u_ok;
    report.is_singular = singular_ok && d > 0;
    report.witness = u_witness ? u_witness : t_witness;
    return report;
}

bool is_inner_ideal(const FtsAlgebra& alg, const RatSubspace& ideal) {
    return inspect_ideal(alg, ideal).is_inner;
}

bool is_singular_ideal(const FtsAlgebra& alg, const RatSubspace& ideal) {
    return inspect_ideal(alg, ideal).is_singular;
}

RatSubspace inner_closure(const FtsAlgebra& alg, const std::vector<Vec>& generators) {
    RatSubspace span = RatSubspace::span(kBrownDim, generators);
    for (int round = 0; round < kBrownDim; ++round) {
        if (span.is_full()) break;
        std::vector<Vec> basis = ideal_basis(span);
        const int d = span.dim();
        std::vector<PairTask> tasks;
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) tasks.push_back({i, j});
        bool grew = false;
        // Process in chunks so a span that explodes to full dimension exits
        // without paying for every pair.
        const int chunk = 8;
        for (std::size_t start = 0; start < tasks.size() && !span.is_full(); start += chunk) {
            std::size_t stop = std::min(tasks.size(), start + chunk);
            std::vector<RatMatrix> mats(stop - start);
            par::parallel_for(static_cast<int>(stop - start), [&](int t) {
                const auto [i, j] = tasks[start + t];
                mats[t] = i == j ? alg.u_matrix(basis[i])
                                 : alg.polarized_u_matrix(basis[i], basis[j]);
            });
            std::vector<Vec> images;
            for (const RatMatrix& m : mats)
                for (int c = 0; c < kBrownDim; ++c) {
                    Vec col(kBrownDim);
                    for (int r = 0; r < kBrownDim; ++r) col[r] = m.at(r, c);
                    images.push_back(std::move(col));
                }
            grew = span.grow(images) || grew;
        }
        if (!grew) break;
    }
    return span;
}

std::vector<NamedIdeal> canonical_ideals(const BrownCtx<Rat>& ctx) {
    if (!ctx.zeta().is_one())
        throw VariantMismatch("canonical ideals are stated for zeta = 1");
    const AlbertCtx<Rat>& J = ctx.albert();

    // Totally singular chain V_0 = 0 < V_1 < ... < V_6 in J: the eps2 line,
    // then octonion slots filled along star-multiplication images of u1.
    std::vector<RatSubspace> ts(7, RatSubspace(kAlbertDim));
    {
        std::vector<std::vector<Rat>> rows;
        auto eps2 = AlbertElem<Rat>::idempotent(2).coords();
        auto a_slot = [](int u) {
            AlbertElem<Rat> x;
            x.a.c[u] = Rat(1);
            return x.coords();
        };
        auto b_slot = [](int u) {
            AlbertElem<Rat> x;
            x.b.c[u] = Rat(1);
            return x.coords();
        };
        rows.push_back(eps2);
        ts[1] = RatSubspace::span(kAlbertDim, rows);
        rows.push_back(a_slot(0)); // u1
        ts[2] = RatSubspace::span(kAlbertDim, rows);
        rows.push_back(a_slot(1)); // u2
        ts[3] = RatSubspace::span(kAlbertDim, rows);
        rows.push_back(a_slot(2)); // u3
        ts[4] = RatSubspace::span(kAlbertDim, rows);
        rows.push_back(a_slot(3)); // u4: a slot now u1 star C
        ts[5] = RatSubspace::span(kAlbertDim, rows);
        // The 6-dimensional maximal space swaps u4 for u5 and adds b = u1.
        std::vector<std::vector<Rat>> six;
        six.push_back(eps2);
        six.push_back(a_slot(0));
        six.push_back(a_slot(1));
        six.push_back(a_slot(2));
        six.push_back(a_slot(4)); // u5: a slot now C star u1
        six.push_back(b_slot(0));
        ts[6] = RatSubspace::span(kAlbertDim, six);
    }

    std::vector<NamedIdeal> out;
    for (int k = 0; k <= 6; ++k) {
        // (F, 0, V, 0): alpha free, j' in V.
        std::vector<Vec> rows;
        rows.push_back(FtsAlgebra::basis_vec(0));
        for (int r = 0; r < ts[k].dim(); ++r) {
            Vec v(kBrownDim);
            auto jr = ts[k].basis_vector(r);
            for (int c = 0; c < kAlbertDim; ++c) v[28 + c] = jr[c];
            rows.push_back(std::move(v));
        }
        out.push_back({"singular-" + std::to_string(k + 1), RatSubspace::span(kBrownDim, rows)});
    }

    // (F, F e0, e0 x J, 0): the 12-dimensional inner, non-singular ideal.
    {
        AlbertElem<Rat> e0 = AlbertElem<Rat>::idempotent(0);
        RatSubspace hyper = J.hyperline(e0);
        std::vector<Vec> rows;
        rows.push_back(FtsAlgebra::basis_vec(0));
        Vec je0(kBrownDim);
        auto e0c = e0.coords();
        for (int c = 0; c < kAlbertDim; ++c) je0[1 + c] = e0c[c];
        rows.push_back(std::move(je0));
        for (int r = 0; r < hyper.dim(); ++r) {
            Vec v(kBrownDim);
            auto h = hyper.basis_vector(r);
            for (int c = 0; c < kAlbertDim; ++c) v[28 + c] = h[c];
            rows.push_back(std::move(v));
        }
        out.push_back({"hyperline-12", RatSubspace::span(kBrownDim, rows)});
    }
    return out;
}

RatSubspace i6_ideal(const QuadDescent& qd) {
    // (0, W, W, 0) tensored up over Delta, for the self-dual 3-dimensional
    // totally singular W with slots a = u1, b = u2, c = u5.
    std::vector<AlbertElem<QuadExt>> w_basis(3);
    w_basis[0].a.c[0] = QuadExt(1); // u1 in the a slot
    w_basis[1].b.c[1] = QuadExt(1); // u2 in the b slot
    w_basis[2].c.c[4] = QuadExt(1); // u5 in the c slot
    QuadExt delta = qd.delta();
    std::vector<Vec> rows;
    for (const auto& w : w_basis) {
        BrownElem<QuadExt> plain(QuadExt(0), w, w, QuadExt(0));
        rows.push_back(qd.to_coords(plain));
        AlbertElem<QuadExt> dw = delta * w;
        BrownElem<QuadExt> twisted(QuadExt(0), dw, -dw, QuadExt(0));
        rows.push_back(qd.to_coords(twisted));
    }
    return RatSubspace::span(kBrownDim, rows);
}

} // namespace exalg
