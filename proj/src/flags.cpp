#include "exalg/flags.hpp"

#include "exalg/parallel.hpp"

namespace exalg {

namespace {

std::vector<Rat> a_slot(int u) {
    AlbertElem<Rat> x;
    x.a.c[u] = Rat(1);
    return x.coords();
}

std::vector<Rat> b_slot(int u) {
    AlbertElem<Rat> x;
    x.b.c[u] = Rat(1);
    return x.coords();
}

} // namespace

std::array<RatSubspace, 6> e6_canonical(const AlbertCtx<Rat>& J) {
    std::array<RatSubspace, 6> v;
    auto eps2 = AlbertElem<Rat>::idempotent(2).coords();

    // Octonion spans u1 star C (u1..u4) and C star u1 (u1,u2,u3,u5), read
    // off the structure table so a transcription slip cannot hide here.
    std::vector<int> row_span, col_span;
    for (int j = 0; j < kOctDim; ++j) {
        if (kStarTable[0][j] != 0) row_span.push_back(std::abs(kStarTable[0][j]) - 1);
        if (kStarTable[j][0] != 0) col_span.push_back(std::abs(kStarTable[j][0]) - 1);
    }

    std::vector<std::vector<Rat>> rows{eps2};
    v[0] = RatSubspace::span(kAlbertDim, rows);
    rows.push_back(a_slot(0));
    v[1] = RatSubspace::span(kAlbertDim, rows);
    rows.push_back(a_slot(1));
    v[2] = RatSubspace::span(kAlbertDim, rows);

    std::vector<std::vector<Rat>> v4{eps2};
    for (int u : row_span) v4.push_back(a_slot(u));
    v[3] = RatSubspace::span(kAlbertDim, v4);

    std::vector<std::vector<Rat>> v5{eps2};
    for (int u : col_span) v5.push_back(a_slot(u));
    v5.push_back(b_slot(0));
    v[4] = RatSubspace::span(kAlbertDim, v5);

    v[5] = J.hyperline(AlbertElem<Rat>::idempotent(0));
    return v;
}

std::array<RatSubspace, 7> e7_canonical(const AlbertCtx<Rat>& J) {
    std::array<RatSubspace, 6> v = e6_canonical(J);
    std::array<RatSubspace, 7> w;
    auto lift = [](const RatSubspace& vj, bool with_e0) {
        std::vector<Vec> rows;
        rows.push_back(FtsAlgebra::basis_vec(55)); // beta
        for (int r = 0; r < vj.dim(); ++r) {
            Vec x(kBrownDim);
            auto src = vj.basis_vector(r);
            for (int c = 0; c < kAlbertDim; ++c) x[1 + c] = src[c]; // j slot
            rows.push_back(std::move(x));
        }
        if (with_e0) {
            Vec x(kBrownDim);
            auto e0 = AlbertElem<Rat>::idempotent(0).coords();
            for (int c = 0; c < kAlbertDim; ++c) x[28 + c] = e0[c]; // j' slot
            rows.push_back(std::move(x));
        }
        return RatSubspace::span(kBrownDim, rows);
    };
    w[0] = lift(RatSubspace(kAlbertDim), false);
    for (int j = 1; j < 6; ++j) w[j] = lift(v[j - 1], false);
    w[6] = lift(v[5], true);
    return w;
}

std::optional<int> classify_e6(const AlbertCtx<Rat>& J, const RatSubspace& w) {
    if (w.ambient_dim() != kAlbertDim) throw AmbientMismatch("expected ambient dimension 27");
    const int d = w.dim();
    switch (d) {
    case 1:
    case 2:
    case 3:
        return J.is_totally_singular(w) ? std::optional<int>(d) : std::nullopt;
    case 5: {
        if (!J.is_totally_singular(w)) return std::nullopt;
        // Maximality certificate through the duality bijection: the dual of
        // a maximal 5-dimensional space is 2-dimensional totally singular
        // and dualizes back.
        RatSubspace dual = J.duality_map(w);
        if (dual.dim() != 2 || !J.is_totally_singular(dual)) return std::nullopt;
        if (J.duality_map(dual) != w) return std::nullopt;
        return 4;
    }
    case 6:
        return J.is_totally_singular(w) ? std::optional<int>(5) : std::nullopt;
    case 10: {
        RatSubspace dual = J.duality_map(w);
        if (dual.dim() != 1) return std::nullopt;
        AlbertElem<Rat> dgen = AlbertElem<Rat>::from_coords(dual.basis_vector(0));
        if (!J.is_rank_one(dgen)) return std::nullopt;
        if (J.hyperline(dgen) != w) return std::nullopt;
        return 6;
    }
    default:
        return std::nullopt;
    }
}

Maximality certify_max_singular(const FtsAlgebra& alg, const RatSubspace& ideal) {
    // A singular extension x of I must satisfy, for every u in I and all z,
    //   t(u, x, z) = b(z, x) u + b(z, u) x,
    // which is linear in x.  Solve for the space L of such x; if L = I no
    // extension exists.
    RatSubspace sol = RatSubspace::full(kBrownDim);
    const RatMatrix& bg = alg.b_gram();
    for (int r = 0; r < ideal.dim() && sol.dim() > ideal.dim(); ++r) {
        Vec u = ideal.basis_vector(r);
        // b(z, u) for z running over the basis: (B u)[z].
        Vec bu = bg.apply(u);
        // Conditions indexed by basis z; each contributes a 56 x 56 block
        // linear in x: t_matrix(u, b_z) x - b(z, x) u - b(z, u) x = 0 where
        // b(z, x) has covector B.row(z).
        std::vector<RatMatrix> blocks(kBrownDim);
        par::parallel_for(kBrownDim, [&](int z) {
            RatMatrix c = alg.t_matrix(u, FtsAlgebra::basis_vec(z));
            for (int row = 0; row < kBrownDim; ++row) {
                if (!u[row].is_zero())
                    for (int col = 0; col < kBrownDim; ++col)
                        if (!bg.at(z, col).is_zero())
                            Rat::submul(c.at(row, col), u[row], bg.at(z, col));
                Rat::submul(c.at(row, row), Rat(1), bu[z]);
            }
            blocks[z] = std::move(c);
        });
        std::vector<std::vector<Rat>> cond_rows;
        for (const RatMatrix& blk : blocks)
            for (int row = 0; row < kBrownDim; ++row) {
                std::vector<Rat> cr(kBrownDim);
                bool nonzero = false;
                for (int col = 0; col < kBrownDim; ++col) {
                    cr[col] = blk.at(row, col);
                    nonzero = nonzero || !cr[col].is_zero();
                }
                if (nonzero) cond_rows.push_back(std::move(cr));
            }
        if (cond_rows.empty()) continue;
        RatMatrix e = rows_to_matrix(cond_rows, kBrownDim);
        RatMatrix restricted = e * sol.basis().transpose();
        RatMatrix params = restricted.kernel();
        sol = RatSubspace::span(params * sol.basis());
    }
    if (sol == ideal) return Maximality::Maximal;
    if (!sol.contains(ideal)) return Maximality::Undecided;
    // Probe the complement for a concrete singular extension.
    for (int r = 0; r < sol.dim(); ++r) {
        Vec cand = sol.basis_vector(r);
        if (ideal.contains(cand)) continue;
        if (is_singular_element(alg, cand)) {
            RatSubspace bigger = ideal;
            bigger.grow({cand});
            if (is_singular_ideal(alg, bigger)) return Maximality::Extended;
        }
    }
    return Maximality::Undecided;
}

std::optional<int> classify_e7(const FtsAlgebra& alg, const RatSubspace& ideal) {
    if (ideal.ambient_dim() != kBrownDim) throw AmbientMismatch("expected ambient dimension 56");
    const int d = ideal.dim();
    switch (d) {
    case 1:
    case 2:
    case 3:
    case 4:
        return is_singular_ideal(alg, ideal) ? std::optional<int>(d) : std::nullopt;
    case 6: {
        if (!is_singular_ideal(alg, ideal)) return std::nullopt;
        return certify_max_singular(alg, ideal) == Maximality::Maximal ? std::optional<int>(5)
                                                                       : std::nullopt;
    }
    case 7:
        return is_singular_ideal(alg, ideal) ? std::optional<int>(6) : std::nullopt;
    case 12:
        return is_inner_ideal(alg, ideal) ? std::optional<int>(7) : std::nullopt;
    default:
        return std::nullopt;
    }
}

IncidenceRules IncidenceRules::computed(const AlbertCtx<Rat>& J) {
    std::array<RatSubspace, 6> v = e6_canonical(J);
    std::array<RatSubspace, 7> w = e7_canonical(J);
    IncidenceRules rules;
    rules.e6_45 = v[3].intersect(v[4]).dim();
    rules.e6_56 = v[4].intersect(v[5]).dim();
    rules.e7_56 = w[4].intersect(w[5]).dim();
    rules.e7_67 = w[5].intersect(w[6]).dim();
    return rules;
}

IncidenceRules IncidenceRules::strict_paper() {
    IncidenceRules rules;
    rules.e6_45 = 3;
    rules.e6_56 = 5;
    rules.e7_56 = 4;
    rules.e7_67 = 6;
    return rules;
}

bool incident(Geometry geom, const SpaceType& ta, const RatSubspace& a, const SpaceType& tb,
              const RatSubspace& b, const IncidenceRules& rules) {
    if (ta.geometry != geom || tb.geometry != geom)
        throw Unclassified("space types belong to a different geometry");
    int lo = std::min(ta.index, tb.index), hi = std::max(ta.index, tb.index);
    const RatSubspace& la = ta.index <= tb.index ? a : b;
    const RatSubspace& lb = ta.index <= tb.index ? b : a;
    if (geom == Geometry::E6) {
        if (lo == 4 && hi == 5) return la.intersect(lb).dim() == rules.e6_45;
        if (lo == 5 && hi == 6) return la.intersect(lb).dim() == rules.e6_56;
    } else {
        if (lo == 5 && hi == 6) return la.intersect(lb).dim() == rules.e7_56;
        if (lo == 6 && hi == 7) return la.intersect(lb).dim() == rules.e7_67;
    }
    return la == lb || (la.dim() <= lb.dim() ? lb.contains(la) : la.contains(lb));
}

} // namespace exalg
