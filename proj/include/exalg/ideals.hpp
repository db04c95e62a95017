#pragma once

#include <optional>
#include <string>

#include "exalg/fts.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

// Result of the inner/singular ideal tests on a subspace of a Brown algebra.
struct IdealReport {
    RatSubspace subspace;
    bool is_inner = false;
    bool is_singular = false;
    int dim = 0;
    std::optional<Vec> witness; // an escaping image / failing element
};

// e != 0 and U_e B contained in the line F e.
bool is_singular_element(const FtsAlgebra& alg, const Vec& e);

// The four singularity conditions for e = (alpha, j, j', beta) in the split
// zeta = 1 algebra: T(j, j') = 3 alpha beta, (j')# = alpha j, j# = beta j',
// and <j, j'> = 0.  Their conjunction is equivalent to singularity.
std::array<bool, 4> singularity_conditions(const BrownCtx<Rat>& ctx, const BrownElem<Rat>& e);

// Checks the U-criterion (basis plus polarized pairs) and the t-criterion
// t(I, I, B) in I, asserts they agree, and evaluates singularity.
IdealReport inspect_ideal(const FtsAlgebra& alg, const RatSubspace& ideal);

bool is_inner_ideal(const FtsAlgebra& alg, const RatSubspace& ideal);
bool is_singular_ideal(const FtsAlgebra& alg, const RatSubspace& ideal);

// Smallest inner ideal containing the generators: alternately adds U-images
// (with polarizations) and re-canonicalizes until the dimension stabilizes.
RatSubspace inner_closure(const FtsAlgebra& alg, const std::vector<Vec>& generators);

struct NamedIdeal {
    std::string name;
    RatSubspace space;
};

// The canonical examples in the split zeta = 1 algebra: the singular family
// (F, 0, V, 0) for totally singular V of dimensions 0..6, and the
// 12-dimensional non-singular ideal (F, F e0, e0 x J, 0).
std::vector<NamedIdeal> canonical_ideals(const BrownCtx<Rat>& ctx);

// The 6-dimensional singular ideal of the quadratic descent algebra spanned
// by the self-dual 3-dimensional totally singular subspace, in descent
// coordinates.
RatSubspace i6_ideal(const QuadDescent& qd);

} // namespace exalg
