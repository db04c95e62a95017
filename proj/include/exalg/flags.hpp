#pragma once

#include <array>
#include <optional>

#include "exalg/ideals.hpp"

namespace exalg {

enum class Geometry { E6, E7 };

struct SpaceType {
    Geometry geometry;
    int index; // 1..6 for E6, 1..7 for E7
    friend bool operator==(const SpaceType&, const SpaceType&) = default;
};

// The canonical chamber V_1..V_6 in J: totally singular subspaces of
// dimensions 1, 2, 3, 5, 6 and the hyperline e0 x J.
std::array<RatSubspace, 6> e6_canonical(const AlbertCtx<Rat>& J);

// The canonical chamber W_1..W_7 in B: W_j = (0, V_{j-1}, 0, F) and
// W_7 = (0, V_6, F e0, F); dimensions 1, 2, 3, 4, 6, 7, 12.
std::array<RatSubspace, 7> e7_canonical(const AlbertCtx<Rat>& J);

// Expected dimensions per index.
inline constexpr std::array<int, 6> kE6Dims = {1, 2, 3, 5, 6, 10};
inline constexpr std::array<int, 7> kE7Dims = {1, 2, 3, 4, 6, 7, 12};

// i-dimensional totally singular subspaces (i = 1, 2, 3); 5-dimensional
// maximal totally singular (4, certified through the duality map);
// 6-dimensional totally singular (5); hyperlines (6).
std::optional<int> classify_e6(const AlbertCtx<Rat>& J, const RatSubspace& w);

enum class Maximality { Maximal, Extended, Undecided };

// Certifies maximality of a singular ideal by solving the linear system a
// one-dimensional singular extension must satisfy.  Maximal when the
// solution space is the ideal itself; Extended when a concrete singular
// extension exists among simple probes; Undecided otherwise.
Maximality certify_max_singular(const FtsAlgebra& alg, const RatSubspace& ideal);

// i-dimensional singular ideals (i = 1..4); 6-dimensional maximal singular
// ideals (5); 7-dimensional singular ideals (6); 12-dimensional inner
// ideals (7).
std::optional<int> classify_e7(const FtsAlgebra& alg, const RatSubspace& ideal);

// Incidence thresholds for the exceptional pairs.  The defaults are the
// intersection dimensions of the canonical chamber representatives (a
// chamber is mutually incident by definition); the strict table uses the
// written values 3 and 4 instead, which disagree with the chamber
// computation for the (4,5) / (5,6) pairs.
struct IncidenceRules {
    int e6_45 = 4;
    int e6_56 = 5;
    int e7_56 = 5;
    int e7_67 = 6;

    static IncidenceRules computed(const AlbertCtx<Rat>& J);
    static IncidenceRules strict_paper();
};

// Inclusion in either direction, except the special pairs which compare the
// intersection dimension against the rule table.
bool incident(Geometry geom, const SpaceType& ta, const RatSubspace& a, const SpaceType& tb,
              const RatSubspace& b, const IncidenceRules& rules);

} // namespace exalg
