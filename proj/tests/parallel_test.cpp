#include <doctest.h>

#include "exalg/ideals.hpp"
#include "exalg/parallel.hpp"

using namespace exalg;

TEST_SUITE_BEGIN("parallel");

// The OpenMP kernels must produce bit-identical results to the serial
// reference paths; exact arithmetic leaves no tolerance to hide behind.

namespace {

struct ParGuard {
    bool saved = par::enabled();
    ~ParGuard() { par::set_enabled(saved); }
};

} // namespace

TEST_CASE("context construction is independent of the execution mode") {
    ParGuard guard;
    par::set_enabled(false);
    AlbertCtx<Rat> serial;
    par::set_enabled(true);
    AlbertCtx<Rat> parallel;
    CHECK(serial.gram() == parallel.gram());
    RandomSource rng(111);
    for (int t = 0; t < 10; ++t) {
        auto x = serial.random_element(rng);
        CHECK(serial.sharp(x) == parallel.sharp(x));
    }
}

TEST_CASE("quadratic extension matches direct construction") {
    // The lift copies rational structure data; it must agree with a context
    // built from scratch over the extension.
    AlbertCtx<Rat> base({Rat(1), Rat(2), Rat(-3)});
    AlbertCtx<QuadExt> lifted = extend_to_quad(base, 2);
    AlbertCtx<QuadExt> direct(
        {QuadExt(Rat(1), Rat(0), 2), QuadExt(Rat(2), Rat(0), 2), QuadExt(Rat(-3), Rat(0), 2)});
    CHECK(lifted.gram() == direct.gram());
    RandomSource rng(114);
    for (int t = 0; t < 6; ++t) {
        auto x = direct.random_element(rng);
        auto y = direct.random_element(rng);
        CHECK(lifted.sharp(x) == direct.sharp(x));
        CHECK(lifted.cross(x, y) == direct.cross(x, y));
        CHECK(lifted.jordan_mul(x, y) == direct.jordan_mul(x, y));
    }
}

TEST_CASE("U matrix batches agree between modes") {
    ParGuard guard;
    par::set_enabled(true);
    BrownCtx<Rat> ctx{AlbertCtx<Rat>{}};
    FtsAlgebra alg = FtsAlgebra::from_split(ctx);
    RandomSource rng(112);
    std::vector<Vec> es;
    for (int i = 0; i < 6; ++i) es.push_back(alg.random_element(rng, true));
    par::set_enabled(false);
    auto serial = alg.u_matrices(es);
    par::set_enabled(true);
    auto parallel = alg.u_matrices(es);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("ideal inspection agrees between modes") {
    ParGuard guard;
    par::set_enabled(true);
    BrownCtx<Rat> ctx{AlbertCtx<Rat>{}};
    FtsAlgebra alg = FtsAlgebra::from_split(ctx);
    auto ideals = canonical_ideals(ctx);
    const RatSubspace& twelve = ideals.back().space;
    par::set_enabled(false);
    IdealReport serial = inspect_ideal(alg, twelve);
    par::set_enabled(true);
    IdealReport parallel = inspect_ideal(alg, twelve);
    CHECK(serial.is_inner == parallel.is_inner);
    CHECK(serial.is_singular == parallel.is_singular);
    CHECK(serial.dim == parallel.dim);
}

TEST_CASE("duality map agrees between modes") {
    ParGuard guard;
    par::set_enabled(true);
    AlbertCtx<Rat> J;
    RatSubspace line = RatSubspace::span(
        kAlbertDim, {AlbertElem<Rat>::idempotent(0).coords()});
    par::set_enabled(false);
    RatSubspace serial = J.duality_map(line);
    par::set_enabled(true);
    RatSubspace parallel = J.duality_map(line);
    CHECK(serial == parallel);
}

TEST_CASE("closures agree between modes") {
    ParGuard guard;
    BrownCtx<Rat> ctx{AlbertCtx<Rat>{}};
    FtsAlgebra alg = FtsAlgebra::from_split(ctx);
    RandomSource rng(113);
    Vec gen = alg.random_element(rng, true);
    par::set_enabled(false);
    RatSubspace serial = inner_closure(alg, {gen});
    par::set_enabled(true);
    RatSubspace parallel = inner_closure(alg, {gen});
    CHECK(serial == parallel);
}

TEST_SUITE_END();
