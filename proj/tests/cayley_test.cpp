#include <doctest.h>

#include "exalg/cayley.hpp"

using namespace exalg;
using O = Oct<Rat>;

TEST_SUITE_BEGIN("cayley");

TEST_CASE("star table anchors") {
    CHECK(star_mul(O::basis(1), O::basis(2)) == O::basis(0));  // u2 * u3 = u1
    CHECK(star_mul(O::basis(3), O::basis(3)) == O::basis(4));  // u4 * u4 = u5
    CHECK(star_mul(O::basis(0), O::basis(0)).is_zero());       // u1 * u1 = 0
}

TEST_CASE("standard involution") {
    CHECK(oct_conj(O::basis(3)) == O::basis(4));
    CHECK(oct_conj(O::basis(0)) == -O::basis(0));
    CHECK(oct_conj(O::one()) == O::one());
    for (int i = 0; i < kOctDim; ++i) {
        CHECK(oct_conj(oct_conj(O::basis(i))) == O::basis(i));
        // pi is left star multiplication by the unit
        CHECK(oct_conj(O::basis(i)) == star_mul(O::one(), O::basis(i)));
    }
}

TEST_CASE("ordinary product is unital with the table-derived values") {
    RandomSource rng(31);
    for (int i = 0; i < kOctDim; ++i) {
        CHECK(oct_mul(O::one(), O::basis(i)) == O::basis(i));
        CHECK(oct_mul(O::basis(i), O::one()) == O::basis(i));
    }
    CHECK(oct_mul(O::basis(3), O::basis(3)) == O::basis(3)); // u4 idempotent
    // u1 u8 = star(pi(u1), pi(u8)) = star(u1, u8) = -u4
    CHECK(oct_mul(O::basis(0), O::basis(7)) == -O::basis(3));
    O x = random_oct<Rat>(rng);
    CHECK(oct_mul(O::one(), x) == x);
}

TEST_CASE("hyperbolic norm values") {
    CHECK(oct_norm(O::one()) == Rat(1));
    CHECK(oct_norm(O::basis(0)).is_zero());
    CHECK(oct_norm_bilinear(O::basis(0), O::basis(7)) == Rat(1));
}

TEST_CASE("norm is multiplicative and the product alternative") {
    RandomSource rng(32);
    for (int t = 0; t < 200; ++t) {
        O x = random_oct<Rat>(rng), y = random_oct<Rat>(rng);
        CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
        if (t < 100) {
            CHECK(oct_mul(oct_mul(x, x), y) == oct_mul(x, oct_mul(x, y)));
            CHECK(oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x)));
        }
    }
}

TEST_CASE("star multiplication is not unital") {
    bool some_moved = false;
    for (int i = 0; i < kOctDim; ++i)
        if (star_mul(O::one(), O::basis(i)) != O::basis(i)) some_moved = true;
    CHECK(some_moved);
}

TEST_CASE("structure self check passes") {
    CHECK_NOTHROW(cayley_self_check());
}

TEST_CASE("the quadratic instantiation works") {
    using OQ = Oct<QuadExt>;
    OQ x;
    x.c[0] = QuadExt::sqrt_d(2);
    x.c[3] = QuadExt(1);
    OQ sq = oct_mul(x, x);
    CHECK(oct_norm(oct_mul(x, x)) == oct_norm(x) * oct_norm(x));
    (void)sq;
}

TEST_SUITE_END();
