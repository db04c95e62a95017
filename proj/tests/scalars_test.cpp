#include <doctest.h>

#include "exalg/matrix.hpp"
#include "exalg/rng.hpp"

using namespace exalg;

TEST_SUITE_BEGIN("scalars");

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK((Rat(7, 3) * Rat(3, 7)).is_one());
    CHECK(Rat(5).is_integer());
    CHECK(Rat(-4, 7).sign() == -1);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
}

TEST_CASE("quadratic extension anchors over Q(sqrt 2)") {
    QuadExt a(Rat(1), Rat(1), 2);  // 1 + sqrt2
    QuadExt b = a.conj();          // 1 - sqrt2
    CHECK(a * b == QuadExt(Rat(-1)));
    CHECK(a.norm_to_base() == Rat(-1));
    CHECK(QuadExt::sqrt_d(2).norm_to_base() == Rat(-2));
    CHECK(QuadExt().norm_to_base() == Rat(0));

    QuadExt c(Rat(3), Rat(2), 2);
    CHECK(c.conj() == QuadExt(Rat(3), Rat(-2), 2));
    CHECK(QuadExt(Rat(5)).conj() == QuadExt(Rat(5)));
    CHECK(QuadExt::sqrt_d(2).conj() == -QuadExt::sqrt_d(2));
}

TEST_CASE("inverse of 1 + sqrt2 against the linear-system oracle") {
    // (1 + w)(x + y w) = (x + 2y) + (x + y) w = 1 gives the system
    // x + 2y = 1, x + y = 0 over Q; solve it independently of inverse().
    Matrix<Rat> sys(2, 2);
    sys.at(0, 0) = Rat(1);
    sys.at(0, 1) = Rat(2);
    sys.at(1, 0) = Rat(1);
    sys.at(1, 1) = Rat(1);
    auto sol = sys.solve({Rat(1), Rat(0)});
    QuadExt oracle(sol[0], sol[1], 2);
    CHECK(oracle == QuadExt(Rat(-1), Rat(1), 2));
    CHECK(QuadExt(Rat(1), Rat(1), 2).inverse() == oracle);
    CHECK(QuadExt(Rat(1), Rat(1), 2) * oracle == QuadExt(Rat(1)));
}

TEST_CASE("field axioms hold exactly on random samples") {
    RandomSource rng(11);
    for (int t = 0; t < 200; ++t) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        QuadExt x = rng.quad(2), y = rng.quad(2), z = rng.quad(2);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("conjugation is an involutive field automorphism") {
    RandomSource rng(12);
    for (int t = 0; t < 100; ++t) {
        QuadExt x = rng.quad(5), y = rng.quad(5);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("norm to the base field vanishes only at zero") {
    RandomSource rng(13);
    for (int t = 0; t < 100; ++t) {
        QuadExt x = rng.quad(3);
        CHECK(x.norm_to_base().is_zero() == x.is_zero());
    }
    CHECK(QuadExt(Rat(0), Rat(0), 3).norm_to_base().is_zero());
}

TEST_CASE("extension parameter validation") {
    CHECK(quad_param_ok(2));
    CHECK(quad_param_ok(-1));
    CHECK(quad_param_ok(-4)); // negative numbers are never integer squares
    CHECK(quad_param_ok(8));
    CHECK_FALSE(quad_param_ok(0));
    CHECK_FALSE(quad_param_ok(1));
    CHECK_FALSE(quad_param_ok(4));
    CHECK_FALSE(quad_param_ok(49));
    CHECK_THROWS_AS(QuadExt(Rat(1), Rat(1), 9), FieldMismatch);
}

TEST_CASE("elements of different extensions never mix") {
    QuadExt a(Rat(1), Rat(1), 2);
    QuadExt b(Rat(1), Rat(1), 3);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);
    // wildcards (plain rationals) mix with anything
    CHECK(a + QuadExt(Rat(1)) == QuadExt(Rat(2), Rat(1), 2));
}

TEST_CASE("scalar text forms round trip") {
    RandomSource rng(14);
    for (int t = 0; t < 50; ++t) {
        Rat r = rng.rat();
        CHECK(Rat::from_string(r.str()) == r);
        QuadExt q = rng.quad(2);
        CHECK(QuadExt::from_string(q.str(), 2) == q);
    }
    CHECK(Rat::from_string(" -3 / 4 ") == Rat(-3, 4));
    CHECK(QuadExt::from_string("1/2 + 3/4*w", 2) == QuadExt(Rat(1, 2), Rat(3, 4), 2));
    CHECK(QuadExt::from_string("-w", 2) == QuadExt(Rat(0), Rat(-1), 2));
    CHECK(QuadExt::from_string("2*w", 2) == QuadExt(Rat(0), Rat(2), 2));
    CHECK(QuadExt::from_string("5", 2) == QuadExt(Rat(5), Rat(0), 2));
    CHECK_THROWS_AS(Rat::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("abc"), ParseError);
    CHECK_THROWS_AS(QuadExt::from_string("w", 0), ParseError);
}

TEST_SUITE_END();
