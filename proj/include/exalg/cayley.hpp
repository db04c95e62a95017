#pragma once

#include <array>
#include <vector>

#include "exalg/rng.hpp"
#include "exalg/scalar.hpp"

namespace exalg {

// Split Cayley (octonion) algebra in the twisted basis u1..u8.
//
// The primitive datum is the star multiplication table: star(x, y) is a
// bilinear product that is NOT unital and NOT power-associative.  It relates
// to the usual octonion product by x*y = pi(x) pi(y), where pi is the
// standard involution and juxtaposition the usual product; equivalently the
// usual product is x y = star(pi(x), pi(y)).  The unit of the usual product
// in this basis is u4 + u5, and pi(x) = star(1, x).  Both facts are verified
// by self_check() at context setup.

inline constexpr int kOctDim = 8;

// entry[i][j] = signed 1-based index k meaning star(u_{i+1}, u_{j+1}) = sign(k) * u_{|k|};
// 0 means the product is zero.
inline constexpr std::array<std::array<int, kOctDim>, kOctDim> kStarTable = {{
    {0, 0, 0, -1, 0, -2, +3, -4},
    {0, 0, +1, 0, -2, 0, -5, -6},
    {0, -1, 0, 0, -3, -5, 0, +7},
    {0, -2, -3, +5, 0, 0, 0, -8},
    {-1, 0, 0, 0, +4, -6, -7, 0},
    {+2, 0, -4, -6, 0, 0, -8, 0},
    {-3, -4, 0, -7, 0, +8, 0, 0},
    {-5, +6, -7, 0, -8, 0, 0, 0},
}};

template <ScalarField S>
struct Oct {
    std::array<S, kOctDim> c{};

    Oct() = default;

    static Oct basis(int i) {
        Oct u;
        u.c[i] = S(1);
        return u;
    }

    // u4 + u5, the unit of the usual product.
    static Oct one() {
        Oct u;
        u.c[3] = S(1);
        u.c[4] = S(1);
        return u;
    }

    bool is_zero() const {
        for (const S& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    Oct operator-() const {
        Oct r;
        for (int i = 0; i < kOctDim; ++i) r.c[i] = -c[i];
        return r;
    }
    Oct& operator+=(const Oct& o) {
        for (int i = 0; i < kOctDim; ++i) c[i] += o.c[i];
        return *this;
    }
    Oct& operator-=(const Oct& o) {
        for (int i = 0; i < kOctDim; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend Oct operator+(Oct a, const Oct& b) { a += b; return a; }
    friend Oct operator-(Oct a, const Oct& b) { a -= b; return a; }
    friend Oct operator*(const S& s, Oct a) {
        for (int i = 0; i < kOctDim; ++i) a.c[i] = s * a.c[i];
        return a;
    }
    friend bool operator==(const Oct& a, const Oct& b) {
        for (int i = 0; i < kOctDim; ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const Oct& a, const Oct& b) { return !(a == b); }
};

// Bilinear extension of the star table.
template <ScalarField S>
Oct<S> star_mul(const Oct<S>& x, const Oct<S>& y) {
    Oct<S> z;
    for (int i = 0; i < kOctDim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < kOctDim; ++j) {
            if (y.c[j].is_zero()) continue;
            int e = kStarTable[i][j];
            if (e == 0) continue;
            if (e > 0)
                scalar_addmul(z.c[e - 1], x.c[i], y.c[j]);
            else
                scalar_submul(z.c[-e - 1], x.c[i], y.c[j]);
        }
    }
    return z;
}

// Standard involution pi.  In this basis it negates u1,u2,u3,u6,u7,u8 and
// swaps u4 <-> u5 (it is star-multiplication by the unit on the left, which
// self_check verifies).
template <ScalarField S>
Oct<S> oct_conj(const Oct<S>& x) {
    Oct<S> y;
    y.c[0] = -x.c[0];
    y.c[1] = -x.c[1];
    y.c[2] = -x.c[2];
    y.c[3] = x.c[4];
    y.c[4] = x.c[3];
    y.c[5] = -x.c[5];
    y.c[6] = -x.c[6];
    y.c[7] = -x.c[7];
    return y;
}

// Usual (unital, alternative) octonion product: x y = star(pi(x), pi(y)).
template <ScalarField S>
Oct<S> oct_mul(const Oct<S>& x, const Oct<S>& y) {
    return star_mul(oct_conj(x), oct_conj(y));
}

// Hyperbolic norm form: n(x) * 1 = x * pi(x).  Throws NotScalarMultiple if
// the product fails to be scalar, which would mean the table is corrupt.
template <ScalarField S>
S oct_norm(const Oct<S>& x);

// Bilinearization n(x, y) = n(x + y) - n(x) - n(y).
template <ScalarField S>
S oct_norm_bilinear(const Oct<S>& x, const Oct<S>& y);

template <ScalarField S>
Oct<S> random_oct(RandomSource& rng, bool integer_only = false);

// Validates the table-derived structure: pi is an involution, u4+u5 is a
// two-sided unit for the usual product, the norm is multiplicative, the
// product is alternative, and star is not unital.  Throws SelfCheckFailed.
void cayley_self_check();

} // namespace exalg
