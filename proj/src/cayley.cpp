#include "exalg/cayley.hpp"

namespace exalg {

template <ScalarField S>
S oct_norm(const Oct<S>& x) {
    Oct<S> p = oct_mul(x, oct_conj(x));
    // p must be n(x) * (u4 + u5)
    if (!(p.c[3] == p.c[4]))
        throw NotScalarMultiple("x * pi(x) is not a multiple of the unit");
    for (int i : {0, 1, 2, 5, 6, 7})
        if (!p.c[i].is_zero())
            throw NotScalarMultiple("x * pi(x) is not a multiple of the unit");
    return p.c[3];
}

template <ScalarField S>
S oct_norm_bilinear(const Oct<S>& x, const Oct<S>& y) {
    return oct_norm(x + y) - oct_norm(x) - oct_norm(y);
}

template <ScalarField S>
Oct<S> random_oct(RandomSource& rng, bool integer_only) {
    Oct<S> x;
    auto v = rng.coords<S>(kOctDim, integer_only);
    for (int i = 0; i < kOctDim; ++i) x.c[i] = v[i];
    return x;
}

void cayley_self_check() {
    using O = Oct<Rat>;
    const O one = O::one();

    // pi agrees with left star multiplication by the unit, and pi^2 = id.
    for (int i = 0; i < kOctDim; ++i) {
        O u = O::basis(i);
        if (oct_conj(u) != star_mul(one, u))
            throw SelfCheckFailed("pi(u" + std::to_string(i + 1) + ") != 1 star u");
        if (oct_conj(oct_conj(u)) != u)
            throw SelfCheckFailed("pi^2 != id on u" + std::to_string(i + 1));
    }

    // Unit laws for the usual product.
    for (int i = 0; i < kOctDim; ++i) {
        O u = O::basis(i);
        if (oct_mul(one, u) != u || oct_mul(u, one) != u)
            throw SelfCheckFailed("u4+u5 is not a unit");
    }

    // star is not unital: 1 star u1 = -u1.
    if (star_mul(one, O::basis(0)) == O::basis(0))
        throw SelfCheckFailed("star product looks unital; table transcription suspect");

    // Norm multiplicativity and alternativity on a deterministic sample.
    RandomSource rng(0x5ca1ab1e);
    for (int t = 0; t < 32; ++t) {
        O x = random_oct<Rat>(rng), y = random_oct<Rat>(rng);
        if (!(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y)))
            throw SelfCheckFailed("norm not multiplicative");
        if (oct_mul(oct_mul(x, x), y) != oct_mul(x, oct_mul(x, y)))
            throw SelfCheckFailed("left alternative law fails");
        if (oct_mul(oct_mul(y, x), x) != oct_mul(y, oct_mul(x, x)))
            throw SelfCheckFailed("right alternative law fails");
    }
}

template Rat oct_norm<Rat>(const Oct<Rat>&);
template QuadExt oct_norm<QuadExt>(const Oct<QuadExt>&);
template Rat oct_norm_bilinear<Rat>(const Oct<Rat>&, const Oct<Rat>&);
template QuadExt oct_norm_bilinear<QuadExt>(const Oct<QuadExt>&, const Oct<QuadExt>&);
template Oct<Rat> random_oct<Rat>(RandomSource&, bool);
template Oct<QuadExt> random_oct<QuadExt>(RandomSource&, bool);

} // namespace exalg
