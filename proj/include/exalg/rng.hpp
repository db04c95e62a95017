#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "exalg/quadext.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// Deterministic source of small random scalars for property checks.
// Heights are bounded (numerators and denominators in [-9, 9] by default) so
// exact arithmetic stays cheap through degree-4 forms.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    // Small integer, biased away from zero often enough to be useful.
    long small_int() { return int_in(-height_, height_); }

    long nonzero_int() {
        long v = 0;
        while (v == 0) v = small_int();
        return v;
    }

    Rat rat(bool integer_only = false) {
        long num = small_int();
        long den = integer_only ? 1 : int_in(1, height_);
        return Rat(num, den);
    }

    Rat nonzero_rat(bool integer_only = false) {
        Rat r;
        while (r.is_zero()) r = rat(integer_only);
        return r;
    }

    QuadExt quad(long d, bool integer_only = false) {
        return QuadExt(rat(integer_only), rat(integer_only), d);
    }

    template <typename S>
    std::vector<S> coords(int n, bool integer_only = false);

    void set_height(long h) { height_ = h; }
    long height() const { return height_; }

    // Extension parameter used when drawing QuadExt coordinates generically.
    void set_quad_d(long d) { quad_d_ = d; }
    long quad_d() const { return quad_d_; }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
    long height_ = 9;
    long quad_d_ = 2;
};

template <>
inline std::vector<Rat> RandomSource::coords<Rat>(int n, bool integer_only) {
    std::vector<Rat> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(rat(integer_only));
    return v;
}

template <>
inline std::vector<QuadExt> RandomSource::coords<QuadExt>(int n, bool integer_only) {
    std::vector<QuadExt> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(quad(quad_d_, integer_only));
    return v;
}

} // namespace exalg
