#pragma once

#include <concepts>
#include <string>

#include "exalg/quadext.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// The scalar interface every algebra module is generic over: an exact field
// with an involution `conj` (identity on Q, the Galois flip on Q(sqrt d)).
template <typename S>
concept ScalarField = requires(S a, S b) {
    { S(1) };
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<S>;
    { a.str() } -> std::convertible_to<std::string>;
};

inline Rat conj(const Rat& x) { return x; }
inline QuadExt conj(const QuadExt& x) { return x.conj(); }

inline const char* scalar_name(const Rat&) { return "Q"; }
inline const char* scalar_name(const QuadExt&) { return "Q(sqrt d)"; }

// Extension parameter carried by a scalar; 0 over the base field.
inline long scalar_quad_d(const Rat&) { return 0; }
inline long scalar_quad_d(const QuadExt& x) { return x.d(); }

// Rational part of a scalar, failing if there is a sqrt component.  Used when
// reading descent coordinates, which must land in the base field.
inline Rat rational_part(const Rat& x) { return x; }
inline Rat rational_part(const QuadExt& x) {
    if (!x.is_rational()) throw NotFixed("scalar " + x.str() + " is not in the base field");
    return x.p();
}

// acc += a*b / acc -= a*b without temporaries; the matrix kernels call these.
inline void scalar_addmul(Rat& acc, const Rat& a, const Rat& b) { Rat::addmul(acc, a, b); }
inline void scalar_addmul(QuadExt& acc, const QuadExt& a, const QuadExt& b) {
    QuadExt::addmul(acc, a, b);
}
inline void scalar_submul(Rat& acc, const Rat& a, const Rat& b) { Rat::submul(acc, a, b); }
inline void scalar_submul(QuadExt& acc, const QuadExt& a, const QuadExt& b) {
    QuadExt::submul(acc, a, b);
}

} // namespace exalg
