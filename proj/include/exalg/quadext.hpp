#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "exalg/rational.hpp"

namespace exalg {

// Returns true if d is admissible for a quadratic extension Q(sqrt(d)):
// nonzero and not the square of an integer.  (Every negative d qualifies.)
bool quad_param_ok(long d);

// Element p + q*w of the quadratic extension Q(sqrt(d)), w = sqrt(d).
//
// Each element remembers its d.  Elements created from plain rationals carry
// d = 0 and act as wildcards: they combine with any extension, which keeps
// generic code like S(1) + x working.  Two elements with distinct nonzero d
// never mix (FieldMismatch).  A wildcard element always has q = 0.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), d_(0) {}
    QuadExt(int n) : p_(n), q_(0), d_(0) {}
    QuadExt(long n) : p_(n), q_(0), d_(0) {}
    QuadExt(const Rat& p) : p_(p), q_(0), d_(0) {}
    QuadExt(Rat p, Rat q, long d);

    static QuadExt sqrt_d(long d) { return QuadExt(Rat(0), Rat(1), d); }
    static QuadExt from_string(std::string_view text, long d);

    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    long d() const { return d_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    bool is_one() const { return p_.is_one() && q_.is_zero(); }
    bool is_rational() const { return q_.is_zero(); }

    // Galois conjugate: p - q*w.  Fixes the base field pointwise.
    QuadExt conj() const { return QuadExt(p_, -q_, d_); }

    // Norm down to Q: p^2 - d q^2.  Zero iff the element is zero.
    Rat norm_to_base() const;

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { a += b; return a; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { a -= b; return a; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { a *= b; return a; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { a /= b; return a; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.d_ != b.d_ && a.d_ != 0 && b.d_ != 0) return false;
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt inverse() const;

    static void addmul(QuadExt& acc, const QuadExt& a, const QuadExt& b);
    static void submul(QuadExt& acc, const QuadExt& a, const QuadExt& b);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

private:
    long joint_d(const QuadExt& o) const;

    Rat p_, q_;
    long d_;
};

} // namespace exalg
