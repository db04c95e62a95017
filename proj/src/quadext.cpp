#include "exalg/quadext.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace exalg {

bool quad_param_ok(long d) {
    if (d == 0) return false;
    if (d < 0) return true;
    long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
    for (long c = r - 2; c <= r + 2; ++c)
        if (c >= 0 && c * c == d) return false;
    return true;
}

QuadExt::QuadExt(Rat p, Rat q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
    if (d_ == 0) {
        if (!q_.is_zero()) throw FieldMismatch("sqrt coefficient without an extension parameter");
    } else if (!quad_param_ok(d_)) {
        throw FieldMismatch("d = " + std::to_string(d_) + " does not define a quadratic field");
    }
}

long QuadExt::joint_d(const QuadExt& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw FieldMismatch("mixing Q(sqrt(" + std::to_string(d_) + ")) with Q(sqrt(" +
                        std::to_string(o.d_) + "))");
}

Rat QuadExt::norm_to_base() const {
    Rat n = p_ * p_;
    Rat::submul(n, q_ * Rat(d_), q_);
    return n;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = joint_d(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = joint_d(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    d_ = joint_d(o);
    // (p1 + q1 w)(p2 + q2 w) = p1 p2 + d q1 q2 + (p1 q2 + q1 p2) w
    Rat p = p_ * o.p_;
    Rat::addmul(p, q_ * Rat(d_), o.q_);
    Rat q = p_ * o.q_;
    Rat::addmul(q, q_, o.p_);
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadExt QuadExt::inverse() const {
    Rat n = norm_to_base();
    if (n.is_zero()) throw DivisionByZero("inverse of zero quadratic scalar");
    Rat ninv = n.inverse();
    return QuadExt(p_ * ninv, -q_ * ninv, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw DivisionByZero("quadratic division by zero");
    return *this *= o.inverse();
}

void QuadExt::addmul(QuadExt& acc, const QuadExt& a, const QuadExt& b) {
    long d = a.d_ != 0 ? a.d_ : b.d_;
    if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_)
        throw FieldMismatch("addmul across extensions");
    if (acc.d_ == 0)
        acc.d_ = d;
    else if (d != 0 && acc.d_ != d)
        throw FieldMismatch("addmul across extensions");
    Rat::addmul(acc.p_, a.p_, b.p_);
    if (!a.q_.is_zero() && !b.q_.is_zero()) Rat::addmul(acc.p_, a.q_ * Rat(d), b.q_);
    Rat::addmul(acc.q_, a.p_, b.q_);
    Rat::addmul(acc.q_, a.q_, b.p_);
}

void QuadExt::submul(QuadExt& acc, const QuadExt& a, const QuadExt& b) {
    QuadExt::addmul(acc, -a, b);
}

namespace {

// Splits "A+B*w" / "A-B*w" / "B*w" / "A" at the top-level sign.
std::string strip_ws(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

} // namespace

QuadExt QuadExt::from_string(std::string_view text, long d) {
    std::string s = strip_ws(text);
    if (s.empty()) throw ParseError("empty scalar");
    // Find the '+' or '-' separating the rational part from the *w part.
    // Signs directly after '/' or at position 0 belong to a number.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-')
            split = i; // keep the last one: "w" only appears in the tail term
    }
    auto parse_w_term = [&](std::string_view term) -> Rat {
        // forms: "w", "-w", "+w", "r*w", "r w" (ws already stripped)
        std::string t(term);
        auto star = t.find("*w");
        if (star != std::string::npos && star + 2 == t.size())
            return Rat::from_string(t.substr(0, star));
        if (!t.empty() && t.back() == 'w') {
            std::string head = t.substr(0, t.size() - 1);
            if (head.empty() || head == "+") return Rat(1);
            if (head == "-") return Rat(-1);
            throw ParseError("bad sqrt term '" + t + "'");
        }
        throw ParseError("bad sqrt term '" + t + "'");
    };
    bool has_w = s.find('w') != std::string::npos;
    if (!has_w) return QuadExt(Rat::from_string(s), Rat(0), d);
    if (d == 0) throw ParseError("quadratic scalar '" + s + "' outside a quadratic context");
    if (split == std::string::npos || s.find('w') < split) {
        // pure w term, e.g. "w", "3/2*w", "-w"
        return QuadExt(Rat(0), parse_w_term(s), d);
    }
    Rat p = Rat::from_string(s.substr(0, split));
    std::string tail = s.substr(split); // includes the sign
    Rat q;
    if (tail[0] == '-')
        q = -parse_w_term(std::string_view(tail).substr(1));
    else
        q = parse_w_term(std::string_view(tail).substr(1));
    return QuadExt(std::move(p), std::move(q), d);
}

std::string QuadExt::str() const {
    if (q_.is_zero()) return p_.str();
    Rat absq = q_.sign() < 0 ? -q_ : q_;
    if (p_.is_zero()) return (q_.sign() < 0 ? "-" : "") + absq.str() + "*w";
    return p_.str() + (q_.sign() < 0 ? "-" : "+") + absq.str() + "*w";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

} // namespace exalg
