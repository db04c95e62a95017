#include "exalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace exalg {

namespace {

std::string strip_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

} // namespace

Rat Rat::from_string(std::string_view text) {
    std::string s = strip_ws(text);
    if (s.empty()) throw ParseError("empty rational");
    // mpq accepts "a/b"; validate the character set first so stray input
    // fails here instead of deep inside GMP.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            ++slashes;
            continue;
        }
        if (c == '-' || c == '+') {
            if (i != 0 && s[i - 1] != '/') throw ParseError("bad sign in rational '" + s + "'");
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad character in rational '" + s + "'");
    }
    if (slashes > 1) throw ParseError("more than one '/' in rational '" + s + "'");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("unparsable rational '" + s + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(v);
}

void Rat::addmul(Rat& acc, const Rat& a, const Rat& b) {
    static thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(acc.v_.get_mpq_t(), acc.v_.get_mpq_t(), scratch.get_mpq_t());
}

void Rat::submul(Rat& acc, const Rat& a, const Rat& b) {
    static thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_sub(acc.v_.get_mpq_t(), acc.v_.get_mpq_t(), scratch.get_mpq_t());
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

Rat pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e < 0 ? base.inverse() : base;
    long n = e < 0 ? -e : e;
    Rat acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace exalg
