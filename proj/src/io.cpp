#include "exalg/io.hpp"

#include <fstream>
#include <sstream>

namespace exalg {

template <>
Rat parse_scalar<Rat>(std::string_view text, long) {
    return Rat::from_string(text);
}

template <>
QuadExt parse_scalar<QuadExt>(std::string_view text, long quad_d) {
    return QuadExt::from_string(text, quad_d);
}

template <>
std::string scalar_str<Rat>(const Rat& s) {
    return s.str();
}

template <>
std::string scalar_str<QuadExt>(const QuadExt& s) {
    return s.str();
}

template <ScalarField S>
std::vector<S> parse_coords(const std::string& text, int expected, long quad_d) {
    std::istringstream in(text);
    std::vector<S> out;
    std::string token;
    while (in >> token) out.push_back(parse_scalar<S>(token, quad_d));
    if (expected >= 0 && static_cast<int>(out.size()) != expected)
        throw ParseError("expected " + std::to_string(expected) + " coordinates, found " +
                         std::to_string(out.size()));
    return out;
}

template <ScalarField S>
std::string coords_str(const std::vector<S>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += scalar_str<S>(v[i]);
    }
    return out;
}

template <ScalarField S>
Subspace<S> read_subspace(std::istream& in, long quad_d) {
    int ambient = 0, rows = 0;
    if (!(in >> ambient >> rows)) throw ParseError("subspace header must be '<ambient> <rows>'");
    if (ambient <= 0 || rows < 0) throw ParseError("bad subspace header");
    std::vector<std::vector<S>> basis;
    std::string token;
    for (int r = 0; r < rows; ++r) {
        std::vector<S> row;
        for (int c = 0; c < ambient; ++c) {
            if (!(in >> token)) throw ParseError("subspace file ended early");
            row.push_back(parse_scalar<S>(token, quad_d));
        }
        basis.push_back(std::move(row));
    }
    return Subspace<S>::span(ambient, basis);
}

template <ScalarField S>
void write_subspace(std::ostream& out, const Subspace<S>& sub) {
    out << sub.ambient_dim() << ' ' << sub.dim() << '\n';
    for (int r = 0; r < sub.dim(); ++r) out << coords_str<S>(sub.basis_vector(r)) << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template std::vector<Rat> parse_coords<Rat>(const std::string&, int, long);
template std::vector<QuadExt> parse_coords<QuadExt>(const std::string&, int, long);
template std::string coords_str<Rat>(const std::vector<Rat>&);
template std::string coords_str<QuadExt>(const std::vector<QuadExt>&);
template Subspace<Rat> read_subspace<Rat>(std::istream&, long);
template Subspace<QuadExt> read_subspace<QuadExt>(std::istream&, long);
template void write_subspace<Rat>(std::ostream&, const Subspace<Rat>&);
template void write_subspace<QuadExt>(std::ostream&, const Subspace<QuadExt>&);

} // namespace exalg
