#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exalg/brown.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

// Text forms.  Scalars: "p/q" or "p" over Q, "p/q+r/s*w" with w the formal
// square root over Q(sqrt d).  Elements: coordinates as whitespace-separated
// tokens (8, 27 or 56 of them).  Subspace files: a first line "<ambient>
// <rows>", then one basis row per line.

template <ScalarField S>
S parse_scalar(std::string_view text, long quad_d);

template <ScalarField S>
std::string scalar_str(const S& s);

template <ScalarField S>
std::vector<S> parse_coords(const std::string& text, int expected, long quad_d);

template <ScalarField S>
std::string coords_str(const std::vector<S>& v);

template <ScalarField S>
Subspace<S> read_subspace(std::istream& in, long quad_d);

template <ScalarField S>
void write_subspace(std::ostream& out, const Subspace<S>& sub);

std::string read_file(const std::string& path);

} // namespace exalg
