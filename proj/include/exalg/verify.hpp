#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "exalg/flags.hpp"

namespace exalg {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Suites mirror the module invariants: cayley, albert, brown, fts, duality,
// ideals, flags.  "all" runs them in that order.  Deterministic for a fixed
// seed.
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

// TAP-ish report: "ok <n> <name>" / "not ok <n> <name> (<detail>)".
// Returns true when every check passed.
bool print_report(std::ostream& out, const std::vector<CheckResult>& results);

// Image of a subspace under a linear map.
RatSubspace apply_map(const RatMatrix& m, const RatSubspace& sub);

// Random word in the translation automorphisms and embedded norm
// similarities; invariance of classification under these is one of the flag
// suite checks.
RatMatrix random_invariance_word(const BrownCtx<Rat>& ctx, RandomSource& rng, int length);

} // namespace exalg
