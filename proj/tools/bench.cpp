// Benchmark comparing the OpenMP kernels against their serial reference
// paths: Albert context construction (cross table), U-operator batches,
// the duality map, and an inner-ideal inspection.

#include <chrono>
#include <cstdio>

#include "exalg/ideals.hpp"
#include "exalg/parallel.hpp"
#include "exalg/verify.hpp"

using namespace exalg;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-32s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
    RandomSource rng(1);

    auto bench = [&](const char* name, const std::function<void()>& fn) {
        par::set_enabled(false);
        double serial = time_ms(fn);
        par::set_enabled(true);
        double parallel = time_ms(fn);
        report(name, serial, parallel);
    };

    bench("albert context build", [] { AlbertCtx<Rat> ctx; });

    par::set_enabled(true);
    BrownCtx<Rat> ctx{AlbertCtx<Rat>{}};
    FtsAlgebra alg = FtsAlgebra::from_split(ctx);
    std::vector<Vec> elems;
    for (int i = 0; i < 24; ++i) elems.push_back(alg.random_element(rng, true));

    bench("U-operator batch (24 elements)", [&] { alg.u_matrices(elems); });

    AlbertCtx<Rat> J;
    auto v = e6_canonical(J);
    bench("duality map of the 6-dim space", [&] { J.duality_map(v[4]); });

    auto ideals = canonical_ideals(ctx);
    bench("inspect 12-dim inner ideal", [&] { inspect_ideal(alg, ideals.back().space); });

    bench("descent algebra build (d=2)",
          [] { FtsAlgebra::from_descent(QuadDescent(2)); });

    return 0;
}
