#include "exalg/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace exalg::par {

namespace {

bool initial_state() {
#ifdef _OPENMP
    const char* env = std::getenv("EXALG_SERIAL");
    return !(env && env[0] == '1');
#else
    return false;
#endif
}

std::atomic<bool> g_enabled{initial_state()};

} // namespace

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }
void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

namespace detail {

void run_indexed(int n, const std::function<void(int)>& body, bool parallel) {
#ifdef _OPENMP
    if (parallel && n > 1) {
        std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
#pragma omp critical(exalg_par_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#else
    (void)parallel;
#endif
    for (int i = 0; i < n; ++i) body(i);
}

} // namespace detail

} // namespace exalg::par
