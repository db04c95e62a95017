#pragma once

#include <exception>
#include <functional>

namespace exalg::par {

// Process-wide switch between the OpenMP kernels and their serial reference
// paths.  Defaults to parallel when compiled with OpenMP; tests flip it to
// compare both paths bit for bit, and EXALG_SERIAL=1 in the environment
// forces serial.
bool enabled();
void set_enabled(bool on);

namespace detail {
void run_indexed(int n, const std::function<void(int)>& body, bool parallel);
}

// parallel_for(n, f): f(i) for i in [0, n), each iteration independent.
// Results must be written to per-index slots; exceptions are captured on the
// worker and rethrown on the caller.
template <typename F>
void parallel_for(int n, F&& f) {
    detail::run_indexed(n, std::function<void(int)>(std::forward<F>(f)), enabled());
}

template <typename F>
void serial_for(int n, F&& f) {
    for (int i = 0; i < n; ++i) f(i);
}

} // namespace exalg::par
