#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hbl {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path; `parallel` must produce bit-identical results.
enum class Exec { serial, parallel };

/// Policy used when a caller does not pass one explicitly.
Exec default_exec();
void set_default_exec(Exec e);

/// Runs fn(i) for i in [0, n). Exceptions thrown by fn are rethrown on the
/// calling thread (the first one wins).
template <class Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace hbl
