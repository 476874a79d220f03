#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "chowq/fan.hpp"

namespace chowq::detail {

// Runs fn(i) for i in [0, n). Under Exec::Parallel the loop is split across
// OpenMP threads; the first exception thrown by any iteration is rethrown.
template <class Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
    std::exception_ptr err;
    std::mutex err_mutex;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace chowq::detail
