#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gfadm {

/// serial is the reference path; parallel distributes independent grid nodes over OpenMP
/// threads. Both perform the same floating-point operations per node, so results match bitwise.
enum class ExecutionPolicy { serial, parallel };

/// Calls body(i) for i in [0, n). The first exception thrown by any iteration is rethrown
/// on the calling thread after the loop.
template <class Body>
void for_each_index(ExecutionPolicy policy, std::size_t n, const Body& body) {
    if (policy == ExecutionPolicy::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(gfadm_for_each_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace gfadm
