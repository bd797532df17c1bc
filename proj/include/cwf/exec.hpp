#pragma once

#include <cstdint>

namespace cwf {

// Kernel execution policy. Every grid/ensemble kernel has a serial reference
// path; the OpenMP path must produce bit-identical results (per-element work
// is independent and reductions are replayed serially).
enum class Exec { serial, parallel };

template <typename Fn>
void parallel_for(std::int64_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) fn(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
    }
}

}  // namespace cwf
