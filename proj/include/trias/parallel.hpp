#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace trias {

// Runs fn(i) for i in [0, count); work is split into contiguous chunks so the
// result layout (and therefore every report) is identical for any job count.
template <class Fn>
void parallel_for(size_t count, size_t jobs, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    jobs = std::min(jobs, count);
    std::vector<std::thread> ts;
    size_t chunk = (count + jobs - 1) / jobs;
    for (size_t t = 0; t < jobs; ++t) {
        size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        ts.emplace_back([lo, hi, &fn] {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : ts) t.join();
}

} // namespace trias
