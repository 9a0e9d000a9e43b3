#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace coble {

// Worker count for fan-out sections: COBLE_LAB_THREADS when set (clamped to
// [1, 64]), otherwise min(hardware_concurrency, 4).
size_t worker_count();

// Runs job(chunk_index) for chunk_index in [0, n_chunks) across workers.
// Chunks are fixed before any thread starts, so callers that write only to
// their own chunk slot get results independent of the worker count.
void run_chunks(size_t n_chunks, const std::function<void(size_t)>& job);

// Partitions [0, n_items) into contiguous chunks, applies job to each, and
// concatenates the per-chunk outputs in chunk order. Output order is that of
// a serial left-to-right run regardless of parallelism.
template <typename Out>
std::vector<Out> parallel_map_ranges(
    size_t n_items,
    const std::function<std::vector<Out>(size_t begin, size_t end)>& job) {
    size_t workers = worker_count();
    size_t n_chunks = std::min(n_items, workers * 4);
    if (n_chunks == 0) return {};
    std::vector<std::vector<Out>> parts(n_chunks);
    run_chunks(n_chunks, [&](size_t c) {
        size_t begin = n_items * c / n_chunks;
        size_t end = n_items * (c + 1) / n_chunks;
        parts[c] = job(begin, end);
    });
    std::vector<Out> merged;
    for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
    return merged;
}

} // namespace coble
