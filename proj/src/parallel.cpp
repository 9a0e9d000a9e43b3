#include "coble/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace coble {

size_t worker_count() {
    if (const char* env = std::getenv("COBLE_LAB_THREADS")) {
        long v = std::atol(env);
        if (v < 1) v = 1;
        if (v > 64) v = 64;
        return static_cast<size_t>(v);
    }
    size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min<size_t>(hw, 4);
}

void run_chunks(size_t n_chunks, const std::function<void(size_t)>& job) {
    size_t workers = std::min(worker_count(), n_chunks);
    if (workers <= 1) {
        for (size_t c = 0; c < n_chunks; ++c) job(c);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto body = [&] {
        for (;;) {
            size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            try {
                job(c);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace coble
