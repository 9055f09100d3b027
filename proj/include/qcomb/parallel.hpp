#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace qcomb {

// Deterministic parallel map: results are collected by index, so the output
// is identical for any worker count.
template <typename R>
std::vector<R> parallel_map(size_t count, const std::function<R(size_t)>& fn, int workers) {
    std::vector<R> out(count);
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

inline int default_workers() {
    const char* env = std::getenv("QCOMB_WORKERS");
    if (env) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

}  // namespace qcomb
