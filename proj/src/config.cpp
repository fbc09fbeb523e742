#include "hitprob/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hitprob {

namespace {

std::size_t default_threads()
{
    if (const char* env = std::getenv("HITPROB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<std::size_t>(v);
    }
    std::size_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::atomic<std::size_t> g_threads{0};  // 0 = not initialised yet

}  // namespace

std::size_t thread_count()
{
    std::size_t t = g_threads.load(std::memory_order_relaxed);
    if (t == 0) {
        t = default_threads();
        g_threads.store(t, std::memory_order_relaxed);
    }
    return t;
}

void set_thread_count(std::size_t t)
{
    g_threads.store(t ? t : 1, std::memory_order_relaxed);
}

void parallel_for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn)
{
    if (n == 0)
        return;
    std::size_t t = std::min(thread_count(), n);
    if (t <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::size_t chunk = (n + t - 1) / t;
    for (std::size_t k = 0; k < t; ++k) {
        std::size_t lo = k * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace hitprob
