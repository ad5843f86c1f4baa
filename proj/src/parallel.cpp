#include "angle_extremes/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace angle_extremes {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ANGLE_EXTREMES_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
            // fall through to hardware detection
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_trials(long long trials, int threads, const std::function<void(long long)>& body) {
    if (trials <= 0) return;
    threads = resolve_threads(threads);
    if (threads > trials) threads = static_cast<int>(trials);
    if (threads <= 1) {
        for (long long t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                long long t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= trials) break;
                body(t);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace angle_extremes
