#include "folcup/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace folcup {

namespace {

int g_threads = 0;  // 0 = uninitialized, read env on first use

int env_threads()
{
    if (const char* s = std::getenv("FOLCUP_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1)
            return n;
    }
    return 1;
}

}  // namespace

int thread_count()
{
    if (g_threads == 0)
        g_threads = env_threads();
    return g_threads;
}

void set_thread_count(int n)
{
    g_threads = n >= 1 ? n : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const int workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                body(i);
            }
        });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace folcup
