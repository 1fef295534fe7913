#include "cycloskew/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cycloskew::parallel {

namespace {

std::atomic<unsigned> g_jobs{0};
thread_local bool t_inside = false;

struct InsideGuard {
    bool saved;
    InsideGuard() : saved(t_inside) { t_inside = true; }
    ~InsideGuard() { t_inside = saved; }
};

void run_workers(unsigned workers, const std::function<void(unsigned)>& body)
{
    std::exception_ptr error;
    std::mutex error_mutex;
    auto guarded = [&](unsigned w) {
        InsideGuard guard;
        try {
            body(w);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers > 0 ? workers - 1 : 0);
    for (unsigned w = 1; w < workers; ++w) {
        threads.emplace_back(guarded, w);
    }
    guarded(0);
    for (auto& t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace

unsigned jobs()
{
    if (const char* env = std::getenv("CYCLOSKEW_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    if (unsigned set = g_jobs.load(); set > 0) {
        return set;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_jobs(unsigned n)
{
    g_jobs.store(n);
}

unsigned plan(std::size_t n, std::size_t grain)
{
    if (t_inside) {
        return 1;
    }
    const std::size_t by_size = std::max<std::size_t>(1, n / std::max<std::size_t>(1, grain));
    return static_cast<unsigned>(std::min<std::size_t>(jobs(), by_size));
}

void for_chunks(std::size_t n, unsigned workers,
                const std::function<void(std::size_t, std::size_t, unsigned)>& fn)
{
    workers = std::max(1u, workers);
    if (workers == 1) {
        fn(0, n, 0);
        return;
    }
    run_workers(workers, [&](unsigned w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        fn(begin, end, w);
    });
}

void for_tasks(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, n))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    run_workers(workers, [&](unsigned) {
        for (std::size_t i = next++; i < n; i = next++) {
            fn(i);
        }
    });
}

}  // namespace cycloskew::parallel
