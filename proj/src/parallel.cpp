#include "msot/parallel.hpp"

#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace msot::parallel {

namespace {

class Pool {
public:
    explicit Pool(int workers) {
        threads_.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            threads_.emplace_back([this, i] { run(i); });
    }

    ~Pool() {
        {
            std::lock_guard lock(mutex_);
            stop_ = true;
        }
        wake_.notify_all();
        for (auto& t : threads_) t.join();
    }

    int workers() const { return static_cast<int>(threads_.size()); }

    // Executes job(0 .. workers) from the worker threads plus job(workers)
    // from the caller; returns once all slots have finished.
    void dispatch(const std::function<void(int)>& job) {
        {
            std::lock_guard lock(mutex_);
            job_ = &job;
            pending_ = workers();
            ++generation_;
        }
        wake_.notify_all();
        job(workers());
        std::unique_lock lock(mutex_);
        done_.wait(lock, [this] { return pending_ == 0; });
        job_ = nullptr;
    }

private:
    void run(int slot) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(int)>* job = nullptr;
            {
                std::unique_lock lock(mutex_);
                wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
                job = job_;
            }
            (*job)(slot);
            {
                std::lock_guard lock(mutex_);
                if (--pending_ == 0) done_.notify_all();
            }
        }
    }

    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const std::function<void(int)>* job_ = nullptr;
    std::uint64_t generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

int g_threads = 0; // 0 = not yet resolved
std::unique_ptr<Pool> g_pool;
std::mutex g_pool_mutex;

int default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace

int threads() {
    std::lock_guard lock(g_pool_mutex);
    if (g_threads == 0) g_threads = default_threads();
    return g_threads;
}

void set_threads(int n) {
    std::lock_guard lock(g_pool_mutex);
    g_threads = n < 1 ? 1 : n;
    g_pool.reset();
}

void for_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    int nthreads;
    {
        std::lock_guard lock(g_pool_mutex);
        if (g_threads == 0) g_threads = default_threads();
        nthreads = g_threads;
        if (nthreads > 1 && n > 1 && !g_pool)
            g_pool = std::make_unique<Pool>(nthreads - 1);
    }
    if (nthreads <= 1 || n == 1) {
        fn(0, n);
        return;
    }
    const std::size_t slots = static_cast<std::size_t>(nthreads);
    const std::size_t chunk = (n + slots - 1) / slots;
    g_pool->dispatch([&](int slot) {
        const std::size_t begin = static_cast<std::size_t>(slot) * chunk;
        const std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin < end) fn(begin, end);
    });
}

} // namespace msot::parallel
