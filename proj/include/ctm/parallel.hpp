#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ctm {

/// Worker count: CTM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_worker_count();

/// Runs `work(chunk, acc)` for every chunk in [0, chunks) on `workers`
/// threads, each thread folding into its own accumulator. Returns the
/// per-worker accumulators in worker order. Callers combine them with an
/// associative, commutative operation so the result does not depend on the
/// schedule.
template <typename Acc>
std::vector<Acc> parallel_fold(std::uint64_t chunks, unsigned workers, const Acc& init,
                               const std::function<void(std::uint64_t, Acc&)>& work) {
    workers = std::max(1u, workers);
    if (chunks < workers) {
        workers = static_cast<unsigned>(std::max<std::uint64_t>(1, chunks));
    }
    std::vector<Acc> accs(workers, init);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&](unsigned w) {
        try {
            for (;;) {
                const std::uint64_t chunk = next.fetch_add(1);
                if (chunk >= chunks) {
                    break;
                }
                work(chunk, accs[w]);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next.store(chunks);
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(body, w);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return accs;
}

} // namespace ctm
