#ifndef CADE_PARALLEL_HPP
#define CADE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cade {

/// Run fn(i) for i in [0, n) on up to `workers` threads. Each index is
/// processed exactly once and writes only to its own slot, so the result is
/// identical for any worker count. The first exception (lowest index wins)
/// is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned team = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> threads;
    threads.reserve(team);
    for (unsigned w = 0; w < team; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
}

} // namespace cade

#endif
