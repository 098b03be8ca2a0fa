#include "coulscat/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coulscat {

void parallel_for_index(int n, const std::function<void(int)>& body)
{
    if (n <= 0) return;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 2;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace coulscat
