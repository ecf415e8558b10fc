#include <hexakit/parallel.hpp>

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hexakit {

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("HEXAKIT_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    unsigned want = 0;
    try {
        long v = std::stol(env);
        want = v < 1 ? 1u : static_cast<unsigned>(v);
    } catch (const std::exception&) {
        return hw;
    }
    return want > hw ? hw : want;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned t = thread_budget();
    if (t <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(t) > n) t = static_cast<unsigned>(n);

    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        workers.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += t) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace hexakit
