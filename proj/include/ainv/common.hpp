// Shared constants, error types, logging, and a small thread-pool-free
// parallel_for used for per-sample fan-out.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ainv {

inline constexpr double kPi = std::numbers::pi;

using Complex = std::complex<double>;

// Thrown when an iterative solve does not reach its tolerance; carries the
// final relative residual so callers can report it.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* v = std::getenv("AINV_LOG");
        if (!v) return LogLevel::Error;
        std::string s(v);
        if (s == "debug") return LogLevel::Debug;
        if (s == "info") return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

inline void log_msg(LogLevel lvl, const std::string& msg) {
    if (static_cast<int>(lvl) <= static_cast<int>(log_level())) {
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        std::cerr << (lvl == LogLevel::Error ? "[error] " : lvl == LogLevel::Info ? "[info] " : "[debug] ")
                  << msg << "\n";
    }
}

// Runs fn(i) for i in [0, count) on up to `threads` workers. Work is split in
// contiguous chunks; results must not depend on execution order (callers keep
// determinism by writing to disjoint slots).
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    int nthreads = threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : threads;
    if (nthreads < 1) nthreads = 1;
    if (static_cast<std::size_t>(nthreads) > count) nthreads = static_cast<int>(count);
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    std::size_t chunk = (count + static_cast<std::size_t>(nthreads) - 1) / static_cast<std::size_t>(nthreads);
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (int t = 0; t < nthreads; ++t) {
        std::size_t lo = static_cast<std::size_t>(t) * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ainv
