#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>

#include "heisensym/error.hpp"

namespace heisensym {

struct Budget {
    std::uint64_t max_candidates = 100'000'000;
    // 0 disables the wall-clock limit.
    double max_seconds = 0.0;
};

/// Shared counter for a single search; safe to charge from several workers.
class BudgetMeter {
public:
    explicit BudgetMeter(Budget budget, std::string what = "search")
        : budget_(budget), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

    // Throws BudgetExceeded once the candidate count or deadline is passed.
    void charge(std::uint64_t n = 1) {
        std::uint64_t used = used_.fetch_add(n, std::memory_order_relaxed) + n;
        if (used > budget_.max_candidates) {
            fail(ErrorKind::BudgetExceeded, what_ + " passed " + std::to_string(budget_.max_candidates) + " candidates");
        }
        if (budget_.max_seconds > 0 && (used & 0xFFFU) == 0 && elapsed() > budget_.max_seconds) {
            fail(ErrorKind::BudgetExceeded, what_ + " passed " + std::to_string(budget_.max_seconds) + " s");
        }
    }

    std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    Budget budget_;
    std::string what_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> used_{0};
};

}  // namespace heisensym
